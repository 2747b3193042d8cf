"""Residue sweeps and cross-engine comparison."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Any, Iterable

from .core import CodeSpec, LCCError, WeightEnumerator, binomial_expansion, validate_and_normalize
from .engines import Engine, EngineReport, build_table, run_engine


class SweepInconsistency(LCCError, AssertionError):
    """The per-residue enumerators did not add up to the whole space."""


@dataclass(frozen=True)
class SweepRow:
    b: int
    enumerator: WeightEnumerator

    @property
    def size(self) -> int:
        return self.enumerator.size


@dataclass(frozen=True)
class SweepResult:
    spec: CodeSpec  # b is irrelevant here and stored as 0
    rows: tuple[SweepRow, ...]
    totals: tuple[int, ...]
    family: str | None = None
    elapsed: float = 0.0

    def sizes(self) -> list[int]:
        return [row.size for row in self.rows]

    def header(self) -> list[str]:
        return ["b", "size"] + [f"A_{i}" for i in range(self.spec.n + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header())
        for row in self.rows:
            writer.writerow([row.b, row.size, *row.enumerator.coeffs])
        writer.writerow(["total", sum(self.totals), *self.totals])
        return buf.getvalue()

    def to_dict(self) -> dict[str, Any]:
        spec = self.spec.to_dict()
        del spec["b"]
        return {
            "spec": spec,
            "family": self.family,
            "rows": [
                {"b": r.b, "size": str(r.size), "coeffs": r.enumerator.to_strings()}
                for r in self.rows
            ],
            "totals": {"size": str(sum(self.totals)), "coeffs": [str(c) for c in self.totals]},
            "elapsed_ms": self.elapsed * 1000.0,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def sweep_b(spec: CodeSpec, family: str | None = None) -> SweepResult:
    """Enumerators of C_b for every b in Z_m, from a single table build."""
    start = time.perf_counter()
    spec = validate_and_normalize(spec.with_b(0))
    table = build_table(spec)
    rows = tuple(SweepRow(b, WeightEnumerator(table.row(b))) for b in range(spec.m))
    totals = tuple(sum(col) for col in zip(*(r.enumerator.coeffs for r in rows)))
    expected = binomial_expansion(spec.n, spec.q)
    if totals != expected:
        raise SweepInconsistency(
            f"residue classes sum to {totals}, expected (1+(q-1)z)^n = {expected}"
        )
    return SweepResult(spec, rows, totals, family, time.perf_counter() - start)


@dataclass
class CheckReport:
    spec: CodeSpec
    reports: dict[Engine, EngineReport] = field(default_factory=dict)
    # (engine, engine, index) of the first coefficient where two engines differ
    mismatch: tuple[Engine, Engine, int] | None = None

    @property
    def agree(self) -> bool:
        return self.mismatch is None

    @property
    def dft_residual(self) -> float | None:
        rep = self.reports.get(Engine.DFT)
        return rep.residual if rep else None

    def summary(self) -> str:
        if self.agree:
            return "AGREE"
        e1, e2, i = self.mismatch
        return (
            f"DISAGREE: {e1} and {e2} differ at A_{i} "
            f"({self.reports[e1].coeffs[i]} vs {self.reports[e2].coeffs[i]})"
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "agree": self.agree,
            "mismatch": (
                None if self.mismatch is None
                else {"engines": [str(self.mismatch[0]), str(self.mismatch[1])],
                      "index": self.mismatch[2]}
            ),
            "dft_residual": self.dft_residual,
            "reports": {str(k): v.to_dict() for k, v in self.reports.items()},
        }


def cross_check(
    spec: CodeSpec,
    engines: Iterable[Engine | str] = (Engine.EXACT, Engine.DFT, Engine.BRUTE),
    *,
    force_dft: bool = False,
    brute_cap: int | None = None,
) -> CheckReport:
    """Run each engine on ``spec`` and compare the enumerators coefficientwise.

    Engines are compared against the first one listed; the first differing
    coefficient is recorded.
    """
    spec = validate_and_normalize(spec)
    order: list[Engine] = []
    for e in engines:
        e = Engine(e)
        if e not in order:
            order.append(e)
    report = CheckReport(spec)
    for e in order:
        report.reports[e] = run_engine(spec, e, force_dft=force_dft, brute_cap=brute_cap)
    base = order[0]
    for other in order[1:]:
        lhs, rhs = report.reports[base].coeffs, report.reports[other].coeffs
        for i, (x, y) in enumerate(zip(lhs, rhs)):
            if x != y:
                report.mismatch = (base, other, i)
                return report
    return report
