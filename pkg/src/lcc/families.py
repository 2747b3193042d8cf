"""Generators for known deletion-correcting codes that are linear-congruence codes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .core import CodeSpec, ConstraintError, ValidationError, validate_and_normalize

FAMILIES = (
    "vt",
    "levenshtein",
    "helberg",
    "le_nguyen",
    "construction_cprime",
    "cse",
    "ternary_integer",
)


def _require_positive(family: str, **params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ConstraintError(family, f"{name} >= 1", f"got {name} = {value}")


def family_vt(n: int, b: int = 0) -> CodeSpec:
    """Varshamov-Tenengol'ts code VT_b(n): a = (1, ..., n), m = n + 1."""
    _require_positive("vt", n=n)
    return CodeSpec(n, 2, n + 1, tuple(range(1, n + 1)), b)


def family_levenshtein(n: int, m: int, b: int = 0) -> CodeSpec:
    _require_positive("levenshtein", n=n)
    if m < n + 1:
        raise ConstraintError("levenshtein", "m >= n + 1", f"got m = {m}, n = {n}")
    return CodeSpec(n, 2, m, tuple(range(1, n + 1)), b)


def sequence_le_nguyen(count: int, q: int, s: int) -> list[int]:
    """w_1..w_count where w_i = 1 + (q-1)(w_{i-1} + ... + w_{i-s}), w_i = 0 for i <= 0."""
    if s < 1:
        raise ConstraintError("le_nguyen", "s >= 1", f"got s = {s}")
    if q < 2:
        raise ConstraintError("le_nguyen", "q >= 2", f"got q = {q}")
    out: list[int] = []
    window = 0  # sum of the last s terms
    for i in range(count):
        w = 1 + (q - 1) * window
        out.append(w)
        window += w
        if i >= s:
            window -= out[i - s]
    return out


def sequence_helberg(count: int, s: int) -> list[int]:
    """v_1..v_count where v_i = 1 + v_{i-1} + ... + v_{i-s}, v_i = 0 for i <= 0."""
    if s < 1:
        raise ConstraintError("helberg", "s >= 1", f"got s = {s}")
    out: list[int] = []
    for i in range(count):
        out.append(1 + sum(out[max(0, i - s):i]))
    return out


def family_helberg(n: int, s: int, b: int = 0) -> CodeSpec:
    _require_positive("helberg", n=n, s=s)
    v = sequence_helberg(n + 1, s)
    return CodeSpec(n, 2, v[n], tuple(v[:n]), b)


def family_le_nguyen(n: int, q: int, s: int, m: int, b: int = 0) -> CodeSpec:
    _require_positive("le_nguyen", n=n, s=s)
    w = sequence_le_nguyen(n + 1, q, s)
    if m < w[n]:
        raise ConstraintError(
            "le_nguyen", "m >= w_{n+1}", f"got m = {m}, w_{{n+1}} = {w[n]}"
        )
    return CodeSpec(n, q, m, tuple(w[:n]), b)


def sequence_construction_cprime(n: int) -> list[int]:
    """c_{2i-1} = i and c_{2i} = n - i + 1, i.e. (1, n, 2, n-1, 3, ...)."""
    c = [0] * n
    for i in range(1, (n + 1) // 2 + 1):
        c[2 * i - 2] = i
    for i in range(1, n // 2 + 1):
        c[2 * i - 1] = n - i + 1
    return c


def family_construction_cprime(n: int, b: int) -> CodeSpec:
    _require_positive("construction_cprime", n=n)
    forbidden = {0, (n * (n + 1) // 2) % n}
    if b % n in forbidden:
        raise ConstraintError(
            "construction_cprime",
            "b != 0, n(n+1)/2 (mod n)",
            f"b = {b} is {b % n} mod {n}; excluded residues are "
            f"0 and {(n * (n + 1) // 2) % n}",
        )
    return CodeSpec(n, 2, n, tuple(sequence_construction_cprime(n)), b)


def sequence_cse(count: int, s: int) -> list[int]:
    """b_i = 2^(i-1) for i <= s, then b_i = 2^(s-1) + i - s."""
    return [2 ** (i - 1) if i <= s else 2 ** (s - 1) + i - s for i in range(1, count + 1)]


def family_cse(n: int, s: int) -> CodeSpec:
    """Consecutively systematic encodable code; the congruence is fixed to b = 0."""
    _require_positive("cse", n=n, s=s)
    if not 0 < n - s < 2 ** (s - 1):
        raise ConstraintError(
            "cse", "0 < n - s < 2^(s-1)", f"got n - s = {n - s}, 2^(s-1) = {2 ** (s - 1)}"
        )
    return CodeSpec(n, 2, 2 ** (s + 1), tuple(sequence_cse(n, s)), 0)


def sequence_ternary(count: int) -> list[int]:
    return [2**i - 1 for i in range(1, count + 1)]


def family_ternary(n: int, b: int = 0) -> CodeSpec:
    _require_positive("ternary_integer", n=n)
    return CodeSpec(n, 3, 2 ** (n + 1) - 1, tuple(sequence_ternary(n)), b)


def lehmer_solvable(a: Sequence[int], m: int, b: int) -> bool:
    """Whether a.x = b (mod m) has a solution with x in Z_m^n.

    True exactly when gcd(a_1, ..., a_n, m) divides b. This speaks about the
    alphabet Z_m only; for a code over Z_q with q != m it is a hint, not an
    answer, and emptiness has to be decided by counting.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = math.gcd(m, *a)
    return b % g == 0


@dataclass(frozen=True)
class FamilyDescriptor:
    family: str
    params: dict[str, int] = field(default_factory=dict)
    resolved: CodeSpec | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "spec": self.resolved.to_dict() if self.resolved else None,
        }


# family name -> (generator, required params, optional params with defaults)
_GENERATORS: dict[str, tuple[Callable[..., CodeSpec], tuple[str, ...], dict[str, int]]] = {
    "vt": (family_vt, ("n",), {"b": 0}),
    "levenshtein": (family_levenshtein, ("n", "m"), {"b": 0}),
    "helberg": (family_helberg, ("n", "s"), {"b": 0}),
    "le_nguyen": (family_le_nguyen, ("n", "q", "s", "m"), {"b": 0}),
    "construction_cprime": (family_construction_cprime, ("n", "b"), {}),
    "cse": (family_cse, ("n", "s"), {}),
    "ternary_integer": (family_ternary, ("n",), {"b": 0}),
}


def family_params(family: str) -> tuple[tuple[str, ...], dict[str, int]]:
    if family not in _GENERATORS:
        raise ValidationError(
            f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}"
        )
    _, required, optional = _GENERATORS[family]
    return required, dict(optional)


def describe(family: str, **params: int | None) -> FamilyDescriptor:
    """Resolve a family request into a validated spec.

    Parameters the family does not use must be absent (or None), except that
    ``b = 0`` is accepted for the consecutively systematic family whose
    congruence is fixed at zero.
    """
    required, optional = family_params(family)
    gen = _GENERATORS[family][0]
    given = {k: int(v) for k, v in params.items() if v is not None}
    missing = [k for k in required if k not in given]
    if missing:
        raise ValidationError(f"{family}: missing parameter(s) {', '.join(missing)}")
    if family == "cse" and "b" in given:
        b = given.pop("b")
        if b % 2 ** (given["s"] + 1) != 0:
            raise ConstraintError("cse", "b = 0", f"got b = {b}")
    extra = sorted(set(given) - set(required) - set(optional))
    if extra:
        raise ValidationError(f"{family}: unexpected parameter(s) {', '.join(extra)}")
    kwargs = {**optional, **given}
    spec = gen(**kwargs)
    validate_and_normalize(spec)
    return FamilyDescriptor(family, kwargs, spec)


def from_request(request: dict[str, Any]) -> FamilyDescriptor:
    """Handle ``{"family": name, "params": {...}}``."""
    if "family" not in request:
        raise ValidationError("family request needs a 'family' field")
    params = request.get("params") or {}
    if not isinstance(params, dict):
        raise ValidationError("'params' must be an object")
    return describe(str(request["family"]), **params)
