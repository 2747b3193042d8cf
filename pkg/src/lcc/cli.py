"""Command-line front end.

Exit status: 0 on success, 1 for invalid input or a violated family
constraint, 2 when an engine fails (cap, precision, residual, resources) or
engines disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .analysis import cross_check, sweep_b
from .core import CodeSpec, EngineError, LCCError, ValidationError, parse_int_list
from .engines import Engine, code_size, run_engine
from .families import FAMILIES, describe, from_request

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ENGINE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage problems are input errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _spec_args(p: argparse.ArgumentParser, with_b: bool = True) -> None:
    src = p.add_argument_group("code parameters")
    src.add_argument("--spec", type=Path, help="JSON file holding a spec or a family request")
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--n", type=int)
    src.add_argument("--q", type=int)
    src.add_argument("--m", type=int)
    src.add_argument("--a", type=parse_int_list, help="comma-separated coefficients")
    if with_b:
        src.add_argument("--b", type=int)
    src.add_argument("--s", type=int, help="sequence parameter for helberg/le_nguyen/cse")


def _output_args(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument("--emit", choices=("json", "csv", "text"), default=default)


def _engine_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--force-dft", action="store_true",
                   help="run the dft engine outside its precision envelope")
    p.add_argument("--brute-cap", type=int, help="override the brute-force vector cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcc", description="Weight enumerators of linear-congruence codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="weight enumerator A_0..A_n")
    _spec_args(p)
    p.add_argument("--engine", choices=[e.value for e in Engine], default="exact")
    _engine_args(p)
    _output_args(p)

    p = sub.add_parser("size", help="code size |C|")
    _spec_args(p)
    p.add_argument("--engine", choices=[e.value for e in Engine], default="exact")
    _engine_args(p)
    _output_args(p)

    p = sub.add_parser("sweep", help="enumerators for every b in Z_m")
    _spec_args(p)
    _output_args(p, default="csv")

    p = sub.add_parser("check", help="compare engines on one spec")
    _spec_args(p)
    p.add_argument("--engines", default="exact,dft,brute")
    _engine_args(p)
    _output_args(p)

    p = sub.add_parser("family", help="resolve a family to its spec")
    _spec_args(p)
    _output_args(p, default="json")
    return parser


def _family_params(args: argparse.Namespace) -> dict[str, int | None]:
    return {k: getattr(args, k, None) for k in ("n", "q", "m", "b", "s")}


def resolve_spec(args: argparse.Namespace) -> tuple[CodeSpec, str | None]:
    """Turn the parsed flags into a spec; exactly one source is allowed."""
    inline = any(getattr(args, k, None) is not None for k in ("n", "q", "m", "a", "b", "s"))
    if args.spec is not None:
        if args.family is not None or inline:
            raise ValidationError("--spec cannot be combined with --family or inline parameters")
        try:
            data = json.loads(args.spec.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read spec file {args.spec}: {exc}") from None
        if isinstance(data, dict) and "family" in data:
            desc = from_request(data)
            return desc.resolved, desc.family
        if not isinstance(data, dict):
            raise ValidationError("spec file must hold a JSON object")
        return CodeSpec.from_dict(data), None
    if args.family is not None:
        if args.a is not None:
            raise ValidationError("--a cannot be combined with --family")
        desc = describe(args.family, **_family_params(args))
        return desc.resolved, desc.family
    if args.a is None or args.m is None:
        raise ValidationError("give --spec, --family, or at least --m and --a")
    if args.s is not None:
        raise ValidationError("--s only applies together with --family")
    n = args.n if args.n is not None else len(args.a)
    q = args.q if args.q is not None else 2
    b = getattr(args, "b", None)
    return CodeSpec(n, q, args.m, args.a, 0 if b is None else b), None


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _cmd_enumerate(args, spec: CodeSpec, family: str | None) -> int:
    report = run_engine(spec, args.engine, force_dft=args.force_dft, brute_cap=args.brute_cap)
    if args.emit == "json":
        out = {"spec": spec.to_dict(), **report.to_dict()}
        if family:
            out["family"] = family
        print(json.dumps(out))
    elif args.emit == "csv":
        print(_csv([("weight", "count"), *enumerate(report.coeffs)]), end="")
    else:
        print(f"W(z) = {report.enumerator}")
        print(f"size = {report.size}")
        if report.engine is Engine.DFT:
            print(f"residual = {report.residual:.3g}")
    return EXIT_OK


def _cmd_size(args, spec: CodeSpec, family: str | None) -> int:
    size = code_size(spec, args.engine, force_dft=args.force_dft, brute_cap=args.brute_cap)
    if args.emit == "json":
        print(json.dumps({"spec": spec.to_dict(), "engine": args.engine, "size": str(size)}))
    elif args.emit == "csv":
        print(_csv([("size",), (size,)]), end="")
    else:
        print(size)
    return EXIT_OK


def _cmd_sweep(args, spec: CodeSpec, family: str | None) -> int:
    result = sweep_b(spec, family)
    if args.emit == "json":
        print(result.to_json())
    elif args.emit == "csv":
        print(result.to_csv(), end="")
    else:
        for row in result.rows:
            print(f"b={row.b}: size={row.size}  W(z) = {row.enumerator}")
        print(f"total: {sum(result.totals)}")
    return EXIT_OK


def _cmd_check(args, spec: CodeSpec, family: str | None) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in {x.value for x in Engine}:
            raise ValidationError(f"unknown engine {e!r}")
    report = cross_check(spec, engines, force_dft=args.force_dft, brute_cap=args.brute_cap)
    if args.emit == "json":
        print(json.dumps(report.to_dict()))
    elif args.emit == "csv":
        rows = [("engine", "residual", *[f"A_{i}" for i in range(spec.n + 1)])]
        for e, rep in report.reports.items():
            rows.append((e.value, rep.residual, *rep.coeffs))
        print(_csv(rows), end="")
    else:
        print(report.summary())
    return EXIT_OK if report.agree else EXIT_ENGINE


def _cmd_family(args, spec: CodeSpec, family: str | None) -> int:
    if args.emit == "json":
        print(spec.to_json())
    elif args.emit == "csv":
        print(_csv([("n", "q", "m", "b", "a"), (spec.n, spec.q, spec.m, spec.b,
                                                 " ".join(map(str, spec.a)))]), end="")
    else:
        print(f"{family or 'custom'}: n={spec.n} q={spec.q} m={spec.m} b={spec.b}")
        print("a = (" + ", ".join(map(str, spec.a)) + ")")
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "size": _cmd_size,
    "sweep": _cmd_sweep,
    "check": _cmd_check,
    "family": _cmd_family,
}


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec, family = resolve_spec(args)
        return _COMMANDS[args.command](args, spec, family)
    except ValidationError as exc:
        print(f"lcc: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (EngineError, LCCError) as exc:
        print(f"lcc: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


def main() -> None:
    sys.exit(run())
