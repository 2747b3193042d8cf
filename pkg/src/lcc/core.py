"""Domain types shared by the engines: code parameters, weight enumerators, errors."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Any, Iterable, Sequence


class LCCError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LCCError, ValueError):
    """Bad user input: malformed parameters or a violated family constraint."""


class DimensionMismatchError(ValidationError):
    pass


class AlphabetSizeError(ValidationError):
    pass


class ModulusError(ValidationError):
    pass


class LengthError(ValidationError):
    pass


class AlphabetRangeError(ValidationError):
    pass


class ConstraintError(ValidationError):
    """A family generator was called with parameters its definition forbids."""

    def __init__(self, family: str, constraint: str, detail: str = "") -> None:
        self.family = family
        self.constraint = constraint
        msg = f"{family}: constraint {constraint} violated"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class EngineError(LCCError, RuntimeError):
    """An engine could not produce a trustworthy answer."""


class PrecisionOverflowError(EngineError):
    pass


class ResidualTooLargeError(EngineError):
    pass


class EnumerationCapError(EngineError):
    def __init__(self, count: int, cap: int) -> None:
        self.count = count
        self.cap = cap
        super().__init__(
            f"brute force would enumerate {count} vectors, above the cap of {cap}"
        )


class ResourceError(EngineError):
    pass


@dataclass(frozen=True)
class CodeSpec:
    """The code {x in Z_q^n : a.x = b (mod m)}.

    Construction does not validate; pass raw input through
    :func:`validate_and_normalize` before handing it to an engine.
    """

    n: int
    q: int
    m: int
    a: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))

    def with_b(self, b: int) -> CodeSpec:
        return CodeSpec(self.n, self.q, self.m, self.a, b)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "q": self.q, "m": self.m, "a": list(self.a), "b": self.b}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CodeSpec:
        missing = {"n", "q", "m", "a", "b"} - set(data)
        if missing:
            raise ValidationError(f"spec is missing field(s): {', '.join(sorted(missing))}")
        try:
            return cls(int(data["n"]), int(data["q"]), int(data["m"]),
                       tuple(int(v) for v in data["a"]), int(data["b"]))
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"spec fields must be integers: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> CodeSpec:
        return cls.from_dict(json.loads(text))


def validate_and_normalize(spec: CodeSpec) -> CodeSpec:
    """Check dimensions and reduce every a_i and b into {0, ..., m-1}.

    Only residues mod m enter the congruence, so the returned spec
    defines exactly the same code.
    """
    if spec.n < 1:
        raise LengthError(f"code length n must be >= 1, got {spec.n}")
    if len(spec.a) != spec.n:
        raise DimensionMismatchError(
            f"coefficient vector has length {len(spec.a)} but n = {spec.n}"
        )
    if spec.q < 2:
        raise AlphabetSizeError(f"alphabet size q must be >= 2, got {spec.q}")
    if spec.m < 1:
        raise ModulusError(f"modulus m must be >= 1, got {spec.m}")
    m = spec.m
    return CodeSpec(spec.n, spec.q, m, tuple(v % m for v in spec.a), spec.b % m)


def weight_of(x: Iterable[int], q: int | None = None) -> int:
    """Hamming weight of ``x``; with ``q`` given, entries must lie in Z_q."""
    w = 0
    for v in x:
        if q is not None and not 0 <= v < q:
            raise AlphabetRangeError(f"symbol {v} outside Z_{q}")
        if v:
            w += 1
    return w


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients (A_0, ..., A_n) of W_C(z) = sum over codewords of z^wt(x)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def evaluate(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def binomial_expansion(n: int, q: int) -> tuple[int, ...]:
    """Coefficients of (1 + (q-1) z)^n, the enumerator of all of Z_q^n."""
    return tuple(comb(n, i) * (q - 1) ** i for i in range(n + 1))


def parse_int_list(text: str | Sequence[int]) -> tuple[int, ...]:
    if not isinstance(text, str):
        return tuple(int(v) for v in text)
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(" ", ",").split(",") if tok)
    except ValueError:
        raise ValidationError(f"cannot parse integer list {text!r}") from None
