"""Three independent ways to compute the weight enumerator of a linear-congruence code.

* ``exact`` -- integer dynamic programme over the group algebra of Z_m with a
  weight-marking variable; no floating point anywhere.
* ``dft``   -- literal floating-point evaluation of the exponential-sum formula
  (1/m) sum_j e(-jb/m) prod_i (1 + z e(a_i j/m) + ... + z e(a_i (q-1) j/m)),
  rounded to integers.
* ``brute`` -- enumeration of all of Z_q^n; the ground-truth oracle.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
import time
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .core import (
    CodeSpec,
    EnumerationCapError,
    PrecisionOverflowError,
    ResidualTooLargeError,
    ResourceError,
    WeightEnumerator,
    validate_and_normalize,
)

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _bigint = int

DEFAULT_BRUTE_CAP = 2**24
BRUTE_CAP_ENV = "LCC_BRUTE_CAP"

# Largest coefficient magnitude, in bits, the dft engine will round without
# being forced. Doubles represent every integer below 2**53 exactly.
DFT_ENVELOPE_BITS = 50

# Refuse exact-engine tables whose two live copies would exceed this many bytes.
EXACT_MEMORY_LIMIT = 3 * 2**30


class Engine(str, enum.Enum):
    EXACT = "exact"
    DFT = "dft"
    BRUTE = "brute"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EngineReport:
    enumerator: WeightEnumerator
    engine: Engine
    residual: float = 0.0
    elapsed: float = 0.0  # seconds

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.enumerator.coeffs

    @property
    def size(self) -> int:
        return self.enumerator.size

    def to_dict(self) -> dict[str, Any]:
        return {
            "coeffs": self.enumerator.to_strings(),
            "engine": self.engine.value,
            "residual": float(self.residual),
            "elapsed_ms": self.elapsed * 1000.0,
        }


# --------------------------------------------------------------------------
# exact engine
# --------------------------------------------------------------------------

class GroupRingTable:
    """Counts of prefix vectors by (partial dot product mod m, Hamming weight).

    After absorbing coordinates with coefficients a_1..a_k, ``entry(r, w)`` is
    the number of x in Z_q^k with a.x = r (mod m) and wt(x) = w.

    Each residue row is stored as a single big integer holding its weight
    polynomial at z = 2**slot_bits (Kronecker substitution), so multiplying a
    row by z is one shift. ``slot_bits`` is chosen so that no count can spill
    into the next slot: every count is at most q**n.
    """

    def __init__(self, m: int, n: int, q: int) -> None:
        if m < 1 or n < 0 or q < 2:
            raise ValueError("need m >= 1, n >= 0, q >= 2")
        self.m = m
        self.n = n
        self.q = q
        self.slot_bits = max(8, ((q**n).bit_length() + 7) // 8 * 8)
        self.absorbed = 0
        self.rows: list = [_bigint(0)] * m
        self.rows[0] = _bigint(1)

    def absorb(self, a: int) -> None:
        """Multiply in the factor 1 + z x^a + z x^{2a} + ... + z x^{(q-1)a}."""
        if self.absorbed >= self.n:
            raise ValueError(f"table sized for {self.n} coordinates is full")
        m, rows = self.m, self.rows
        a %= m
        # moved[r] collects every row r - a v for v = 1..q-1; those words gain
        # one nonzero symbol, hence the single shift below.
        moved = None
        for v in range(1, self.q):
            s = (a * v) % m
            rot = rows[-s:] + rows[:-s] if s else rows
            moved = rot if moved is None else [x + y for x, y in zip(moved, rot)]
        bits = self.slot_bits
        self.rows = [x + (y << bits) for x, y in zip(rows, moved)]
        self.absorbed += 1

    def absorb_all(self, coefficients: Sequence[int]) -> GroupRingTable:
        for a in coefficients:
            self.absorb(a)
        return self

    def row(self, r: int) -> tuple[int, ...]:
        """Weight counts (w = 0..n) for residue r."""
        return _unpack(self.rows[r % self.m], self.n + 1, self.slot_bits)

    def entry(self, r: int, w: int) -> int:
        return self.row(r)[w]

    @property
    def entries(self) -> list[tuple[int, ...]]:
        return [self.row(r) for r in range(self.m)]

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    @staticmethod
    def estimated_bytes(m: int, n: int, q: int) -> int:
        slot = ((q**n).bit_length() + 7) // 8
        return 2 * m * (n + 1) * slot


def _unpack(value, slots: int, slot_bits: int) -> tuple[int, ...]:
    width = slot_bits // 8
    raw = int(value).to_bytes(slots * width, "little")
    return tuple(
        int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(slots)
    )


def build_table(spec: CodeSpec, memory_limit: int | None = None) -> GroupRingTable:
    """Run the exact dynamic programme over every coordinate of ``spec``."""
    spec = validate_and_normalize(spec)
    limit = EXACT_MEMORY_LIMIT if memory_limit is None else memory_limit
    need = GroupRingTable.estimated_bytes(spec.m, spec.n, spec.q)
    if need > limit:
        raise ResourceError(
            f"exact table needs about {need} bytes, above the limit of {limit}"
        )
    try:
        return GroupRingTable(spec.m, spec.n, spec.q).absorb_all(spec.a)
    except MemoryError:
        raise ResourceError("ran out of memory building the exact table") from None


def enumerate_exact(spec: CodeSpec, memory_limit: int | None = None) -> EngineReport:
    start = time.perf_counter()
    spec = validate_and_normalize(spec)
    table = build_table(spec, memory_limit)
    enum_ = WeightEnumerator(table.row(spec.b))
    return EngineReport(enum_, Engine.EXACT, 0.0, time.perf_counter() - start)


def residue_counts(spec: CodeSpec) -> list[int]:
    """Number of x in Z_q^n with a.x = r (mod m), for every r.

    The weight variable is specialised to z = 1, which drops a factor of n
    from both time and memory relative to the full table.
    """
    spec = validate_and_normalize(spec)
    m, q = spec.m, spec.q
    counts: list = [_bigint(0)] * m
    counts[0] = _bigint(1)
    for a in spec.a:
        acc = counts
        for v in range(1, q):
            s = (a * v) % m
            rot = counts[-s:] + counts[:-s] if s else counts
            acc = [x + y for x, y in zip(acc, rot)]
        counts = acc
    return [int(c) for c in counts]


# --------------------------------------------------------------------------
# dft engine
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorPolynomial:
    """The factor 1 + s z contributed by coefficient a_i at root index j."""

    a: int
    j: int
    z_coeff: complex

    @property
    def constant(self) -> int:
        return 1

    def at(self, z: complex) -> complex:
        return 1 + self.z_coeff * z


def unit_root(r: int, m: int) -> complex:
    """e(r/m) = exp(2 pi i r/m), with r reduced exactly before going to floats."""
    r %= m
    if r == 0:
        return 1 + 0j
    theta = 2.0 * math.pi * r / m
    return complex(math.cos(theta), math.sin(theta))


def factor_polynomial(a: int, j: int, m: int, q: int) -> FactorPolynomial:
    """Build 1 + z (e(a j/m) + e(2 a j/m) + ... + e((q-1) a j/m)).

    The inner sum is taken term by term over the unit circle. When a j = 0
    (mod m) every term is exactly 1, and the coefficient is q - 1 exactly.
    """
    step = (a * j) % m
    if step == 0:
        return FactorPolynomial(a, j, complex(q - 1, 0.0))
    s = 0j
    for v in range(1, q):
        s += unit_root(step * v, m)
    return FactorPolynomial(a, j, s)


def dft_envelope_bits(n: int, q: int) -> float:
    """log2 of an upper bound on the largest weight-enumerator coefficient."""
    return n * math.log2(max(q - 1, 1)) + math.log2(math.comb(n, n // 2))


def _factor_matrix(spec: CodeSpec) -> np.ndarray:
    """z-coefficients s[j-1, i] of every factor, j = 1..m, i = 1..n."""
    m, q = spec.m, spec.q
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    roots[0] = 1.0 + 0.0j
    js = np.arange(1, m + 1, dtype=object if m >= 2**31 else np.int64)
    a = np.array(spec.a, dtype=js.dtype)
    steps = np.mod(np.multiply.outer(js, a), m)
    s = np.zeros(steps.shape, dtype=np.complex128)
    for v in range(1, q):
        s += roots[np.mod(steps * v, m).astype(np.int64)]
    s[steps == 0] = q - 1
    return s


def _round_half_away(x: np.ndarray) -> np.ndarray:
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def _twiddles(spec: CodeSpec) -> np.ndarray:
    # e(-j b / m) for j = 1..m
    m = spec.m
    r = np.array([(-j * spec.b) % m for j in range(1, m + 1)], dtype=np.float64)
    out = np.exp(2j * np.pi * r / m)
    out[r == 0] = 1.0 + 0.0j
    return out


def _finish_dft(values: np.ndarray) -> tuple[list[int], float]:
    rounded = _round_half_away(values.real)
    residual = float(np.max(np.abs(values - rounded))) if values.size else 0.0
    if not residual < 0.5:
        raise ResidualTooLargeError(
            f"dft residual {residual:.3g} is not below 0.5; rounding is unsafe"
        )
    return [int(v) for v in rounded], residual


def enumerate_dft(spec: CodeSpec, force: bool = False) -> EngineReport:
    start = time.perf_counter()
    spec = validate_and_normalize(spec)
    n, m = spec.n, spec.m
    bits = dft_envelope_bits(n, spec.q)
    if bits > DFT_ENVELOPE_BITS and not force:
        raise PrecisionOverflowError(
            f"coefficients may need {bits:.1f} bits, beyond the "
            f"{DFT_ENVELOPE_BITS}-bit double-precision envelope; pass force to override"
        )
    s = _factor_matrix(spec)
    # one length-(n+1) polynomial per root index j
    poly = np.zeros((m, n + 1), dtype=np.complex128)
    poly[:, 0] = 1.0
    for i in range(n):
        poly[:, 1:i + 2] = poly[:, 1:i + 2] + s[:, i:i + 1] * poly[:, 0:i + 1]
    values = (_twiddles(spec) @ poly) / m
    coeffs, residual = _finish_dft(values)
    return EngineReport(
        WeightEnumerator(coeffs), Engine.DFT, residual, time.perf_counter() - start
    )


def size_dft(spec: CodeSpec, force: bool = False) -> tuple[int, float]:
    """|C| from the formula at z = 1, without materialising the coefficients."""
    spec = validate_and_normalize(spec)
    bits = spec.n * math.log2(spec.q)
    if bits > DFT_ENVELOPE_BITS and not force:
        raise PrecisionOverflowError(
            f"code size may need {bits:.1f} bits, beyond the "
            f"{DFT_ENVELOPE_BITS}-bit double-precision envelope; pass force to override"
        )
    s = _factor_matrix(spec)
    prods = np.prod(1.0 + s, axis=1)
    value = (_twiddles(spec) @ prods) / spec.m
    (size,), residual = _finish_dft(np.array([value]))
    return size, residual


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------

def brute_cap() -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BRUTE_CAP


def enumerate_brute(spec: CodeSpec, cap: int | None = None) -> EngineReport:
    """Walk every x in Z_q^n, keep those with a.x = b (mod m), histogram weights."""
    start = time.perf_counter()
    spec = validate_and_normalize(spec)
    n, q, m = spec.n, spec.q, spec.m
    cap = brute_cap() if cap is None else cap
    total = q**n
    if total > cap:
        raise EnumerationCapError(total, cap)
    if m * q < 2**60:
        hist = _brute_numpy(spec)
    else:
        hist = [0] * (n + 1)
        for x in itertools.product(range(q), repeat=n):
            if sum(ai * xi for ai, xi in zip(spec.a, x)) % m == spec.b:
                hist[sum(1 for xi in x if xi)] += 1
    return EngineReport(
        WeightEnumerator(hist), Engine.BRUTE, 0.0, time.perf_counter() - start
    )


def _brute_numpy(spec: CodeSpec, chunk: int = 2**18) -> list[int]:
    n, q, m = spec.n, spec.q, spec.m
    total = q**n
    hist = np.zeros(n + 1, dtype=np.int64)
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        dot = np.zeros_like(idx)
        wt = np.zeros_like(idx)
        for ai in spec.a:
            digit = idx % q
            idx //= q
            dot = (dot + ai * digit) % m
            wt += digit != 0
        hist += np.bincount(wt[dot == spec.b], minlength=n + 1)
    return [int(v) for v in hist]


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------

def run_engine(
    spec: CodeSpec,
    engine: Engine | str = Engine.EXACT,
    *,
    force_dft: bool = False,
    brute_cap: int | None = None,
) -> EngineReport:
    engine = Engine(engine)
    if engine is Engine.EXACT:
        return enumerate_exact(spec)
    if engine is Engine.DFT:
        return enumerate_dft(spec, force=force_dft)
    return enumerate_brute(spec, cap=brute_cap)


def code_size(
    spec: CodeSpec,
    engine: Engine | str = Engine.EXACT,
    *,
    force_dft: bool = False,
    brute_cap: int | None = None,
) -> int:
    """|C| = W_C(1).

    The exact and dft engines evaluate at z = 1 directly instead of building
    the full enumerator; brute force sums its histogram.
    """
    engine = Engine(engine)
    spec = validate_and_normalize(spec)
    if engine is Engine.EXACT:
        return residue_counts(spec)[spec.b]
    if engine is Engine.DFT:
        return size_dft(spec, force=force_dft)[0]
    return enumerate_brute(spec, cap=brute_cap).size


def roots_filter(m: int, t: int) -> int:
    """(1/m) sum_{j=1}^m e(jt/m): 1 when m divides t, otherwise 0."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return 1 if t % m == 0 else 0
