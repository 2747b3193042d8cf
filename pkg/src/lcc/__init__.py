"""Exact weight enumerators and sizes of linear-congruence codes over Z_q."""

from .analysis import CheckReport, SweepResult, cross_check, sweep_b
from .core import (
    CodeSpec,
    ConstraintError,
    EngineError,
    ValidationError,
    WeightEnumerator,
    validate_and_normalize,
    weight_of,
)
from .engines import (
    Engine,
    EngineReport,
    GroupRingTable,
    code_size,
    enumerate_brute,
    enumerate_dft,
    enumerate_exact,
    roots_filter,
)
from .families import (
    FamilyDescriptor,
    family_construction_cprime,
    family_cse,
    family_helberg,
    family_le_nguyen,
    family_levenshtein,
    family_ternary,
    family_vt,
    lehmer_solvable,
    sequence_helberg,
    sequence_le_nguyen,
)

__all__ = [
    "CheckReport", "CodeSpec", "ConstraintError", "Engine", "EngineError",
    "EngineReport", "FamilyDescriptor", "GroupRingTable", "SweepResult",
    "ValidationError", "WeightEnumerator", "code_size", "cross_check",
    "enumerate_brute", "enumerate_dft", "enumerate_exact",
    "family_construction_cprime", "family_cse", "family_helberg",
    "family_le_nguyen", "family_levenshtein", "family_ternary", "family_vt",
    "lehmer_solvable", "roots_filter", "sequence_helberg", "sequence_le_nguyen",
    "sweep_b", "validate_and_normalize", "weight_of",
]
