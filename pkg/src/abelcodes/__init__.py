"""Apparent distance, minimum apparent distance and multivariate BCH codes for abelian codes."""

from __future__ import annotations

from .algebra import (
    Orbit,
    OrbitPartition,
    RootClass,
    Shape,
    cyclotomic_coset,
    mult_order,
    orbit_partition,
    q_orbit,
    root_class_representatives,
)
from .codes import (
    AbelianCode,
    BchSpec,
    CodeApDistResult,
    apparent_distance_alpha,
    apparent_distance_code,
    bch_bound,
    bch_code,
    bch_dimension_bound,
    code_from_json,
    code_from_orbits,
    hd_search,
    is_column_constant,
    multiply_dimension,
    rs_exact,
)
from .errors import AbelCodesError, BudgetExceeded, EngineMismatch, ValidationError, ZeroCodeError
from .hypermatrix import ApDistResult, OrbitHypermatrix, afford, afford_orbits, apparent_distance, omega
from .mad import MadTrace, eval_count, mad, max_support_submatrix

__version__ = "0.1.0"

__all__ = [
    "AbelCodesError", "AbelianCode", "ApDistResult", "BchSpec", "BudgetExceeded", "CodeApDistResult",
    "EngineMismatch", "MadTrace", "Orbit", "OrbitHypermatrix", "OrbitPartition", "RootClass", "Shape",
    "ValidationError", "ZeroCodeError", "afford", "afford_orbits", "apparent_distance", "apparent_distance_alpha",
    "apparent_distance_code", "bch_bound", "bch_code", "bch_dimension_bound", "code_from_json",
    "code_from_orbits", "cyclotomic_coset", "eval_count", "hd_search", "is_column_constant", "mad",
    "max_support_submatrix", "mult_order", "multiply_dimension", "omega", "orbit_partition", "q_orbit",
    "root_class_representatives", "rs_exact",
]
