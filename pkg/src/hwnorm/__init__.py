"""Exact norms, Wallach sets and submodule filtrations for holomorphic discrete series.

The package works with vector-valued holomorphic discrete series of the
classical Hermitian groups and the two exceptional ones.  Every quantity is
an exact rational function of the parameter lambda.
"""

from .arith import FactoredFn, Sign, Special, parse_rational
from .catalog import Family, FiberSpec, GroupSpec, Kind, make_fiber, parse_fiber, parse_group, structure_constants
from .decomp import KType, decompose, decompose_upto
from .norms import ConjecturalContentError, kernel_coeff, norm_ratio, normalizing_const
from .analysis import (filtration, gk_dim, reducible, reducible_scan, subquotient_report,
                       unitary_scan, unitary_set)

__all__ = [
    "FactoredFn", "Sign", "Special", "parse_rational",
    "Family", "FiberSpec", "GroupSpec", "Kind", "make_fiber", "parse_fiber", "parse_group",
    "structure_constants", "KType", "decompose", "decompose_upto",
    "ConjecturalContentError", "kernel_coeff", "norm_ratio", "normalizing_const",
    "filtration", "gk_dim", "reducible", "reducible_scan", "subquotient_report",
    "unitary_scan", "unitary_set",
]
