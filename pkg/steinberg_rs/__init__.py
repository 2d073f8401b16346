"""Exact Robinson-Schensted and Steinberg-map computations on partial permutations."""

from .errors import (
    DomainError,
    GenericityUndecidedError,
    InconsistentCountsError,
    InternalInconsistencyError,
    NotInImageError,
    ResourceLimitError,
    SteinbergError,
)
from .insertion import Bijection, column_insert, rectify, row_insert, rs_pair, star
from .partial_perm import PartialPermutation, canonicalize_matrix, decompose
from .partitions import Partition
from .signed import SignedYoungDiagram
from .steinberg import Triple, phi, triangle, triple, triple_inverse, xi_k_generic, xi_s_generic
from .tableau import SkewTableau, Tableau

__all__ = [
    "Bijection",
    "DomainError",
    "GenericityUndecidedError",
    "InconsistentCountsError",
    "InternalInconsistencyError",
    "NotInImageError",
    "Partition",
    "PartialPermutation",
    "ResourceLimitError",
    "SignedYoungDiagram",
    "SkewTableau",
    "SteinbergError",
    "Tableau",
    "Triple",
    "canonicalize_matrix",
    "column_insert",
    "decompose",
    "phi",
    "rectify",
    "row_insert",
    "rs_pair",
    "star",
    "triangle",
    "triple",
    "triple_inverse",
    "xi_k_generic",
    "xi_s_generic",
]
