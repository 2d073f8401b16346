"""K-orbits on the double flag variety and the image of the exotic moment map.

An orbit is represented by a stacked 2n x n 0/1 matrix ω = (τ1; τ2) of rank n,
up to permutation of columns. Each column is encoded as (kind, top row,
bottom row) with kind 0 when only the top entry is set, 1 when both are,
2 when only the bottom one is; the canonical form sorts these codes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_PRIME, SteinbergConfig
from .errors import DomainError, GenericityUndecidedError, InternalInconsistencyError, ResourceLimitError
from .fields import PrimeFieldMatrix, identity, mod_p, rank_mod
from .oracle import signed_representative, solve_linear_space, xi_oracle
from .partial_perm import PartialPermutation, reduce_block
from .partitions import Partition, square_zero_condition
from .signed import (
    SignedYoungDiagram,
    expected_components,
    maximal_elements,
    sign_prefix_partitions,
    square_zero_witness,
    swap_signs,
)
from .steinberg import xi_k_generic, xi_s_generic

logger = logging.getLogger(__name__)

Column = Tuple[int, int, int]

ONLY_TOP, BOTH, ONLY_BOTTOM = 0, 1, 2


def _column_code(top: int, bottom: int) -> Column:
    if top and bottom:
        return (BOTH, top, bottom)
    if top:
        return (ONLY_TOP, top, 0)
    if bottom:
        return (ONLY_BOTTOM, 0, bottom)
    raise DomainError("orbit representative has a zero column")


@dataclass(frozen=True)
class OrbitRep:
    tau1: PartialPermutation
    tau2: PartialPermutation

    def __post_init__(self) -> None:
        if self.tau1.n != self.tau2.n:
            raise DomainError(f"tau1 and tau2 sizes differ: {self.tau1.n} vs {self.tau2.n}")
        codes = sorted(_column_code(t, b) for t, b in zip(self.tau1.word, self.tau2.word))
        n = self.tau1.n
        object.__setattr__(self, "tau1", PartialPermutation(n, tuple(c[1] for c in codes)))
        object.__setattr__(self, "tau2", PartialPermutation(n, tuple(c[2] for c in codes)))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Tuple[int, int]]) -> "OrbitRep":
        return cls(
            PartialPermutation(n, tuple(t for t, _ in columns)),
            PartialPermutation(n, tuple(b for _, b in columns)),
        )

    @classmethod
    def generic(cls, tau: PartialPermutation) -> "OrbitRep":
        """The orbit of (τ; 1_n)."""
        return cls(tau, PartialPermutation.identity(tau.n))

    @property
    def n(self) -> int:
        return self.tau1.n

    def columns(self) -> List[Column]:
        return [_column_code(t, b) for t, b in zip(self.tau1.word, self.tau2.word)]

    def key(self) -> Tuple[int, ...]:
        return (self.n, *self.tau1.word, *self.tau2.word)

    def stacked_matrix(self) -> PrimeFieldMatrix:
        return np.concatenate([self.tau1.matrix(), self.tau2.matrix()], axis=0)

    def is_generic(self) -> bool:
        return self.tau2.is_permutation()

    def generic_tau(self) -> Optional[PartialPermutation]:
        """τ with ω in the class of (τ; 1_n), or None when τ2 is not a permutation."""

        if not self.is_generic():
            return None
        word = [0] * self.n
        for top, bottom in zip(self.tau1.word, self.tau2.word):
            word[bottom - 1] = top
        return PartialPermutation(self.n, tuple(word))

    def __str__(self) -> str:
        return f"({self.tau1};{self.tau2})"


def orbit_class_count(n: int) -> int:
    """Σ_k C(n,k)² k! C(2n-2k, n-k)."""
    return sum(comb(n, k) ** 2 * factorial(k) * comb(2 * n - 2 * k, n - k) for k in range(n + 1))


def enumerate_orbit_reps(n: int, max_n: int = 5) -> List[OrbitRep]:
    """One canonical representative per class, sorted by column codes."""

    if n < 0:
        raise DomainError(f"n must be >= 0, got: {n!r}")
    if n > max_n:
        raise ResourceLimitError(f"orbit enumeration limited to n <= {max_n}, got {n}")

    rows = range(1, n + 1)
    found: Dict[Tuple[int, ...], OrbitRep] = {}
    for k in range(n + 1):
        for tops in combinations(rows, k):
            for bottoms in permutations(rows, k):
                both = list(zip(tops, bottoms))
                spare = [(r, 0) for r in rows if r not in tops]
                spare += [(0, r) for r in rows if r not in bottoms]
                for rest in combinations(spare, n - k):
                    rep = OrbitRep.from_columns(n, both + list(rest))
                    found.setdefault(rep.key(), rep)
    reps = [found[key] for key in sorted(found)]
    logger.info("enumerated %d orbit classes for n=%d", len(reps), n)
    return reps


def grassmann_invariants(a: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> List[List[int]]:
    """dim (V_i⁺ + V_j⁻) ∩ span(a) for i, j in 0..n."""

    two_n, n = a.shape
    if two_n != 2 * n:
        raise DomainError(f"expected a 2n x n matrix, got shape {a.shape}")
    a = mod_p(a, p)
    if rank_mod(a, p) != n:
        raise DomainError(f"Grassmann point must have rank {n}")
    eye = identity(2 * n)
    out: List[List[int]] = []
    for i in range(n + 1):
        row: List[int] = []
        for j in range(n + 1):
            span = np.concatenate([eye[:, :i], eye[:, n : n + j], a], axis=1)
            row.append(i + j + n - rank_mod(span, p))
        out.append(row)
    return out


def canonicalize_grassmann_point(a: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> OrbitRep:
    """The representative ω of the B_K-orbit of span(a).

    Reduce the top block to τ1, move zero top columns first and order the
    rest by their top pivot row, then reduce the bottom block with upper
    triangular column operations. On that column order the operations that
    touch the top block are undone by upper triangular row operations.
    """

    two_n, n = a.shape
    if two_n != 2 * n:
        raise DomainError(f"expected a 2n x n matrix, got shape {a.shape}")
    m = mod_p(a, p).copy()
    if rank_mod(m, p) != n:
        raise DomainError(f"Grassmann point must have rank {n}")

    top = reduce_block(m, 0, n, p)
    order = [j for j in range(n) if top[j] == 0]
    order += sorted((j for j in range(n) if top[j]), key=lambda j: top[j])
    m = m[:, order]
    bottom = reduce_block(m, n, 2 * n, p)

    omega = OrbitRep(
        PartialPermutation(n, tuple(top[j] for j in order)),
        PartialPermutation(n, tuple(bottom)),
    )
    if grassmann_invariants(a, p) != grassmann_invariants(omega.stacked_matrix(), p):
        logger.error("Grassmann canonical form check failed for %s", a.tolist())
        raise InternalInconsistencyError(f"canonical form {omega} does not share the invariants of the input")
    return omega


def orbit_dimension(diagram: SignedYoungDiagram, p: int = DEFAULT_PRIME) -> int:
    """dim K - dim{(α, β) : α x2 = x2 β, β x3 = x3 α} at the standard representative."""

    n = diagram.n
    x2, x3 = signed_representative(diagram)

    def _constraints(pair: np.ndarray) -> np.ndarray:
        alpha, beta = pair[:n], pair[n:]
        return np.concatenate(
            [(alpha @ x2 - x2 @ beta).reshape(-1), (beta @ x3 - x3 @ alpha).reshape(-1)]
        )

    stabilizer = solve_linear_space(_constraints, (2 * n, n), p)
    return 2 * n * n - stabilizer.dimension


@dataclass
class ClassImage:
    omega: OrbitRep
    method: str
    xi_k: Optional[Tuple[Partition, Partition]] = None
    xi_s: Optional[SignedYoungDiagram] = None
    error: Optional[str] = None


@dataclass
class ImageReport:
    n: int
    classes: List[ClassImage] = field(default_factory=list)
    maximal: List[SignedYoungDiagram] = field(default_factory=list)
    checks: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is True for v in self.checks.values() if isinstance(v, bool))


def _column_bound(n: int) -> int:
    return n if n % 2 == 0 else n + 1


def image_analysis(
    n: int, config: Optional[SteinbergConfig] = None, cross_check: bool = False
) -> ImageReport:
    """Ξ_s and Ξ_k over every orbit class, with the component checks.

    Classes of the form (τ; 1_n) use the combinatorial maps, the rest the
    oracle. With `cross_check` the generic classes are sent through the
    oracle too and disagreements are recorded as errors.
    """

    config = config or SteinbergConfig()
    if n < 1:
        raise DomainError(f"image analysis needs n >= 1, got: {n!r}")
    if n > config.max_image_n:
        raise ResourceLimitError(f"image analysis limited to n <= {config.max_image_n}, got {n}")

    report = ImageReport(n=n)
    for omega in enumerate_orbit_reps(n, max_n=config.max_orbit_n):
        tau = omega.generic_tau()
        if tau is not None:
            entry = ClassImage(omega, "combinatorial", xi_k_generic(tau), xi_s_generic(tau))
            if cross_check:
                try:
                    if xi_oracle(omega, config) != (entry.xi_k, entry.xi_s):
                        entry.error = "oracle disagrees with the combinatorial image"
                except GenericityUndecidedError as exc:
                    entry.error = str(exc)
        else:
            entry = ClassImage(omega, "oracle")
            try:
                entry.xi_k, entry.xi_s = xi_oracle(omega, config)
            except GenericityUndecidedError as exc:
                logger.warning("orbit %s flagged: %s", omega, exc)
                entry.error = str(exc)
        report.classes.append(entry)

    images = [c.xi_s for c in report.classes if c.xi_s is not None]
    distinct = sorted(set(images), key=lambda d: d.to_strings())
    report.maximal = sorted(maximal_elements(distinct), key=lambda d: d.to_strings())

    regular = (Partition((n,)), Partition((n,)))
    report.checks = {
        "maximal_matches_components": set(report.maximal) == set(expected_components(n)),
        "prefixes_square_zero": all(
            all(square_zero_condition(part) for part in sign_prefix_partitions(d)) for d in distinct
        ),
        "column_bound": all(d.num_columns <= _column_bound(n) for d in distinct),
        "swap_closed": all(swap_signs(d) in distinct for d in distinct),
        "regular_xi_k_attained": any(c.xi_k == regular for c in report.classes),
        "witness_absent": n < 2 or square_zero_witness(n) not in distinct,
        "flagged": [str(c.omega) for c in report.classes if c.error],
        "maximal_dimensions": {str(d): orbit_dimension(d, config.prime) for d in report.maximal},
        "distinct_images": len(distinct),
        "class_count": len(report.classes),
    }
    logger.info("image analysis n=%d: %d classes, %d distinct images", n, len(report.classes), len(distinct))
    return report
