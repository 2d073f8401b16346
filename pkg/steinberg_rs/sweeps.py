"""Golden-table rows and the exhaustive verification sweeps.

Each `verify_*` function walks every partial permutation of size n (or every
shape pair) and collects mismatches instead of stopping at the first one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .config import SteinbergConfig
from .errors import GenericityUndecidedError, NotInImageError
from .insertion import Bijection, rs_pair
from .oracle import phi_oracle, xi_oracle
from .orbits import OrbitRep
from .partial_perm import (
    PartialPermutation,
    decompose,
    enumerate_partial_permutations,
    partial_permutation_count,
)
from .partitions import Partition, partitions_of
from .signed import SignedYoungDiagram
from .steinberg import (
    Triple,
    fiber_count_formula,
    fiber_enumeration,
    phi,
    phi_fibers,
    triangle_by_erasure,
    triangle_for,
    triple,
    triple_inverse,
    xi_k_generic,
    xi_s_generic,
)
from .tableau import Tableau

logger = logging.getLogger(__name__)

VERIFY_TARGETS = ("phi", "xi", "bijection", "counting", "triangle")

# Largest n for which the bijection sweep also enumerates every valid triple.
EXHAUSTIVE_TRIPLE_N = 5


@dataclass(frozen=True)
class TableRow:
    tau: PartialPermutation
    sigma: Bijection
    rs: Tuple[Tableau, Tableau]
    triple: Triple
    phi: Tuple[Partition, Partition]
    xi_s: SignedYoungDiagram


def table_row(tau: PartialPermutation) -> TableRow:
    d = decompose(tau)
    return TableRow(
        tau=tau,
        sigma=d.sigma,
        rs=rs_pair(d.sigma),
        triple=triple(tau),
        phi=phi(tau),
        xi_s=xi_s_generic(tau),
    )


def golden_table(n: int, config: Optional[SteinbergConfig] = None) -> List[TableRow]:
    """One row per partial permutation, in enumeration order."""

    config = config or SteinbergConfig()
    return [table_row(tau) for tau in enumerate_partial_permutations(n, max_n=config.max_partial_perm_n)]


@dataclass
class VerifyResult:
    target: str
    n: int
    checked: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _sweep(
    target: str,
    n: int,
    config: SteinbergConfig,
    check: Callable[[PartialPermutation], Optional[str]],
) -> VerifyResult:
    result = VerifyResult(target=target, n=n)
    for tau in enumerate_partial_permutations(n, max_n=config.max_partial_perm_n):
        problem = check(tau)
        result.checked += 1
        if problem:
            result.mismatches.append(f"{tau}: {problem}")
    logger.info(
        "verify %s n=%d: %d checked, %d mismatches", target, n, result.checked, len(result.mismatches)
    )
    return result


def verify_phi(n: int, config: Optional[SteinbergConfig] = None) -> VerifyResult:
    """phi against the sampled Jordan types of (τy, yτ)."""

    config = config or SteinbergConfig()

    def _check(tau: PartialPermutation) -> Optional[str]:
        try:
            sampled = phi_oracle(tau, config)
        except GenericityUndecidedError as exc:
            return str(exc)
        expected = phi(tau)
        if sampled != expected:
            return f"oracle {_pair(sampled)} != combinatorial {_pair(expected)}"
        return None

    return _sweep("phi", n, config, _check)


def verify_xi(n: int, config: Optional[SteinbergConfig] = None) -> VerifyResult:
    """Ξ_k and Ξ_s of (τ; 1_n) against the oracle."""

    config = config or SteinbergConfig()

    def _check(tau: PartialPermutation) -> Optional[str]:
        try:
            xi_k, xi_s = xi_oracle(OrbitRep.generic(tau), config)
        except GenericityUndecidedError as exc:
            return str(exc)
        expected_k, expected_s = xi_k_generic(tau), xi_s_generic(tau)
        if (xi_k, xi_s) != (expected_k, expected_s):
            return (
                f"oracle {_pair(xi_k)} {xi_s} != combinatorial {_pair(expected_k)} {expected_s}"
            )
        return None

    return _sweep("xi", n, config, _check)


def verify_bijection(n: int, config: Optional[SteinbergConfig] = None) -> VerifyResult:
    """triple_inverse undoes triple, and the image is exactly the set of valid triples."""

    config = config or SteinbergConfig()
    seen: Dict[Triple, PartialPermutation] = {}

    def _check(tau: PartialPermutation) -> Optional[str]:
        t = triple(tau)
        if t in seen:
            return f"triple collides with {seen[t]}"
        seen[t] = tau
        try:
            back = triple_inverse(t)
        except NotInImageError as exc:
            return f"inverse rejected its own triple: {exc}"
        if back != tau:
            return f"inverse returned {back}"
        return None

    result = _sweep("bijection", n, config, _check)
    if n <= EXHAUSTIVE_TRIPLE_N:
        valid = set()
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                valid.update(fiber_enumeration(lam, mu, n, max_size=config.max_tableau_size))
        if valid != set(seen):
            result.mismatches.append(
                f"image has {len(seen)} triples, valid set has {len(valid)}, "
                f"{len(valid - set(seen))} valid triples are never reached"
            )
    return result


def verify_counting(n: int, config: Optional[SteinbergConfig] = None) -> VerifyResult:
    """Fiber sizes of phi against the closed count, plus the total."""

    config = config or SteinbergConfig()
    result = VerifyResult(target="counting", n=n)
    fibers = phi_fibers(n, max_n=config.max_partial_perm_n)
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            observed = fibers.get((lam, mu), 0)
            expected = fiber_count_formula(lam, mu, max_size=config.max_tableau_size)
            result.checked += 1
            if observed != expected:
                result.mismatches.append(f"{_pair((lam, mu))}: swept {observed}, formula {expected}")
    total = sum(fibers.values())
    if total != partial_permutation_count(n):
        result.mismatches.append(f"fibers sum to {total}, expected {partial_permutation_count(n)}")
    logger.info("verify counting n=%d: %d shape pairs, %d mismatches", n, result.checked, len(result.mismatches))
    return result


def verify_triangle(n: int, config: Optional[SteinbergConfig] = None) -> VerifyResult:
    """The two constructions of the △ skew tableau agree."""

    config = config or SteinbergConfig()

    def _check(tau: PartialPermutation) -> Optional[str]:
        direct, erased = triangle_for(tau), triangle_by_erasure(tau)
        if direct != erased:
            return f"slides give {direct.as_rows_with_gaps()}, erasure gives {erased.as_rows_with_gaps()}"
        return None

    return _sweep("triangle", n, config, _check)


_VERIFIERS: Dict[str, Callable[[int, Optional[SteinbergConfig]], VerifyResult]] = {
    "phi": verify_phi,
    "xi": verify_xi,
    "bijection": verify_bijection,
    "counting": verify_counting,
    "triangle": verify_triangle,
}


def verify(n: int, what: str = "all", config: Optional[SteinbergConfig] = None) -> List[VerifyResult]:
    if what == "all":
        targets = list(VERIFY_TARGETS)
    elif what in _VERIFIERS:
        targets = [what]
    else:
        raise ValueError(f"unknown verification target: {what!r}")
    return [_VERIFIERS[t](n, config) for t in targets]


def _pair(shapes: Tuple[Partition, Partition]) -> str:
    return f"{shapes[0]},{shapes[1]}"
