"""Finite-field verification oracle.

Generic points of conormal fibers are sampled as random combinations of an
exact nullspace basis over F_p. Ranks are merged by taking, for each power
separately, the maximum over the samples; the generic value of a rank is its
maximum, so the merged profile is the generic one with high probability.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from .config import DEFAULT_PRIME, SteinbergConfig
from .errors import (
    DomainError,
    GenericityUndecidedError,
    InconsistentCountsError,
    InternalInconsistencyError,
)
from .fields import (
    PrimeFieldMatrix,
    block_diag,
    is_nilpotent,
    left_nullspace_mod,
    matmul_chain,
    matmul_mod,
    matpow_mod,
    mod_p,
    nullspace_mod,
    rank_mod,
    zeros,
)
from .partial_perm import IndexPair, PartialPermutation, decompose
from .partitions import Partition
from .signed import MINUS, PLUS, SignedYoungDiagram, box_sign, signed_from_column_counts

if TYPE_CHECKING:
    from .orbits import OrbitRep

logger = logging.getLogger(__name__)

ShapePair = Tuple[Partition, Partition]


@dataclass(frozen=True)
class FiberBasis:
    """A basis of a linear space of matrices, stacked along the first axis."""

    basis: np.ndarray
    shape: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])

    def combine(self, coefficients: np.ndarray, p: int) -> np.ndarray:
        if self.dimension == 0:
            return np.zeros(self.shape, dtype=np.int64)
        total = np.tensordot(
            np.asarray(coefficients, dtype=object), self.basis.astype(object), axes=1
        )
        return mod_p(total, p)

    def sample(self, rng: np.random.Generator, p: int) -> np.ndarray:
        return self.combine(rng.integers(0, p, size=self.dimension, dtype=np.int64), p)


def nullspace(a: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> FiberBasis:
    basis = nullspace_mod(a, p)
    return FiberBasis(basis=basis, shape=(a.shape[1],))


def solve_linear_space(
    constraints: Callable[[np.ndarray], np.ndarray], shape: Tuple[int, int], p: int
) -> FiberBasis:
    """Matrices X of the given shape with constraints(X) = 0.

    `constraints` must be linear; it is evaluated on every matrix unit.
    """

    rows, cols = shape
    columns: List[np.ndarray] = []
    for idx in range(rows * cols):
        unit = np.zeros(shape, dtype=np.int64)
        unit[divmod(idx, cols)] = 1
        columns.append(mod_p(constraints(unit), p).reshape(-1))
    system = np.stack(columns, axis=1) if columns else zeros(0, 0)
    if system.shape[0] == 0:
        kernel = np.eye(rows * cols, dtype=np.int64)
    else:
        kernel = nullspace_mod(system, p)
    return FiberBasis(basis=kernel.reshape((kernel.shape[0], rows, cols)), shape=shape)


def _lower_with_diagonal(m: np.ndarray) -> np.ndarray:
    return m[np.tril_indices(m.shape[0])]


def conormal_fiber_matrix_pair(tau: PartialPermutation, p: int = DEFAULT_PRIME) -> FiberBasis:
    """{y : τy and yτ strictly upper triangular}."""

    t = tau.matrix()
    n = tau.n

    def _constraints(y: np.ndarray) -> np.ndarray:
        return np.concatenate([_lower_with_diagonal(t @ y), _lower_with_diagonal(y @ t)])

    return solve_linear_space(_constraints, (n, n), p)


def conormal_structural_sets(tau: PartialPermutation) -> Tuple[Set[IndexPair], Set[IndexPair]]:
    """The supports D1 of generic τy and D2 of generic yτ."""

    d = decompose(tau)
    sigma = d.sigma.as_dict()
    j_seq = list(d.J)
    i_seq = [sigma[j] for j in j_seq]
    d1 = {(i, ell) for i in i_seq for ell in d.L if i < ell}
    d1 |= {
        (i_seq[a], i_seq[b])
        for a in range(len(j_seq))
        for b in range(len(j_seq))
        if i_seq[a] < i_seq[b] and j_seq[a] < j_seq[b]
    }
    d2 = {(m, j) for m in d.M for j in j_seq if m < j}
    d2 |= {
        (j_seq[a], j_seq[b])
        for a in range(len(j_seq))
        for b in range(len(j_seq))
        if j_seq[a] < j_seq[b] and i_seq[a] < i_seq[b]
    }
    return d1, d2


@dataclass(frozen=True)
class ImageDimensions:
    dim_tau_y: int
    dim_y_tau: int
    support_tau_y: frozenset
    support_y_tau: frozenset


def _span_data(mats: Sequence[np.ndarray], p: int) -> Tuple[int, frozenset]:
    if not mats:
        return 0, frozenset()
    flat = np.stack([m.reshape(-1) for m in mats], axis=0)
    support = np.nonzero(np.any(flat, axis=0))[0]
    n = mats[0].shape[1]
    pairs = frozenset((int(k) // n + 1, int(k) % n + 1) for k in support)
    return rank_mod(flat, p), pairs


def image_dimension(tau: PartialPermutation, p: int = DEFAULT_PRIME) -> ImageDimensions:
    """Dimensions and supports of {τy} and {yτ} as y runs over the fiber."""

    fiber = conormal_fiber_matrix_pair(tau, p)
    t = tau.matrix()
    left = [matmul_mod(t, b, p) for b in fiber.basis]
    right = [matmul_mod(b, t, p) for b in fiber.basis]
    dim_l, supp_l = _span_data(left, p)
    dim_r, supp_r = _span_data(right, p)
    return ImageDimensions(dim_l, dim_r, supp_l, supp_r)


def conormal_fiber_double_flag(omega: "OrbitRep", p: int = DEFAULT_PRIME) -> FiberBasis:
    """{x : xω = 0, im x ⊆ span ω, diagonal blocks strictly upper triangular}."""

    n = omega.n
    w = omega.stacked_matrix()
    annihilator = left_nullspace_mod(w, p)

    def _constraints(x: np.ndarray) -> np.ndarray:
        parts = [
            (x @ w).reshape(-1),
            _lower_with_diagonal(x[:n, :n]),
            _lower_with_diagonal(x[n:, n:]),
        ]
        if annihilator.shape[0]:
            parts.append(matmul_mod(annihilator, x, p).reshape(-1))
        return np.concatenate(parts)

    return solve_linear_space(_constraints, (2 * n, 2 * n), p)


def _rank_sequence(x: np.ndarray, upto: int, p: int) -> List[int]:
    ranks = [x.shape[0]]
    power = np.eye(x.shape[0], dtype=np.int64)
    for _ in range(upto):
        power = matmul_mod(power, x, p)
        ranks.append(rank_mod(power, p))
    return ranks


def _jordan_from_ranks(ranks: Sequence[int]) -> Partition:
    """ranks[k] = rank x^k; blocks of size >= k number ranks[k-1] - ranks[k]."""

    if ranks[-1] != 0:
        raise DomainError("matrix is not nilpotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    if any(b < 0 for b in at_least) or any(a < b for a, b in zip(at_least, at_least[1:])):
        raise GenericityUndecidedError(f"rank sequence is not a Jordan profile: {list(ranks)!r}")
    return Partition.from_counts(at_least).conjugate()


def jordan_type(x: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> Partition:
    size = x.shape[0]
    if x.shape != (size, size):
        raise DomainError(f"jordan_type needs a square matrix, got shape {x.shape}")
    ranks = _rank_sequence(mod_p(x, p), size, p)
    try:
        return _jordan_from_ranks(ranks)
    except GenericityUndecidedError as exc:
        raise InternalInconsistencyError(str(exc)) from exc


def exotic_matrix(y2: PrimeFieldMatrix, y3: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """[[0, y2], [y3, 0]]."""
    n = y2.shape[0]
    x = zeros(2 * n, 2 * n)
    x[:n, n:] = y2
    x[n:, :n] = y3
    return x


def _signed_kernel_ranks(x: np.ndarray, n: int, p: int) -> Tuple[List[int], List[int]]:
    plus_ranks: List[int] = []
    minus_ranks: List[int] = []
    power = np.eye(2 * n, dtype=np.int64)
    for _ in range(2 * n):
        power = matmul_mod(power, x, p)
        plus_ranks.append(rank_mod(power[:, :n], p))
        minus_ranks.append(rank_mod(power[:, n:], p))
    return plus_ranks, minus_ranks


def _signed_from_ranks(plus_ranks: Sequence[int], minus_ranks: Sequence[int], n: int) -> SignedYoungDiagram:
    plus: List[int] = []
    minus: List[int] = []
    for rp, rm in zip(plus_ranks, minus_ranks):
        plus.append(n - rp)
        minus.append(n - rm)
        if plus[-1] == n and minus[-1] == n:
            break
    if not plus or plus[-1] != n or minus[-1] != n:
        raise DomainError("matrix is not nilpotent")
    return signed_from_column_counts(plus, minus)


def signed_type(y2: PrimeFieldMatrix, y3: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> SignedYoungDiagram:
    """Signed diagram of the K-orbit of [[0, y2], [y3, 0]] from kernel dimensions."""

    n = y2.shape[0]
    if y2.shape != (n, n) or y3.shape != (n, n):
        raise DomainError(f"y2 and y3 must be square of the same size, got {y2.shape} and {y3.shape}")
    if n == 0:
        return SignedYoungDiagram(())
    x = exotic_matrix(mod_p(y2, p), mod_p(y3, p))
    if not is_nilpotent(x, p):
        raise DomainError("exotic matrix is not nilpotent")
    plus_ranks, minus_ranks = _signed_kernel_ranks(x, n, p)
    try:
        return _signed_from_ranks(plus_ranks, minus_ranks, n)
    except InconsistentCountsError as exc:
        raise InternalInconsistencyError(str(exc)) from exc


def signed_representative(diagram: SignedYoungDiagram) -> Tuple[PrimeFieldMatrix, PrimeFieldMatrix]:
    """(x2, x3) for the standard nilpotent of the orbit: each box maps to its left neighbour."""

    n = diagram.n
    x2 = zeros(n, n)
    x3 = zeros(n, n)
    counters = {PLUS: 0, MINUS: 0}
    for row in diagram.rows:
        previous: Optional[Tuple[str, int]] = None
        for c in range(row[0]):
            sign = box_sign(row, c)
            index = counters[sign]
            counters[sign] += 1
            if previous is not None:
                target = previous[1]
                if sign == MINUS:
                    x2[target, index] = 1
                else:
                    x3[target, index] = 1
            previous = (sign, index)
    return x2, x3


def _rng(seed: int, key: Sequence[int], attempt: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *key, attempt, trial]))


def _max_merge(profiles: List[List[int]]) -> List[int]:
    return [max(values) for values in zip(*profiles)]


def _run_trials(
    label: str,
    config: SteinbergConfig,
    attempt_fn: Callable[[int, int], object],
    decide_fn: Callable[[], object],
) -> object:
    trials = config.trials
    for attempt in range(config.max_retries + 1):
        for trial in range(trials):
            attempt_fn(attempt, trial)
        try:
            return decide_fn()
        except (GenericityUndecidedError, InconsistentCountsError) as exc:
            logger.warning("genericity undecided for %s (attempt %d): %s", label, attempt, exc)
            trials *= 2
    raise GenericityUndecidedError(
        f"no generic profile for {label} after {config.max_retries + 1} attempts; raise trials"
    )


def xi_oracle(omega: "OrbitRep", config: Optional[SteinbergConfig] = None) -> Tuple[ShapePair, SignedYoungDiagram]:
    """Generic (Ξ_k, Ξ_s) of a K-orbit from sampled conormal fiber points."""

    config = config or SteinbergConfig()
    p, n = config.prime, omega.n
    if n == 0:
        return (Partition(()), Partition(())), SignedYoungDiagram(())
    fiber = conormal_fiber_double_flag(omega, p)
    merged: Dict[str, List[int]] = {}

    def _attempt(attempt: int, trial: int) -> None:
        x = fiber.sample(_rng(config.seed, omega.key(), attempt, trial), p)
        xs = exotic_matrix(x[:n, n:], x[n:, :n])
        plus_ranks, minus_ranks = _signed_kernel_ranks(xs, n, p)
        sample = {
            "x1": _rank_sequence(x[:n, :n], n, p),
            "x4": _rank_sequence(x[n:, n:], n, p),
            "plus": plus_ranks,
            "minus": minus_ranks,
        }
        for name, ranks in sample.items():
            merged[name] = _max_merge([merged[name], ranks]) if name in merged else ranks

    def _decide() -> Tuple[ShapePair, SignedYoungDiagram]:
        xi_k = (_jordan_from_ranks(merged["x1"]), _jordan_from_ranks(merged["x4"]))
        return xi_k, _signed_from_ranks(merged["plus"], merged["minus"], n)

    return _run_trials(f"omega {omega}", config, _attempt, _decide)  # type: ignore[return-value]


def phi_oracle(tau: PartialPermutation, config: Optional[SteinbergConfig] = None) -> ShapePair:
    """Generic Jordan types of (τy, yτ) over the fiber {y : τy, yτ strictly upper}."""

    config = config or SteinbergConfig()
    p, n = config.prime, tau.n
    if n == 0:
        return Partition(()), Partition(())
    fiber = conormal_fiber_matrix_pair(tau, p)
    t = tau.matrix()
    merged: Dict[str, List[int]] = {}

    def _attempt(attempt: int, trial: int) -> None:
        y = fiber.sample(_rng(config.seed, (n, *tau.word), attempt, trial), p)
        sample = {
            "left": _rank_sequence(matmul_mod(t, y, p), n, p),
            "right": _rank_sequence(matmul_mod(y, t, p), n, p),
        }
        for name, ranks in sample.items():
            merged[name] = _max_merge([merged[name], ranks]) if name in merged else ranks

    def _decide() -> ShapePair:
        return _jordan_from_ranks(merged["left"]), _jordan_from_ranks(merged["right"])

    return _run_trials(f"tau {tau}", config, _attempt, _decide)  # type: ignore[return-value]


def kernel_parity_check(tau: PartialPermutation, y: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> bool:
    """Kernel counts of x = [[0, -τyτ], [y, 0]] against powers of τy and yτ.

    c_2k[+] = dim ker (τy)^2k, c_2k[-] = dim ker (yτ)^2k,
    c_2k+1[+] = dim ker (yτ)^2k y, c_2k+1[-] = dim ker (τy)^2k+1 τ.
    """

    n = tau.n
    t = tau.matrix()
    ty = matmul_mod(t, y, p)
    yt = matmul_mod(y, t, p)
    x = exotic_matrix(mod_p(-matmul_chain(p, t, y, t), p), mod_p(y, p))
    plus_ranks, minus_ranks = _signed_kernel_ranks(x, n, p)
    for k in range(1, 2 * n + 1):
        if k % 2 == 0:
            expected_plus = n - rank_mod(matpow_mod(ty, k, p), p)
            expected_minus = n - rank_mod(matpow_mod(yt, k, p), p)
        else:
            expected_plus = n - rank_mod(matmul_mod(matpow_mod(yt, k - 1, p), y, p), p)
            expected_minus = n - rank_mod(matmul_mod(matpow_mod(ty, k, p), t, p), p)
        if (n - plus_ranks[k - 1], n - minus_ranks[k - 1]) != (expected_plus, expected_minus):
            return False
    return True


def jordan_matrix(lam: Partition) -> PrimeFieldMatrix:
    """Block diagonal nilpotent matrix with Jordan blocks of sizes λ."""

    blocks = []
    for part in lam:
        block = zeros(part, part)
        for i in range(part - 1):
            block[i, i + 1] = 1
        blocks.append(block)
    return block_diag(*blocks) if blocks else zeros(0, 0)
