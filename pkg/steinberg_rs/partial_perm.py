"""Partial permutations: decomposition, enumeration, Bruhat-style canonical
forms of square matrices under upper-triangular B x B, and the w1/w2
permutations attached to a partial permutation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import FrozenSet, Iterator, List, Sequence, Set, Tuple

import numpy as np

from .config import DEFAULT_PRIME
from .errors import DomainError, InternalInconsistencyError, ResourceLimitError
from .fields import PrimeFieldMatrix, inv_mod_scalar, mod_p, rank_mod
from .insertion import Bijection

logger = logging.getLogger(__name__)

IndexPair = Tuple[int, int]


@dataclass(frozen=True)
class PartialPermutation:
    """`word[j-1]` is τ(j); 0 marks the kernel."""

    n: int
    word: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = int(self.n)
        word = tuple(int(v) for v in self.word)
        if n < 0:
            raise DomainError(f"n must be >= 0, got: {n!r}")
        if len(word) != n:
            raise DomainError(f"word must have {n} entries, got {len(word)}")
        seen: Set[int] = set()
        for v in word:
            if not 0 <= v <= n:
                raise DomainError(f"word entry must lie in 0..{n}, got: {v!r}")
            if v and v in seen:
                raise DomainError(f"word repeats the value {v!r}")
            seen.add(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "word", word)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "PartialPermutation":
        return cls(len(word), tuple(word))

    @classmethod
    def identity(cls, n: int) -> "PartialPermutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def zero(cls, n: int) -> "PartialPermutation":
        return cls(n, (0,) * n)

    @classmethod
    def from_matrix(cls, matrix: PrimeFieldMatrix) -> "PartialPermutation":
        """Read a 0/1 matrix with at most one 1 per row and column."""

        n = matrix.shape[0]
        if matrix.shape != (n, n):
            raise DomainError(f"expected a square matrix, got shape {matrix.shape}")
        word: List[int] = []
        for j in range(n):
            column = matrix[:, j]
            rows = np.nonzero(column)[0]
            if rows.size > 1 or (rows.size == 1 and column[rows[0]] != 1):
                raise DomainError(f"column {j + 1} is not a partial permutation column")
            word.append(int(rows[0]) + 1 if rows.size else 0)
        return cls(n, tuple(word))

    def __call__(self, j: int) -> int:
        return self.word[j - 1]

    @property
    def rank(self) -> int:
        return sum(1 for v in self.word if v)

    @property
    def kernel(self) -> Tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.word, start=1) if v == 0)

    @property
    def image(self) -> FrozenSet[int]:
        return frozenset(v for v in self.word if v)

    def is_permutation(self) -> bool:
        return self.rank == self.n

    def matrix(self) -> PrimeFieldMatrix:
        out = np.zeros((self.n, self.n), dtype=np.int64)
        for j, v in enumerate(self.word):
            if v:
                out[v - 1, j] = 1
        return out

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)


@dataclass(frozen=True)
class Decomposition:
    """Nondegenerate part σ: J -> I plus the kernel M and the cokernel L."""

    sigma: Bijection
    J: Tuple[int, ...]
    I: Tuple[int, ...]
    M: Tuple[int, ...]
    L: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.J)

    @property
    def s(self) -> int:
        return len(self.M)


def decompose(tau: PartialPermutation) -> Decomposition:
    pairs = tuple((j, v) for j, v in enumerate(tau.word, start=1) if v)
    sigma = Bijection(pairs)
    image = tau.image
    return Decomposition(
        sigma=sigma,
        J=sigma.sources,
        I=tuple(sorted(image)),
        M=tau.kernel,
        L=tuple(i for i in range(1, tau.n + 1) if i not in image),
    )


def transpose(tau: PartialPermutation) -> PartialPermutation:
    word = [0] * tau.n
    for j, v in enumerate(tau.word, start=1):
        if v:
            word[v - 1] = j
    return PartialPermutation(tau.n, tuple(word))


def partial_permutation_count(n: int) -> int:
    return sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))


def enumerate_partial_permutations(n: int, max_n: int = 7) -> List[PartialPermutation]:
    """Every partial permutation of size n, rank descending then lexicographic."""

    if n < 0:
        raise DomainError(f"n must be >= 0, got: {n!r}")
    if n > max_n:
        raise ResourceLimitError(f"partial permutation enumeration limited to n <= {max_n}, got {n}")

    def _extend(prefix: List[int], used: Set[int]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(n + 1):
            if v and v in used:
                continue
            prefix.append(v)
            if v:
                used.add(v)
            yield from _extend(prefix, used)
            prefix.pop()
            used.discard(v)

    words = sorted(_extend([], set()), key=lambda w: (-sum(1 for v in w if v), w))
    return [PartialPermutation(n, w) for w in words]


def rank_profile(a: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> List[List[int]]:
    """d[i][j] = rank of the block of rows i.. and columns ..j (0-based, inclusive)."""

    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError(f"rank profile needs a square matrix, got shape {a.shape}")
    return [[rank_mod(a[i:, : j + 1], p) for j in range(n)] for i in range(n)]


def reduce_block(m: np.ndarray, lo: int, hi: int, p: int) -> List[int]:
    """Reduce rows lo..hi-1 of `m` in place to a partial permutation pattern.

    Row operations stay inside the block (multiples of lower rows added to
    upper rows, scaling); column operations (multiples of earlier columns
    added to later ones) act on every row of `m`. Sweeps columns left to
    right; the pivot is the bottom-most nonzero entry among block rows
    without a pivot. Returns the block's word, 0 for a column with no pivot.
    """

    free_rows = set(range(lo, hi))
    word = [0] * m.shape[1]
    for j in range(m.shape[1]):
        candidates = [i for i in free_rows if m[i, j]]
        if not candidates:
            continue
        i = max(candidates)
        m[i] = (m[i] * inv_mod_scalar(m[i, j], p)) % p
        m[:, j + 1 :] = (m[:, j + 1 :] - m[:, j : j + 1] * m[i, j + 1 :][None, :]) % p
        m[lo:i] = (m[lo:i] - m[lo:i, j : j + 1] * m[i][None, :]) % p
        free_rows.discard(i)
        word[j] = i - lo + 1
    return word


def canonicalize_matrix(a: PrimeFieldMatrix, p: int = DEFAULT_PRIME) -> PartialPermutation:
    """The partial permutation τ with BτB = BaB, B upper triangular."""

    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError(f"canonicalize_matrix needs a square matrix, got shape {a.shape}")
    m = mod_p(a, p).copy()
    tau = PartialPermutation(n, tuple(reduce_block(m, 0, n, p)))
    if not np.array_equal(m, tau.matrix()) or rank_profile(a, p) != rank_profile(tau.matrix(), p):
        logger.error("canonical form check failed for matrix %s", a.tolist())
        raise InternalInconsistencyError("canonical partial permutation does not match the input orbit")
    return tau


def build_w1_w2(tau: PartialPermutation) -> Tuple[Bijection, Bijection]:
    """The permutations w1, w2 whose Steinberg shapes are Φ1(τ), Φ2(τ)."""

    d = decompose(tau)
    positions = list(range(1, tau.n + 1))
    sigma = d.sigma.as_dict()
    inverse = d.sigma.inverse().as_dict()
    w1 = Bijection.from_lists(positions, [sigma[j] for j in d.J] + list(reversed(d.L)))
    w2 = Bijection.from_lists(positions, list(reversed(d.M)) + [inverse[i] for i in d.I])
    return w1, w2


def descent_set(w: Bijection) -> Set[IndexPair]:
    """D(w): value pairs a < b with w⁻¹(a) < w⁻¹(b)."""

    position = w.inverse().as_dict()
    values = sorted(position)
    return {
        (a, b)
        for x, a in enumerate(values)
        for b in values[x + 1 :]
        if position[a] < position[b]
    }
