"""Dense matrices over the prime field F_p.

Matrices are int64 numpy arrays with entries reduced into [0, p). Elementwise
products of two residues stay below 2**62 for p < 2**31; matrix products go
through object arrays so their sums cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from .errors import DomainError

PrimeFieldMatrix = np.ndarray


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def mod_p(a: Any, p: int) -> np.ndarray:
    return np.asarray(np.asarray(a, dtype=object) % p, dtype=np.int64)


def as_field_matrix(data: Any, p: int) -> PrimeFieldMatrix:
    """Coerce nested integer data to a reduced 2-D matrix over F_p."""

    arr = np.asarray(data, dtype=object)
    if arr.ndim != 2:
        raise DomainError(f"expected a 2-D matrix, got an array of dimension {arr.ndim}")
    for value in arr.flat:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise DomainError(f"matrix entries must be integers, got: {value!r}")
    return mod_p(arr, p)


def zeros(rows: int, cols: int) -> PrimeFieldMatrix:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> PrimeFieldMatrix:
    return np.eye(n, dtype=np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise DomainError("zero has no inverse mod p")
    return pow(a, p - 2, p)


def matmul_mod(a: PrimeFieldMatrix, b: PrimeFieldMatrix, p: int) -> PrimeFieldMatrix:
    return mod_p(a.astype(object) @ b.astype(object), p)


def matmul_chain(p: int, *factors: PrimeFieldMatrix) -> PrimeFieldMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = matmul_mod(out, f, p)
    return out


def matpow_mod(a: PrimeFieldMatrix, k: int, p: int) -> PrimeFieldMatrix:
    if a.shape[0] != a.shape[1]:
        raise DomainError(f"matrix power needs a square matrix, got shape {a.shape}")
    out = identity(a.shape[0])
    for _ in range(k):
        out = matmul_mod(out, a, p)
    return out


def rref_mod(a: PrimeFieldMatrix, p: int) -> RowReduceResult:
    """Reduced row echelon form over F_p."""

    m = mod_p(a, p).copy()
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * inv_mod_scalar(m[r, c], p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - factors[:, None] * m[r][None, :]) % p
        pivots.append(c)
        r += 1
    return RowReduceResult(matrix=m, rank=r, pivots=tuple(pivots))


def rank_mod(a: PrimeFieldMatrix, p: int) -> int:
    if a.size == 0:
        return 0
    return rref_mod(a, p).rank


def nullspace_mod(a: PrimeFieldMatrix, p: int) -> PrimeFieldMatrix:
    """Right nullspace of `a`; the rows of the result form a basis."""

    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    reduced = rref_mod(a, p)
    pivot_set = set(reduced.pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(reduced.pivots):
            basis[k, pc] = (-reduced.matrix[i, f]) % p
    return basis


def inv_mod_mat(a: PrimeFieldMatrix, p: int) -> PrimeFieldMatrix:
    """Gauss-Jordan inverse over F_p."""

    n = a.shape[0]
    reduced = rref_mod(np.concatenate([mod_p(a, p), identity(n)], axis=1), p)
    if reduced.pivots[:n] != tuple(range(n)):
        raise DomainError("matrix is not invertible mod p")
    return reduced.matrix[:, n:].copy()


def left_nullspace_mod(a: PrimeFieldMatrix, p: int) -> PrimeFieldMatrix:
    """Rows y with y a = 0."""
    return nullspace_mod(np.ascontiguousarray(a.T), p)


def is_nilpotent(a: PrimeFieldMatrix, p: int) -> bool:
    return not np.any(matpow_mod(a, a.shape[0], p))


def random_matrix(rng: np.random.Generator, rows: int, cols: int, p: int) -> PrimeFieldMatrix:
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)


def random_upper_invertible(rng: np.random.Generator, n: int, p: int) -> PrimeFieldMatrix:
    """A random element of the upper-triangular Borel subgroup."""
    m = np.triu(random_matrix(rng, n, n, p), k=1)
    m[np.diag_indices(n)] = rng.integers(1, p, size=n, dtype=np.int64)
    return m


def random_invertible(rng: np.random.Generator, n: int, p: int) -> PrimeFieldMatrix:
    """Product of a random lower and a random upper unitriangular-times-diagonal matrix."""
    lower = np.ascontiguousarray(random_upper_invertible(rng, n, p).T)
    return matmul_mod(lower, random_upper_invertible(rng, n, p), p)


def block_diag(*blocks: PrimeFieldMatrix) -> PrimeFieldMatrix:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
