"""The generalized Steinberg map on partial permutations.

Covers Φ, the triple bijection and its inverse, the Ξ_k and Ξ_s images of
the generic orbits (τ; 1_n), the △ skew tableau and the fiber counts.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    DomainError,
    InconsistentCountsError,
    InternalInconsistencyError,
    NotInImageError,
)
from .insertion import (
    Bijection,
    column_insert,
    column_word,
    rectify,
    row_insert,
    row_uninsert,
    rs_inverse,
    rs_pair,
    star,
)
from .partial_perm import PartialPermutation, decompose, enumerate_partial_permutations
from .partitions import Partition
from .signed import SignedYoungDiagram, signed_from_column_counts
from .tableau import Cell, SkewTableau, Tableau, count_standard_tableaux, enumerate_standard_tableaux

logger = logging.getLogger(__name__)

ShapePair = Tuple[Partition, Partition]


@dataclass(frozen=True)
class Triple:
    """(T1, T2, ν): standard tableaux on 1..n whose shapes exceed ν by column strips."""

    T1: Tableau
    T2: Tableau
    nu: Partition

    def __post_init__(self) -> None:
        n = self.T1.size
        if self.T2.size != n:
            raise DomainError(f"T1 and T2 sizes differ: {n} vs {self.T2.size}")
        for name, t in (("T1", self.T1), ("T2", self.T2)):
            if not t.is_standard():
                raise DomainError(f"{name} must be a standard tableau on 1..{n}")
            if not t.shape.is_column_strip_over(self.nu):
                raise DomainError(
                    f"shape of {name} {t.shape} is not a column strip over nu {self.nu}"
                )

    @property
    def n(self) -> int:
        return self.T1.size

    @property
    def shapes(self) -> ShapePair:
        return self.T1.shape, self.T2.shape


def _insert_ells(t: Tableau, ells: Sequence[int]) -> Tableau:
    """T ← ℓ_s ← ... ← ℓ_1."""
    for value in reversed(ells):
        t = row_insert(t, value)
    return t


def _insert_ms(ms: Sequence[int], t: Tableau) -> Tableau:
    """m_s → ... → m_1 → T, so m_1 goes in first."""
    for value in ms:
        t = column_insert(value, t)
    return t


def phi(tau: PartialPermutation) -> ShapePair:
    """Φ(τ) = (shape(RS1(σ) * column(ℓ)), shape(column(m) * RS2(σ)))."""

    d = decompose(tau)
    p, q = rs_pair(d.sigma)
    lam = star(p, column_word(d.L)).shape
    mu = star(column_word(d.M), q).shape
    return lam, mu


def triple(tau: PartialPermutation) -> Triple:
    """(RS1(σ) ← ℓ_s ← ... ← ℓ_1, m_s → ... → m_1 → RS2(σ), shape of RS1(σ))."""

    d = decompose(tau)
    p, q = rs_pair(d.sigma)
    return Triple(T1=_insert_ells(p, d.L), T2=_insert_ms(d.M, q), nu=p.shape)


def _strip_rows(outer: Partition, nu: Partition) -> List[int]:
    """Rows holding a box of outer / nu, bottom-most first."""
    return [i for i in reversed(range(len(outer))) if outer.row(i) > nu.row(i)]


def triple_inverse(t: Triple) -> PartialPermutation:
    """Undo `triple`: pop the strip boxes, then invert RS on the residual pair."""

    n = t.n
    s1 = t.T1
    ells: List[int] = []
    for i in _strip_rows(t.T1.shape, t.nu):
        s1, value = row_uninsert(s1, i)
        ells.append(value)

    s2t = t.T2.transpose()
    ms_popped: List[int] = []
    for i in _strip_rows(t.T2.shape, t.nu):
        s2t, value = row_uninsert(s2t, t.T2.shape.row(i) - 1)
        ms_popped.append(value)

    if any(a >= b for a, b in zip(ells, ells[1:])):
        raise NotInImageError(f"popped values from T1 are not increasing: {ells!r}")
    if any(a <= b for a, b in zip(ms_popped, ms_popped[1:])):
        raise NotInImageError(f"popped values from T2 are not decreasing: {ms_popped!r}")
    s2 = s2t.transpose()
    if s1.shape != s2.shape:
        raise NotInImageError(f"residual shapes differ: {s1.shape} vs {s2.shape}")

    sigma = rs_inverse(s1, s2)
    word = [0] * n
    for source, target in sigma.pairs:
        word[source - 1] = target
    tau = PartialPermutation(n, tuple(word))
    if triple(tau) != t:
        raise NotInImageError("triple is not in the image of the correspondence")
    return tau


def xi_k_generic(tau: PartialPermutation) -> ShapePair:
    """Ξ_k of the orbit (τ; 1_n); it coincides with Φ(τ)."""
    return phi(tau)


def _check_triangle_input(
    t1: Tableau, t2: Tableau, ells: Sequence[int], ms: Sequence[int], n: int
) -> None:
    if t1.shape != t2.shape:
        raise DomainError(f"T1 and T2 shapes differ: {t1.shape} vs {t2.shape}")
    if len(ells) != len(ms):
        raise DomainError(f"ells and ms differ in length: {len(ells)} vs {len(ms)}")
    for name, seq in (("ells", ells), ("ms", ms)):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise DomainError(f"{name} must be strictly increasing, got: {list(seq)!r}")
    if set(ells) & t1.entries:
        raise DomainError(f"ells meet the entries of T1: {sorted(set(ells) & t1.entries)!r}")
    if set(ms) & t2.entries:
        raise DomainError(f"ms meet the entries of T2: {sorted(set(ms) & t2.entries)!r}")
    values = list(t1.entries) + list(t2.entries) + list(ells) + list(ms)
    if any(not 1 <= v <= n for v in values):
        raise DomainError(f"entries must lie in 1..{n}")


def _reverse_slide(
    cells: Dict[Cell, int], inner: List[int], cell: Cell
) -> Cell:
    """Slide outward into the empty outer cell; returns the cell vacated inside."""

    i, j = cell
    while True:
        up = cells.get((i - 1, j))
        left = cells.get((i, j - 1))
        if up is None and left is None:
            break
        if left is None or (up is not None and up > left):
            cells[(i, j)] = cells.pop((i - 1, j))
            i -= 1
        else:
            cells[(i, j)] = cells.pop((i, j - 1))
            j -= 1
    while len(inner) <= i:
        inner.append(0)
    inner[i] = j + 1
    return i, j


def _unrectify_into_column(hat1: Tableau, target: Partition, s: int) -> Optional[Dict[Cell, int]]:
    """Reverse-slide hat1 into the cells of target until the inner shape is (1^s)."""

    def _search(cells: Dict[Cell, int], inner: List[int], outer: List[int], k: int):
        if k == s:
            return cells if tuple(outer) == target.parts else None
        for i in range(len(target)):
            j = outer[i] if i < len(outer) else 0
            if j >= target.row(i):
                continue
            if i > 0 and (outer[i - 1] if i - 1 < len(outer) else 0) <= j:
                continue
            trial_cells = dict(cells)
            trial_inner = list(inner)
            vacated = _reverse_slide(trial_cells, trial_inner, (i, j))
            if vacated != (k, 0):
                continue
            trial_outer = list(outer)
            if i == len(trial_outer):
                trial_outer.append(0)
            trial_outer[i] += 1
            found = _search(trial_cells, trial_inner, trial_outer, k + 1)
            if found is not None:
                return found
        return None

    start = {(i, j): v for i, row in enumerate(hat1.rows) for j, v in enumerate(row)}
    return _search(start, [], list(hat1.shape.parts), 0)


def triangle(
    t1: Tableau, t2: Tableau, ells: Sequence[int], ms: Sequence[int], n: int
) -> SkewTableau:
    """column(m) * T2 △ T1 * column(ℓ).

    Row-insert the ℓ's into T1, pad T2 to the new shape with n+1..n+s from
    top to bottom, column-insert the m's into the padded T2, then take the
    skew tableau over a single column of s boxes that rectifies to the grown T1.
    """

    ells = [int(v) for v in ells]
    ms = [int(v) for v in ms]
    _check_triangle_input(t1, t2, ells, ms, n)
    s = len(ells)

    hat1 = _insert_ells(t1, ells)
    hat2_rows = t2.as_lists()
    new_rows = [i for i in range(len(hat1.rows)) if hat1.shape.row(i) > t1.shape.row(i)]
    for offset, i in enumerate(new_rows):
        if i == len(hat2_rows):
            hat2_rows.append([])
        hat2_rows[i].append(n + 1 + offset)
    hat2 = Tableau(tuple(tuple(r) for r in hat2_rows))
    bar2 = _insert_ms(ms, hat2)

    if s == 0:
        return SkewTableau.straight(hat1)

    cells = _unrectify_into_column(hat1, bar2.shape, s)
    if cells is None:
        raise InternalInconsistencyError(
            f"no skew tableau of shape {bar2.shape}/(1^{s}) rectifies to {hat1.rows!r}"
        )
    result = SkewTableau.from_cells(bar2.shape, Partition((1,) * s), cells)
    if rectify(result) != hat1:
        raise InternalInconsistencyError("triangle output does not rectify to the grown T1")
    return result


def triangle_for(tau: PartialPermutation) -> SkewTableau:
    d = decompose(tau)
    p, q = rs_pair(d.sigma)
    return triangle(p, q, d.L, d.M, tau.n)


def triangle_by_erasure(tau: PartialPermutation) -> SkewTableau:
    """△ read off one RS insertion tableau with the negative entries erased.

    Sources m_s..m_1, j_1..j_r, n+1..n+s map to -s..-1, i_1..i_r, ℓ_s..ℓ_1.
    """

    d = decompose(tau)
    n, s = tau.n, d.s
    pairs = [(m, -(k + 1)) for k, m in enumerate(d.M)]
    pairs.extend(d.sigma.pairs)
    pairs.extend((n + s - k, ell) for k, ell in enumerate(d.L))
    p, _ = rs_pair(Bijection(tuple(pairs)))

    cells = {
        (i, j): v for i, row in enumerate(p.rows) for j, v in enumerate(row) if v > 0
    }
    erased = [(i, j) for i, row in enumerate(p.rows) for j, v in enumerate(row) if v < 0]
    inner_counts = [0] * len(p.rows)
    for i, j in erased:
        inner_counts[i] = max(inner_counts[i], j + 1)
    return SkewTableau.from_cells(p.shape, Partition.from_counts(inner_counts), cells)


def xi_s_counts(tau: PartialPermutation) -> Tuple[List[int], List[int]]:
    """Signed column counts of Ξ_s(τ; 1_n), trimmed once both reach n."""

    d = decompose(tau)
    n, s = tau.n, d.s
    p, q = rs_pair(d.sigma)
    lam = _insert_ells(p, d.L).shape
    mu = _insert_ms(d.M, q).shape
    skew = triangle(p, q, d.L, d.M, n)

    plus: List[int] = []
    minus: List[int] = []
    for k in range(1, 2 * n + 2):
        if k % 2 == 0:
            plus.append(lam.column_count(k))
            minus.append(mu.column_count(k))
        else:
            plus.append(skew.column_count(k))
            minus.append(s + p.shape.column_count(k))
        if plus[-1] == n and minus[-1] == n:
            break
    return plus, minus


def xi_s_generic(tau: PartialPermutation) -> SignedYoungDiagram:
    plus, minus = xi_s_counts(tau)
    try:
        return signed_from_column_counts(plus, minus)
    except InconsistentCountsError as exc:
        logger.error("exotic column counts for %s do not form a signed diagram", tau)
        raise InternalInconsistencyError(str(exc)) from exc


def _strip_bases(lam: Partition, mu: Partition) -> Iterator[Partition]:
    rows = max(len(lam), len(mu))
    choices = []
    for i in range(rows):
        a, b = lam.row(i), mu.row(i)
        options = sorted({a, a - 1} & {b, b - 1})
        choices.append([v for v in options if v >= 0])
    for combo in product(*choices):
        if all(x >= y for x, y in zip(combo, combo[1:])):
            yield Partition.from_counts(combo)


def strip_bases(lam: Partition, mu: Partition) -> List[Partition]:
    """Every ν inside λ and μ with λ/ν and μ/ν column strips, largest first."""
    return sorted(set(_strip_bases(lam, mu)), key=lambda nu: (-nu.size, nu.parts))


def fiber_enumeration(lam: Partition, mu: Partition, n: int, max_size: int = 10) -> Iterator[Triple]:
    if lam.size != n or mu.size != n:
        raise DomainError(f"shapes must both have size {n}, got {lam.size} and {mu.size}")
    t1s = list(enumerate_standard_tableaux(lam, max_size=max_size))
    t2s = list(enumerate_standard_tableaux(mu, max_size=max_size))
    for nu in strip_bases(lam, mu):
        for t1 in t1s:
            for t2 in t2s:
                yield Triple(T1=t1, T2=t2, nu=nu)


def fiber_count_formula(lam: Partition, mu: Partition, max_size: int = 10) -> int:
    """Σ_r m_r(λ, μ) · |STab(λ)| · |STab(μ)|."""
    if lam.size != mu.size:
        raise DomainError(f"shapes must have equal size, got {lam.size} and {mu.size}")
    return (
        len(strip_bases(lam, mu))
        * count_standard_tableaux(lam, max_size=max_size)
        * count_standard_tableaux(mu, max_size=max_size)
    )


def phi_fibers(n: int, max_n: int = 7) -> Dict[ShapePair, int]:
    """|Φ⁻¹(λ, μ)| for every pair in the image, by sweeping all of 𝔗_n."""
    counts: Counter = Counter(phi(tau) for tau in enumerate_partial_permutations(n, max_n=max_n))
    return dict(counts)
