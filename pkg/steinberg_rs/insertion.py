"""Row/column insertion, Robinson-Schensted, jeu de taquin and the * product."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, InternalInconsistencyError
from .partitions import Partition
from .tableau import EMPTY_TABLEAU, Cell, SkewTableau, Tableau

CornerPolicy = Callable[[List[Cell]], Cell]


@dataclass(frozen=True)
class Bijection:
    """A bijection between two finite integer sets, stored as (source, target) pairs sorted by source."""

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(s), int(t)) for s, t in self.pairs))
        sources = [s for s, _ in pairs]
        targets = [t for _, t in pairs]
        if len(set(sources)) != len(sources):
            raise DomainError(f"bijection sources must be distinct, got: {sources!r}")
        if len(set(targets)) != len(targets):
            raise DomainError(f"bijection targets must be distinct, got: {targets!r}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_lists(cls, sources: Sequence[int], targets: Sequence[int]) -> "Bijection":
        if len(sources) != len(targets):
            raise DomainError(
                f"sources and targets differ in length: {len(sources)} vs {len(targets)}"
            )
        return cls(tuple(zip(sources, targets)))

    @classmethod
    def identity(cls, n: int) -> "Bijection":
        return cls(tuple((i, i) for i in range(1, n + 1)))

    @property
    def sources(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def targets(self) -> Tuple[int, ...]:
        return tuple(t for _, t in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __call__(self, source: int) -> int:
        for s, t in self.pairs:
            if s == source:
                return t
        raise DomainError(f"not in the domain of the bijection: {source!r}")

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def inverse(self) -> "Bijection":
        return Bijection(tuple((t, s) for s, t in self.pairs))

    def is_permutation_of(self, n: int) -> bool:
        full = set(range(1, n + 1))
        return set(self.sources) == full and set(self.targets) == full


def _bump_row(rows: List[List[int]], value: int) -> int:
    """Row-insert in place; returns the index of the row that grew."""

    x = value
    for i, row in enumerate(rows):
        pos = bisect_left(row, x)
        if pos < len(row) and row[pos] == x:
            raise DomainError(f"value already in tableau: {value!r}")
        if pos == len(row):
            row.append(x)
            return i
        row[pos], x = x, row[pos]
    rows.append([x])
    return len(rows) - 1


def _check_fresh(tableau: Tableau, value: int) -> None:
    if value in tableau.entries:
        raise DomainError(f"value already in tableau: {value!r}")


def row_insert(tableau: Tableau, value: int) -> Tableau:
    """(T ← a)."""
    _check_fresh(tableau, value)
    rows = tableau.as_lists()
    _bump_row(rows, value)
    return Tableau(tuple(tuple(r) for r in rows))


def column_insert(value: int, tableau: Tableau) -> Tableau:
    """(a → T): row insertion into the transpose, transposed back."""
    _check_fresh(tableau, value)
    return row_insert(tableau.transpose(), value).transpose()


def row_word(values: Iterable[int]) -> Tableau:
    """R(a_1, ..., a_l) = (((∅ ← a_1) ← a_2) ... ← a_l)."""
    t = EMPTY_TABLEAU
    for v in values:
        t = row_insert(t, v)
    return t


def column_word(values: Iterable[int]) -> Tableau:
    """C(a_1, ..., a_l) = (a_l → ... → (a_1 → ∅)), so a_1 goes in first."""
    t = EMPTY_TABLEAU
    for v in values:
        t = column_insert(v, t)
    return t


def row_uninsert(tableau: Tableau, row: int) -> Tuple[Tableau, int]:
    """Undo a row insertion whose new box is the last box of `row`.

    Returns the smaller tableau and the value that was inserted.
    """

    rows = tableau.as_lists()
    if not 0 <= row < len(rows):
        raise DomainError(f"row index out of range: {row!r}")
    below = len(rows[row + 1]) if row + 1 < len(rows) else 0
    if len(rows[row]) <= below:
        raise DomainError(f"last box of row {row} is not a corner")
    x = rows[row].pop()
    if not rows[row]:
        rows.pop()
    for i in range(row - 1, -1, -1):
        pos = bisect_left(rows[i], x) - 1
        rows[i][pos], x = x, rows[i][pos]
    return Tableau(tuple(tuple(r) for r in rows)), x


def rs_pair(w: Bijection) -> Tuple[Tableau, Tableau]:
    """(RS1(w), RS2(w)): insertion tableau of the targets, recording tableau of the sources."""

    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for source, target in w.pairs:
        i = _bump_row(p_rows, target)
        if i == len(q_rows):
            q_rows.append([])
        q_rows[i].append(source)
    return (
        Tableau(tuple(tuple(r) for r in p_rows)),
        Tableau(tuple(tuple(r) for r in q_rows)),
    )


def rs_inverse(p: Tableau, q: Tableau) -> Bijection:
    """Recover w from (RS1(w), RS2(w)) by popping the largest recording entry first."""

    if p.shape != q.shape:
        raise DomainError(f"RS pair shapes differ: {p.shape} vs {q.shape}")
    pairs: List[Tuple[int, int]] = []
    q_rows = q.as_lists()
    while q_rows:
        source = max(v for row in q_rows for v in row)
        i = next(k for k, row in enumerate(q_rows) if row and row[-1] == source)
        q_rows[i].pop()
        if not q_rows[i]:
            q_rows.pop(i)
        p, target = row_uninsert(p, i)
        pairs.append((source, target))
    return Bijection(tuple(pairs))


def steinberg_classical(w: Bijection) -> Partition:
    """St(w): shape of the insertion tableau of a permutation of {1..n}."""

    if not w.is_permutation_of(len(w)):
        raise DomainError(f"not a permutation of 1..{len(w)}: {w.pairs!r}")
    return rs_pair(w)[0].shape


def _inside_corners(inner: List[int]) -> List[Cell]:
    corners: List[Cell] = []
    for i, length in enumerate(inner):
        below = inner[i + 1] if i + 1 < len(inner) else 0
        if length > 0 and below < length:
            corners.append((i, length - 1))
    return corners


def bottom_corner(corners: List[Cell]) -> Cell:
    return max(corners)


def rectify(skew: SkewTableau, policy: Optional[CornerPolicy] = None) -> Tableau:
    """Jeu de taquin: slide into inside corners until the inner shape is empty.

    `policy` picks the next inside corner; the default takes the bottom-most.
    """

    choose = policy or bottom_corner
    cells: Dict[Cell, int] = skew.cells()
    inner = list(skew.inner.parts)
    while any(inner):
        i, j = choose(_inside_corners(inner))
        inner[i] -= 1
        while True:
            right = cells.get((i, j + 1))
            down = cells.get((i + 1, j))
            if right is None and down is None:
                break
            if down is None or (right is not None and right < down):
                cells[(i, j)] = cells.pop((i, j + 1))
                j += 1
            else:
                cells[(i, j)] = cells.pop((i + 1, j))
                i += 1
    rows: List[List[int]] = []
    for (i, j) in sorted(cells):
        while len(rows) <= i:
            rows.append([])
        if j != len(rows[i]):
            raise InternalInconsistencyError(f"rectification left a gap at {(i, j)!r}")
        rows[i].append(cells[(i, j)])
    return Tableau(tuple(tuple(r) for r in rows))


def star_skew(t: Tableau, s: Tableau) -> SkewTableau:
    """The skew tableau with S above and to the right of T."""

    if t.entries & s.entries:
        raise DomainError(f"tableaux share entries: {sorted(t.entries & s.entries)!r}")
    width = t.shape.num_columns
    height = len(s.rows)
    outer = tuple(width + len(row) for row in s.rows) + tuple(len(row) for row in t.rows)
    inner = (width,) * height if width else ()
    rows = tuple(s.rows) + tuple(t.rows)
    return SkewTableau(Partition(outer), Partition(inner), rows)


def star(t: Tableau, s: Tableau, policy: Optional[CornerPolicy] = None) -> Tableau:
    """T * S: rectification of S placed at the top right of T."""
    return rectify(star_skew(t, s), policy)
