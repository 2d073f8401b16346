"""Straight and skew Young tableaux filled with distinct integers.

Entries are arbitrary pairwise distinct integers, negatives included; a
standard tableau is the special case whose entries are exactly 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError, ResourceLimitError
from .partitions import Partition

Cell = Tuple[int, int]


def _freeze_rows(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Tableau:
    """Rows of distinct integers increasing along rows and down columns."""

    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = _freeze_rows(self.rows)
        if any(len(row) == 0 for row in rows):
            raise DomainError(f"tableau rows must be nonempty, got: {rows!r}")
        Partition(tuple(len(row) for row in rows))
        seen: set = set()
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value in seen:
                    raise DomainError(f"duplicate tableau entry: {value!r}")
                seen.add(value)
                if j > 0 and row[j - 1] >= value:
                    raise DomainError(f"row {i} is not increasing: {row!r}")
                if i > 0 and rows[i - 1][j] >= value:
                    raise DomainError(f"column {j} is not increasing at row {i}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def column(cls, values: Sequence[int]) -> "Tableau":
        """Single-column tableau holding the given values in increasing order."""
        return cls(tuple((v,) for v in sorted(values)))

    @classmethod
    def row(cls, values: Sequence[int]) -> "Tableau":
        ordered = tuple(sorted(values))
        return cls((ordered,) if ordered else ())

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def entries(self) -> FrozenSet[int]:
        return frozenset(v for row in self.rows for v in row)

    def is_empty(self) -> bool:
        return not self.rows

    def is_standard(self) -> bool:
        return self.entries == frozenset(range(1, self.size + 1))

    def transpose(self) -> "Tableau":
        width = len(self.rows[0]) if self.rows else 0
        return Tableau(
            tuple(
                tuple(row[c] for row in self.rows if len(row) > c) for c in range(width)
            )
        )

    def cell_of(self, value: int) -> Cell:
        for i, row in enumerate(self.rows):
            if value in row:
                return i, row.index(value)
        raise DomainError(f"value not in tableau: {value!r}")

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


EMPTY_TABLEAU = Tableau(())


def require_standard(tableau: Tableau, n: Optional[int] = None) -> Tableau:
    """Return the tableau if its entries are exactly 1..n (n defaults to its size)."""

    expected = tableau.size if n is None else n
    if tableau.entries != frozenset(range(1, expected + 1)):
        raise DomainError(
            f"expected a standard tableau on 1..{expected}, got entries {sorted(tableau.entries)!r}"
        )
    return tableau


@dataclass(frozen=True)
class SkewTableau:
    """Increasing filling of the skew diagram outer / inner.

    `rows[i]` lists the entries of row i left to right, starting at column
    inner[i]; a row may be empty when the inner shape covers it.
    """

    outer: Partition
    inner: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _freeze_rows(self.rows)
        if not self.outer.contains(self.inner):
            raise DomainError(f"inner shape {self.inner} is not inside outer shape {self.outer}")
        if len(rows) != len(self.outer):
            raise DomainError(
                f"skew tableau needs {len(self.outer)} rows, got {len(rows)}"
            )
        cells: Dict[Cell, int] = {}
        for i, row in enumerate(rows):
            start = self.inner.row(i)
            if len(row) != self.outer.row(i) - start:
                raise DomainError(f"row {i} has {len(row)} entries, expected {self.outer.row(i) - start}")
            for offset, value in enumerate(row):
                if value in cells.values():
                    raise DomainError(f"duplicate skew tableau entry: {value!r}")
                cells[(i, start + offset)] = value
        for (i, j), value in cells.items():
            left = cells.get((i, j - 1))
            up = cells.get((i - 1, j))
            if left is not None and left >= value:
                raise DomainError(f"row {i} is not increasing at column {j}")
            if up is not None and up >= value:
                raise DomainError(f"column {j} is not increasing at row {i}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_cells(cls, outer: Partition, inner: Partition, cells: Dict[Cell, int]) -> "SkewTableau":
        rows = tuple(
            tuple(cells[(i, j)] for j in range(inner.row(i), outer.row(i)))
            for i in range(len(outer))
        )
        return cls(outer, inner, rows)

    @classmethod
    def straight(cls, tableau: Tableau) -> "SkewTableau":
        return cls(tableau.shape, Partition(()), tableau.rows)

    def cells(self) -> Dict[Cell, int]:
        out: Dict[Cell, int] = {}
        for i, row in enumerate(self.rows):
            start = self.inner.row(i)
            for offset, value in enumerate(row):
                out[(i, start + offset)] = value
        return out

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def entries(self) -> FrozenSet[int]:
        return frozenset(v for row in self.rows for v in row)

    def column_count(self, k: int) -> int:
        """Number of skew boxes in the first k columns."""
        return sum(1 for (_, j) in self.cells() if j < k)

    def as_rows_with_gaps(self) -> List[List[Optional[int]]]:
        return [
            [None] * self.inner.row(i) + list(row) for i, row in enumerate(self.rows)
        ]


def enumerate_standard_tableaux(shape: Partition, max_size: int = 10) -> Iterator[Tableau]:
    """Yield every standard tableau of the given shape exactly once.

    Backtracks down Young's lattice: the largest entry sits in an outer corner,
    the rest is a standard tableau of the smaller shape.
    """

    if shape.size > max_size:
        raise ResourceLimitError(
            f"standard tableau enumeration limited to size {max_size}, got {shape.size}"
        )

    def _fill(parts: Tuple[int, ...], value: int) -> Iterator[List[List[int]]]:
        if value == 0:
            yield []
            return
        for i, length in enumerate(parts):
            below = parts[i + 1] if i + 1 < len(parts) else 0
            if length <= below:
                continue
            child = list(parts)
            child[i] -= 1
            if child[-1] == 0:
                child.pop()
            for rows in _fill(tuple(child), value - 1):
                grown = [list(r) for r in rows]
                if i == len(grown):
                    grown.append([])
                grown[i].append(value)
                yield grown

    for rows in _fill(shape.parts, shape.size):
        yield Tableau(tuple(tuple(r) for r in rows))


def count_standard_tableaux(shape: Partition, max_size: int = 10) -> int:
    return sum(1 for _ in enumerate_standard_tableaux(shape, max_size=max_size))
