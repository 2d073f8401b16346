"""Partitions (Young diagrams), the dominance order, and the square-zero
predicates used in the component analysis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """A nonincreasing tuple of positive box counts, one per row."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p <= 0:
                raise DomainError(f"partition parts must be positive, got: {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"partition parts must be nonincreasing, got: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "Partition":
        """Sort arbitrary nonnegative counts into a partition, dropping zeros."""
        values = [int(c) for c in counts]
        if any(c < 0 for c in values):
            raise DomainError(f"row counts must be nonnegative, got: {values!r}")
        return cls(tuple(sorted((c for c in values if c > 0), reverse=True)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def row(self, index: int) -> int:
        """Row length, 0 past the last row."""
        return self.parts[index] if 0 <= index < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_columns(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return Partition(
            tuple(sum(1 for p in self.parts if p > c) for c in range(self.num_columns))
        )

    def column_count(self, k: int) -> int:
        """N_k: number of boxes in the first k columns."""
        return sum(min(p, k) for p in self.parts)

    def column_counts(self, upto: int) -> List[int]:
        return [self.column_count(k) for k in range(1, upto + 1)]

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(
            other.parts[i] <= self.parts[i] for i in range(len(other))
        )

    def is_column_strip_over(self, inner: "Partition") -> bool:
        """True when self / inner is a skew shape with at most one box per row."""
        if not self.contains(inner):
            return False
        return all(self.parts[i] - inner.row(i) <= 1 for i in range(len(self)))

    def cells(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition(())


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""

    if n < 0:
        raise DomainError(f"cannot partition a negative number: {n!r}")

    def _gen(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in _gen(remaining - first, first):
                yield (first,) + rest

    for parts in _gen(n, n):
        yield Partition(parts)


def dominance_partition(a: Partition, b: Partition) -> bool:
    """Whether a ⪯ b: a has at least as many boxes as b in every leading block of columns."""

    if a.size != b.size:
        raise DomainError(f"dominance needs equal sizes, got {a.size} and {b.size}")
    width = max(a.num_columns, b.num_columns)
    return all(a.column_count(k) >= b.column_count(k) for k in range(1, width + 1))


def square_zero_condition(lam: Partition) -> bool:
    """Pairs of consecutive rows differ by 0 or 1 and an odd trailing row has length 1.

    Exactly the Jordan types of squares of nilpotent matrices.
    """

    parts = lam.parts
    k = len(parts)
    for i in range(k // 2):
        if parts[2 * i] - parts[2 * i + 1] not in (0, 1):
            return False
    if k % 2 == 1 and parts[-1] != 1:
        return False
    return True


def square_jordan_type(mu: Partition) -> Partition:
    """Jordan type of x**2 when x has Jordan type mu."""

    halves: List[int] = []
    for part in mu.parts:
        halves.append((part + 1) // 2)
        halves.append(part // 2)
    return Partition.from_counts(halves)
