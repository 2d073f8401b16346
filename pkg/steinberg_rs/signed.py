"""Signed Young diagrams of signature (n, n).

A row is stored as `(length, start_sign)`; signs alternate along a row, so
the sign of any box is recovered from its column parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import DomainError, InconsistentCountsError
from .partitions import Partition

PLUS = "+"
MINUS = "-"

SignedRow = Tuple[int, str]

_SIGN_ALIASES = {"+": PLUS, "-": MINUS, "−": MINUS}


def _normalize_sign(sign: str) -> str:
    try:
        return _SIGN_ALIASES[sign]
    except KeyError:
        raise DomainError(f"invalid sign: {sign!r}") from None


def _flip(sign: str) -> str:
    return MINUS if sign == PLUS else PLUS


def _row_key(row: SignedRow) -> Tuple[int, int]:
    length, start = row
    return (-length, 0 if start == PLUS else 1)


def box_sign(row: SignedRow, column: int) -> str:
    """Sign of the box in 0-based `column` of the row."""
    return row[1] if column % 2 == 0 else _flip(row[1])


def _row_sign_counts(length: int, start: str) -> Tuple[int, int]:
    first = (length + 1) // 2
    second = length // 2
    return (first, second) if start == PLUS else (second, first)


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: Tuple[SignedRow, ...] = ()

    def __post_init__(self) -> None:
        clean: List[SignedRow] = []
        for row in self.rows:
            try:
                length, start = row
            except (TypeError, ValueError):
                raise DomainError(f"signed row must be (length, sign), got: {row!r}") from None
            length = int(length)
            if length <= 0:
                raise DomainError(f"signed row length must be positive, got: {length!r}")
            clean.append((length, _normalize_sign(start)))
        plus = sum(_row_sign_counts(length, start)[0] for length, start in clean)
        minus = sum(_row_sign_counts(length, start)[1] for length, start in clean)
        if plus != minus:
            raise DomainError(
                f"signed diagram must have signature (n,n), got ({plus},{minus})"
            )
        object.__setattr__(self, "rows", tuple(sorted(clean, key=_row_key)))

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "SignedYoungDiagram":
        """Build from rows written as alternating sign strings, e.g. ["+-+", "-+-"]."""

        parsed: List[SignedRow] = []
        for text in rows:
            signs = [_normalize_sign(ch) for ch in text.strip()]
            if not signs:
                raise DomainError("signed row string is empty")
            for a, b in zip(signs, signs[1:]):
                if a == b:
                    raise DomainError(f"signs must alternate along a row, got: {text!r}")
            parsed.append((len(signs), signs[0]))
        return cls(tuple(parsed))

    def to_strings(self) -> List[str]:
        return [
            "".join(box_sign(row, c) for c in range(row[0])) for row in self.rows
        ]

    @property
    def n(self) -> int:
        return sum(length for length, _ in self.rows) // 2

    @property
    def shape(self) -> Partition:
        return Partition(tuple(length for length, _ in self.rows))

    @property
    def num_columns(self) -> int:
        return self.rows[0][0] if self.rows else 0

    def count(self, sign: str, k: int) -> int:
        """c_k[sign]: boxes with this sign in the first k columns."""
        sign = _normalize_sign(sign)
        total = 0
        for row in self.rows:
            length, start = row
            width = min(length, k)
            first = (width + 1) // 2
            second = width // 2
            total += first if start == sign else second
        return total

    def __str__(self) -> str:
        return "/".join(self.to_strings())


def column_counts(diagram: SignedYoungDiagram, upto: int = 0) -> Tuple[List[int], List[int]]:
    """Plus and minus counts in the first k columns, k = 1..max(#columns, upto)."""

    width = max(diagram.num_columns, upto)
    plus = [diagram.count(PLUS, k) for k in range(1, width + 1)]
    minus = [diagram.count(MINUS, k) for k in range(1, width + 1)]
    return plus, minus


def signed_from_column_counts(plus: Sequence[int], minus: Sequence[int]) -> SignedYoungDiagram:
    """Rebuild the unique signed diagram with the given signed column counts.

    In column k a row starting with + shows + when k is odd and - when k is
    even, so the counts of rows of length >= k by starting sign are read off
    the increments of the two sequences.
    """

    plus = [int(v) for v in plus]
    minus = [int(v) for v in minus]
    if len(plus) != len(minus):
        raise InconsistentCountsError(
            f"count sequences differ in length: {len(plus)} vs {len(minus)}"
        )
    if plus and plus[-1] != minus[-1]:
        raise InconsistentCountsError(
            f"final counts must agree, got plus={plus[-1]!r} minus={minus[-1]!r}"
        )

    starts_plus: List[int] = []
    starts_minus: List[int] = []
    prev_plus = prev_minus = 0
    for k, (cp, cm) in enumerate(zip(plus, minus), start=1):
        dp, dm = cp - prev_plus, cm - prev_minus
        if dp < 0 or dm < 0:
            raise InconsistentCountsError(f"counts decrease at column {k}: plus={plus!r} minus={minus!r}")
        if k % 2 == 1:
            starts_plus.append(dp)
            starts_minus.append(dm)
        else:
            starts_plus.append(dm)
            starts_minus.append(dp)
        prev_plus, prev_minus = cp, cm

    for profile in (starts_plus, starts_minus):
        for a, b in zip(profile, profile[1:]):
            if b > a:
                raise InconsistentCountsError(
                    f"row profile is not nonincreasing: plus={plus!r} minus={minus!r}"
                )

    rows: List[SignedRow] = []
    for sign, profile in ((PLUS, starts_plus), (MINUS, starts_minus)):
        for k, here in enumerate(profile, start=1):
            after = profile[k] if k < len(profile) else 0
            rows.extend([(k, sign)] * (here - after))

    result = SignedYoungDiagram(tuple(rows))
    if column_counts(result, upto=len(plus)) != (plus, minus):
        raise InconsistentCountsError(
            f"counts do not describe a signed diagram: plus={plus!r} minus={minus!r}"
        )
    return result


def duplicate_signed(lam: Partition) -> SignedYoungDiagram:
    """Λ[2λ]: every row of λ twice, once starting with each sign."""
    rows: List[SignedRow] = []
    for part in lam:
        rows.append((part, PLUS))
        rows.append((part, MINUS))
    return SignedYoungDiagram(tuple(rows))


def swap_signs(diagram: SignedYoungDiagram) -> SignedYoungDiagram:
    return SignedYoungDiagram(tuple((length, _flip(start)) for length, start in diagram.rows))


def sign_prefix_partitions(diagram: SignedYoungDiagram) -> Tuple[Partition, Partition]:
    """Per-row sign counts ignoring each row's rightmost box, as two partitions."""

    plus: List[int] = []
    minus: List[int] = []
    for length, start in diagram.rows:
        p, m = _row_sign_counts(length - 1, start)
        plus.append(p)
        minus.append(m)
    return Partition.from_counts(plus), Partition.from_counts(minus)


def dominance_signed(a: SignedYoungDiagram, b: SignedYoungDiagram) -> bool:
    """Whether a ⪯ b in the signed dominance order."""

    if a.n != b.n:
        raise DomainError(f"signed dominance needs equal signatures, got n={a.n} and n={b.n}")
    width = max(a.num_columns, b.num_columns)
    return all(
        a.count(PLUS, k) >= b.count(PLUS, k) and a.count(MINUS, k) >= b.count(MINUS, k)
        for k in range(1, width + 1)
    )


def maximal_elements(diagrams: Iterable[SignedYoungDiagram]) -> List[SignedYoungDiagram]:
    """Dominance-maximal members of a collection, deduplicated, in input order."""

    unique: List[SignedYoungDiagram] = []
    for d in diagrams:
        if d not in unique:
            unique.append(d)
    return [
        d
        for d in unique
        if not any(other != d and dominance_signed(d, other) for other in unique)
    ]


def expected_components(n: int) -> List[SignedYoungDiagram]:
    """The signed diagrams indexing the irreducible components of the image.

    n = 1 gives the two one-row diagrams; for n >= 2 the list is
    [Λ₊, Λ₀, Λ₋].
    """

    if n < 1:
        raise DomainError(f"components are defined for n >= 1, got: {n!r}")
    if n == 1:
        return [
            SignedYoungDiagram(((2, PLUS),)),
            SignedYoungDiagram(((2, MINUS),)),
        ]
    if n % 2 == 0:
        return [
            SignedYoungDiagram(((n, PLUS), (n, PLUS))),
            SignedYoungDiagram(((n, PLUS), (n, MINUS))),
            SignedYoungDiagram(((n, MINUS), (n, MINUS))),
        ]
    return [
        SignedYoungDiagram(((n + 1, PLUS), (n - 1, PLUS))),
        SignedYoungDiagram(((n, PLUS), (n, MINUS))),
        SignedYoungDiagram(((n + 1, MINUS), (n - 1, MINUS))),
    ]


def square_zero_witness(n: int) -> SignedYoungDiagram:
    """First row "+-+-", every other box a single-box row.

    Its plus prefixes form (2), which fails the square-zero test, so it never
    shows up in the exotic image.
    """

    if n < 2:
        raise DomainError(f"witness needs n >= 2, got: {n!r}")
    rows: List[SignedRow] = [(4, PLUS)]
    rows.extend([(1, PLUS)] * (n - 2))
    rows.extend([(1, MINUS)] * (n - 2))
    return SignedYoungDiagram(tuple(rows))
