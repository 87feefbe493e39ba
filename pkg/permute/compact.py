"""
Compact distributed permutation game: every student submits O(log n) bits
instead of a full integer in [0, n!), and the bids are combined position by
position into a priority order.

Position p is decided by a_{n-1-p} + b_p, two bids from different students,
so one student bidding uniformly over their range makes that position's
choice uniform. For odd n the middle position would take both bids from the
same student, so the extra bids a_0 and b_{n-1} are added in there.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from common.errors import RangeError, ValidationError
from permute.lehmer import Permutation


class BidRange(NamedTuple):
    """
    Declared bid ranges of one student.

    Attributes
    ----------
    a : int | None
        The student's a-bid lies in [0, a); None if they submit no a-bid.
    b : int | None
        The student's b-bid lies in [0, b); None if they submit no b-bid.
    """

    a: int | None
    b: int | None


def compact_bid_ranges(n: int) -> list[BidRange]:
    """
    Declared bid ranges of every student for a group of size n.

    Interior students bid a_i in [0, i] and b_i in [0, n - i), both complete
    residue systems for the position they feed.

    Parameters
    ----------
    n : int
        Number of students.

    Returns
    -------
    list[BidRange]
        Range sizes for students 0 to n - 1.
    """
    if n < 1:
        raise ValidationError(f"group size must be positive, got {n}", "$.n")
    if n == 1:
        return [BidRange(None, None)]

    half: int = n // 2
    odd: bool = n % 2 == 1
    ranges: list[BidRange] = [BidRange(half + 1 if odd else None, n)]
    i: int
    for i in range(1, n - 1):
        ranges.append(BidRange(i + 1, n - i))
    ranges.append(BidRange(n, half + 1 if odd else None))
    return ranges


@dataclass(slots=True, frozen=True)
class CompactBids:
    """
    The (a, b) bid pair of every student. Missing bids are None.

    Attributes
    ----------
    a : tuple[int | None, ...]
        a-bid of each student.
    b : tuple[int | None, ...]
        b-bid of each student.
    """

    a: tuple[int | None, ...]
    b: tuple[int | None, ...]

    def __len__(self) -> int:
        return len(self.a)

    @classmethod
    def zeros(cls, n: int) -> "CompactBids":
        """All declared bids set to 0 for a group of size n."""
        ranges: list[BidRange] = compact_bid_ranges(n)
        return cls(
            tuple(None if r.a is None else 0 for r in ranges),
            tuple(None if r.b is None else 0 for r in ranges),
        )

    def validate(self, n: int) -> None:
        """
        Check every bid is present and within its declared range.

        Parameters
        ----------
        n : int
            Group size.

        Raises
        ------
        ValidationError
            If the bid vectors have the wrong length or a declared bid is missing.
        RangeError
            If a bid is outside its range; names the student and the bid.
        """
        if len(self.a) != n or len(self.b) != n:
            raise ValidationError(f"expected bids for {n} students", "$.bids")

        student: int
        limits: BidRange
        for student, limits in enumerate(compact_bid_ranges(n)):
            name: str
            limit: int | None
            bid: int | None
            for name, limit, bid in (("a", limits.a, self.a[student]), ("b", limits.b, self.b[student])):
                if limit is None:
                    continue
                if bid is None:
                    raise ValidationError(f"missing bid {name}", f"$.bids[{student}].{name}")
                if not 0 <= bid < limit:
                    raise RangeError(
                        f"student {student} bid {name}={bid}, outside [0, {limit})",
                        agent=student,
                        value=bid,
                    )


def _bid(values: tuple[int | None, ...], index: int) -> int:
    value: int | None = values[index]
    return 0 if value is None else value


def compact_priority_order(bids: CompactBids, n: int) -> Permutation:
    """
    Combine compact bids into a priority order over students.

    Position 0 holds student (a_{n-1} + b_0) mod n. Position p >= 1 takes the
    index (a_{n-1-p} + b_p) mod (n - p) into the remaining students sorted by
    descending student number. For odd n = 2k + 1, position k uses
    (a_k + b_k + a_0 + b_{n-1}) mod (k + 1) instead.

    Parameters
    ----------
    bids : CompactBids
        Every student's bids.
    n : int
        Number of students.

    Returns
    -------
    Permutation
        Student at each priority position.
    """
    bids.validate(n)
    if n == 1:
        return [0]

    first: int = (_bid(bids.a, n - 1) + _bid(bids.b, 0)) % n
    order: Permutation = [first]
    remaining: list[int] = sorted((s for s in range(n) if s != first), reverse=True)

    middle: int | None = n // 2 if n % 2 == 1 else None
    position: int
    for position in range(1, n):
        total: int = _bid(bids.a, n - 1 - position) + _bid(bids.b, position)
        if position == middle:
            total += _bid(bids.a, 0) + _bid(bids.b, n - 1)
        order.append(remaining.pop(total % (n - position)))
    return order


def enumerate_compact_bids(n: int) -> Iterator[CompactBids]:
    """
    Every bid vector in the declared ranges, in lexicographic order.

    Parameters
    ----------
    n : int
        Number of students.

    Yields
    ------
    CompactBids
        One bid vector per element of the product of all ranges.
    """
    ranges: list[BidRange] = compact_bid_ranges(n)
    slots: list[range] = []
    limits: BidRange
    for limits in ranges:
        slots.append(range(limits.a) if limits.a is not None else range(1))
        slots.append(range(limits.b) if limits.b is not None else range(1))

    values: tuple[int, ...]
    for values in itertools.product(*slots):
        yield CompactBids(
            tuple(None if r.a is None else values[2 * s] for s, r in enumerate(ranges)),
            tuple(None if r.b is None else values[2 * s + 1] for s, r in enumerate(ranges)),
        )
