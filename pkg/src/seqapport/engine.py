"""Sequential seat allocation under stationary and geometric-mean signposts."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .rational import GeometricMean, Ordering, SignpostRule, Stationary, compare_claims

__all__ = [
    "VoteProfile",
    "Apportionment",
    "TieBreak",
    "PeriodicSequence",
    "as_rule",
    "next_seat",
    "generate",
    "generate_period",
    "totals",
]


class TieBreak(enum.Enum):
    """Who wins an exact tie between claims.

    Parties with equal votes always go to the smaller canonical rank.
    """

    FAVOR_LARGER = "larger"
    FAVOR_SMALLER = "smaller"


@dataclass(frozen=True)
class VoteProfile:
    """Positive integer votes in user order, plus the canonical ranking.

    Canonical rank 1 is the party with the most votes; equal votes keep
    their user order.
    """

    votes: tuple[int, ...]
    canonical: tuple[int, ...] = field(init=False, repr=False)
    rank_of: tuple[int, ...] = field(init=False, repr=False)
    user_of: tuple[int, ...] = field(init=False, repr=False)
    g: int = field(init=False, repr=False)
    period: int = field(init=False, repr=False)

    def __post_init__(self):
        votes = tuple(self.votes)
        if not votes:
            raise ValueError("at least one party is required")
        for v in votes:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"votes must be integers, got {v!r}")
            if v < 1:
                raise ValueError(f"votes must be positive, got {v}")
        order = sorted(range(len(votes)), key=lambda i: -votes[i])
        rank_of = [0] * len(votes)
        for rank, i in enumerate(order, start=1):
            rank_of[i] = rank
        g = reduce(math.gcd, votes)
        object.__setattr__(self, "votes", votes)
        object.__setattr__(self, "canonical", tuple(votes[i] for i in order))
        object.__setattr__(self, "rank_of", tuple(rank_of))
        object.__setattr__(self, "user_of", tuple(i + 1 for i in order))
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "period", sum(votes) // g)

    @property
    def n(self) -> int:
        return len(self.votes)

    @property
    def reduced(self) -> tuple[int, ...]:
        """Canonical votes divided by their gcd: the seats in one period."""
        return tuple(v // self.g for v in self.canonical)

    def vote(self, rank: int) -> int:
        return self.canonical[rank - 1]

    def to_user(self, ranks: Iterable[int]) -> tuple[int, ...]:
        """Map canonical ranks to 1-based user positions."""
        return tuple(self.user_of[r - 1] for r in ranks)

    def to_canonical(self, positions: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.rank_of[i - 1] for i in positions)

    def canonical_seats(self, user_seats: Sequence[int]) -> "Apportionment":
        """Reorder a per-party vector given in user order into canonical order."""
        if len(user_seats) != self.n:
            raise ValueError(f"expected {self.n} seat counts, got {len(user_seats)}")
        return Apportionment(tuple(user_seats[u - 1] for u in self.user_of))

    def scaled(self, factor: int) -> "VoteProfile":
        return VoteProfile(tuple(v * factor for v in self.votes))


@dataclass(frozen=True)
class Apportionment:
    seats: tuple[int, ...]

    def __post_init__(self):
        seats = tuple(self.seats)
        if any(a < 0 for a in seats):
            raise ValueError(f"seat counts must be non-negative: {seats}")
        object.__setattr__(self, "seats", seats)

    @property
    def house(self) -> int:
        return sum(self.seats)

    @classmethod
    def zeros(cls, n: int) -> "Apportionment":
        return cls((0,) * n)


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a stationary allocation sequence, in canonical ranks."""

    profile: VoteProfile
    period: tuple[int, ...]
    cut_region: object | None = None

    @property
    def P(self) -> int:
        return len(self.period)


def as_rule(rule: SignpostRule | Fraction | int | str) -> SignpostRule:
    if isinstance(rule, (Stationary, GeometricMean)):
        return rule
    return Stationary(rule)


def next_seat(
    profile: VoteProfile,
    current: Apportionment,
    rule: SignpostRule,
    tie: TieBreak = TieBreak.FAVOR_LARGER,
) -> int:
    """Canonical rank of the party that receives the next seat."""
    rule = as_rule(rule)
    seats = current.seats
    if len(seats) != profile.n:
        raise ValueError(f"apportionment has {len(seats)} entries for {profile.n} parties")
    votes = profile.canonical
    best = 0
    for r in range(1, profile.n):
        order = compare_claims(votes[r], seats[r], votes[best], seats[best], rule)
        if order is Ordering.I_GREATER or (
            order is Ordering.EQUAL and tie is TieBreak.FAVOR_SMALLER and votes[r] < votes[best]
        ):
            best = r
    return best + 1


def _generate_stationary(votes, seats, c: Fraction, h: int, favor_smaller: bool) -> list[int]:
    # Same decision as next_seat, with compare_claims inlined for speed.
    num, den = c.numerator, c.denominator
    n = len(votes)
    denoms = [a * den + num for a in seats]
    out = []
    for _ in range(h):
        best = 0
        bp = votes[0]
        bd = denoms[0]
        for r in range(1, n):
            d = denoms[r]
            p = votes[r]
            if bd == 0:
                # votes are non-increasing, so a later infinite claim never wins
                continue
            if d == 0:
                best, bp, bd = r, p, d
                continue
            x = p * bd - bp * d
            if x > 0 or (x == 0 and favor_smaller and p < bp):
                best, bp, bd = r, p, d
        denoms[best] += den
        out.append(best + 1)
    return out


def generate(
    profile: VoteProfile,
    rule: SignpostRule | Fraction | int | str,
    h: int,
    initial: Apportionment | None = None,
    tie: TieBreak = TieBreak.FAVOR_LARGER,
) -> tuple[int, ...]:
    """The first ``h`` seat awards as canonical ranks.

    ``initial`` holds seats already assigned before the first award, in
    canonical order.
    """
    rule = as_rule(rule)
    if h < 0:
        raise ValueError(f"house size must be non-negative, got {h}")
    seats = initial.seats if initial is not None else (0,) * profile.n
    if len(seats) != profile.n:
        raise ValueError(f"initial apportionment has {len(seats)} entries for {profile.n} parties")
    if isinstance(rule, Stationary):
        return tuple(
            _generate_stationary(profile.canonical, seats, rule.c, h, tie is TieBreak.FAVOR_SMALLER)
        )
    current = list(seats)
    out = []
    for _ in range(h):
        r = next_seat(profile, Apportionment(tuple(current)), rule, tie)
        current[r - 1] += 1
        out.append(r)
    return tuple(out)


def generate_period(
    profile: VoteProfile,
    c: Fraction | int | str,
    tie: TieBreak = TieBreak.FAVOR_LARGER,
) -> PeriodicSequence:
    rule = as_rule(c)
    if not isinstance(rule, Stationary):
        raise TypeError("only stationary signposts produce periodic sequences")
    return PeriodicSequence(profile, generate(profile, rule, profile.period, tie=tie))


def totals(sequence: Iterable[int], n: int) -> Apportionment:
    counts = [0] * n
    for r in sequence:
        if not 1 <= r <= n:
            raise ValueError(f"rank {r} outside 1..{n}")
        counts[r - 1] += 1
    return Apportionment(tuple(counts))
