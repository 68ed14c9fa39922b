"""Closed-form structure of two-party allocation sequences.

With coprime votes ``p1 > p2`` one period is the word

    1^k1 2 1^k2 2 ... 1^k_p2 2 1^tail

and the exponents are determined by where the cut point falls among the
cells ``[l/(p1-p2), (l+1)/(p1-p2))``, plus the isolated point ``c = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rational import format_rational, parse_rational

__all__ = [
    "TwoPartyDecomposition",
    "RunLengths",
    "CutpointRegion",
    "CellIndex",
    "decompose",
    "runs_for_cut",
    "runs_from_prefix_sums",
    "runs_for_cell",
    "dhondt_runs",
    "validate_runs",
    "cut_interval",
    "backward_cell",
    "infer_cutpoint",
    "enumerate_two_party",
]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TwoPartyDecomposition:
    """Coprime votes ``p1 = a*p2 + b`` with ``0 <= b < p2``; ``g`` is the removed gcd."""

    p1: int
    p2: int
    g: int
    a: int
    b: int

    @property
    def gap(self) -> int:
        """Number of cells in ``[0, 1)``: ``p1 - p2``."""
        return self.p1 - self.p2


def decompose(v1: int, v2: int) -> TwoPartyDecomposition:
    if v2 < 1 or v1 < v2:
        raise ValueError(f"need v1 >= v2 >= 1, got ({v1}, {v2})")
    g = math.gcd(v1, v2)
    p1, p2 = v1 // g, v2 // g
    a, b = divmod(p1, p2)
    return TwoPartyDecomposition(p1, p2, g, a, b)


@dataclass(frozen=True)
class RunLengths:
    """Exponents ``k`` of the larger party between the smaller party's seats, and the tail."""

    k: tuple[int, ...]
    tail: int

    def __post_init__(self):
        k = tuple(self.k)
        if any(x < 0 for x in k) or self.tail < 0:
            raise ValueError(f"run lengths must be non-negative: {k}, tail {self.tail}")
        object.__setattr__(self, "k", k)

    def word(self, big: int = 1, small: int = 2) -> tuple[int, ...]:
        out: list[int] = []
        for k in self.k:
            out.extend([big] * k)
            out.append(small)
        out.extend([big] * self.tail)
        return tuple(out)

    @classmethod
    def from_word(cls, word: Sequence[int], big: int = 1, small: int = 2) -> "RunLengths":
        k: list[int] = []
        run = 0
        for s in word:
            if s == big:
                run += 1
            elif s == small:
                k.append(run)
                run = 0
            else:
                raise ValueError(f"symbol {s} is neither {big} nor {small}")
        return cls(tuple(k), run)

    @property
    def total(self) -> int:
        return sum(self.k) + self.tail


@dataclass(frozen=True)
class CutpointRegion:
    """The cut points ``lo <= c < hi`` (``lo <= c <= hi`` when ``closed``).

    The point ``{1}`` is ``lo == hi == 1`` with ``closed`` set.
    """

    lo: Fraction
    hi: Fraction
    closed: bool = False

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (ZERO <= lo <= hi <= ONE) or (lo == hi and not self.closed):
            raise ValueError(f"empty or out-of-range region: {self}")

    @classmethod
    def interval(cls, lo, hi) -> "CutpointRegion":
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def point1(cls) -> "CutpointRegion":
        return cls(ONE, ONE, True)

    @classmethod
    def whole(cls) -> "CutpointRegion":
        return cls(ZERO, ONE, True)

    @property
    def is_point1(self) -> bool:
        return self.lo == self.hi == ONE

    def __contains__(self, c) -> bool:
        c = Fraction(c)
        return self.lo <= c < self.hi or (self.closed and c == self.hi)

    def representative(self) -> Fraction:
        """Exact midpoint, or 1 for the point region."""
        if self.is_point1:
            return ONE
        return (self.lo + self.hi) / 2

    def intersect(self, other: "CutpointRegion") -> "CutpointRegion | None":
        lo = max(self.lo, other.lo)
        if self.hi < other.hi:
            hi, closed = self.hi, self.closed
        elif other.hi < self.hi:
            hi, closed = other.hi, other.closed
        else:
            hi, closed = self.hi, self.closed and other.closed
        if lo < hi or (lo == hi and closed):
            return CutpointRegion(lo, hi, closed)
        return None

    def __str__(self) -> str:
        if self.is_point1:
            return "1"
        close = "]" if self.closed else ")"
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}{close}"

    @classmethod
    def parse(cls, text: str) -> "CutpointRegion":
        text = text.strip()
        if text in ("1", "{1}"):
            return cls.point1()
        if len(text) < 2 or text[0] != "[" or text[-1] not in ")]":
            raise ValueError(f"malformed region: {text!r}")
        parts = text[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed region: {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]), text[-1] == "]")


@dataclass(frozen=True)
class CellIndex:
    """Cell ``l = nu*p2 + l'`` of the partition of ``[0, 1)`` into ``p1 - p2`` cells."""

    l: int
    nu: int
    lp: int

    @classmethod
    def of(cls, l: int, p2: int) -> "CellIndex":
        nu, lp = divmod(l, p2)
        return cls(l, nu, lp)


def _check_cut(c) -> Fraction:
    c = parse_rational(c) if not isinstance(c, Fraction) else c
    if not ZERO <= c <= ONE:
        raise ValueError(f"cut point must lie in [0, 1], got {c}")
    return c


def runs_for_cut(d: TwoPartyDecomposition, c) -> RunLengths:
    """Run lengths at cut point ``c`` from the ceiling formula for the long runs."""
    c = _check_cut(c)
    p1, p2, a, b = d.p1, d.p2, d.a, d.b
    C = (p1 - p2) * c / p2
    fl = math.floor(C)
    k = [fl + 1] + [a] * (p2 - 1)
    frac = C - fl
    for j in range(1, b + 1):
        i = math.ceil((j - frac) * p2 / b) + 1
        if 2 <= i <= p2:
            k[i - 1] = a + 1
    return RunLengths(tuple(k), p1 - sum(k))


def runs_from_prefix_sums(d: TwoPartyDecomposition, c) -> RunLengths:
    """Run lengths from the floor expression for the prefix sums ``k1 + ... + ki``."""
    c = _check_cut(c)
    p1, p2 = d.p1, d.p2
    C = (p1 - p2) * c / p2
    prefix = [math.floor(Fraction(p1 * (i - 1), p2) + C) + 1 for i in range(1, p2 + 1)]
    k = [prefix[0]] + [prefix[i] - prefix[i - 1] for i in range(1, p2)]
    return RunLengths(tuple(k), p1 - prefix[-1])


def runs_for_cell(d: TwoPartyDecomposition, cell: CellIndex | int) -> RunLengths:
    if isinstance(cell, int):
        cell = CellIndex.of(cell, d.p2)
    if not 0 <= cell.l <= max(d.gap - 1, 0):
        raise ValueError(f"cell {cell.l} outside [0, {d.gap - 1}]")
    p2, a, b = d.p2, d.a, d.b
    k = [cell.nu + 1] + [a] * (p2 - 1)
    for j in range(1, b + 1):
        i = -((cell.lp - j * p2) // b) + 1  # ceil((j*p2 - l') / b) + 1
        if 2 <= i <= p2:
            k[i - 1] = a + 1
    return RunLengths(tuple(k), d.p1 - sum(k))


def dhondt_runs(d: TwoPartyDecomposition) -> RunLengths:
    """Run lengths at ``c = 1``: no trailing run of the larger party."""
    p2, a, b = d.p2, d.a, d.b
    k = [a] * p2
    for j in range(1, b + 1):
        i = -(-(j * p2) // b)
        if 2 <= i <= p2:
            k[i - 1] = a + 1
    runs = RunLengths(tuple(k), d.p1 - sum(k))
    assert runs.tail == 0, runs
    return runs


def _check_structure(d: TwoPartyDecomposition, r: RunLengths) -> None:
    if len(r.k) != d.p2 or r.total != d.p1:
        raise ValueError(
            f"run lengths {r.k} + tail {r.tail} do not describe {d.p1} seats for party 1 "
            f"and {d.p2} for party 2"
        )


def cut_interval(d: TwoPartyDecomposition, r: RunLengths) -> tuple[Fraction, Fraction]:
    """Bounds ``lo <= c < hi`` forced by each party-2 seat, before clipping to [0, 1]."""
    p1, p2 = d.p1, d.p2
    m = p1 - p2
    lo = hi = None
    K = 0
    for i, k in enumerate(r.k, start=1):
        K += k
        left = Fraction(p2 * (K - 1) - p1 * (i - 1), m)
        right = Fraction(p2 * K - p1 * (i - 1), m)
        lo = left if lo is None else max(lo, left)
        hi = right if hi is None else min(hi, right)
    return lo, hi


def _block_bounds_ok(d: TwoPartyDecomposition, k: Sequence[int]) -> bool:
    p1, p2 = d.p1, d.p2
    if not 1 <= k[0] <= p1 // p2:
        return False
    prefix = [0]
    for x in k:
        prefix.append(prefix[-1] + x)
    for i in range(1, p2):
        for ip in range(i + 1, p2 + 1):
            lower = (ip - i) * p1 // p2
            if not lower <= prefix[ip] - prefix[i] <= lower + 1:
                return False
    return True


def validate_runs(d: TwoPartyDecomposition, r: RunLengths) -> bool:
    """Whether the word is produced by some stationary cut point."""
    _check_structure(d, r)
    if d.p1 == d.p2:
        return r.k == (1,)
    if not _block_bounds_ok(d, r.k):
        return False
    lo, hi = cut_interval(d, r)
    return lo < hi and lo <= ONE and hi > ZERO


def backward_cell(d: TwoPartyDecomposition, r: RunLengths) -> CellIndex:
    """Cell index read directly off a realizable word with a non-empty tail.

    Uses ``nu = k1 - 1`` and ``l' = max(p2*j - (i_j - 1)*b)`` over the
    positions ``i_j`` of the long runs, floored at zero.
    """
    p2, a, b = d.p2, d.a, d.b
    long_runs = [i for i in range(2, p2 + 1) if r.k[i - 1] == a + 1]
    lp = max([p2 * j - (i - 1) * b for j, i in enumerate(long_runs, start=1)], default=0)
    return CellIndex.of((r.k[0] - 1) * p2 + max(lp, 0), p2)


def infer_cutpoint(d: TwoPartyDecomposition, r: RunLengths) -> CutpointRegion | None:
    if not validate_runs(d, r):
        return None
    if d.p1 == d.p2:
        return CutpointRegion.whole()
    if r.tail == 0:
        return CutpointRegion.point1()
    lo, hi = cut_interval(d, r)
    return CutpointRegion(max(lo, ZERO), min(hi, ONE))


def enumerate_two_party(v1: int, v2: int) -> list[tuple[CutpointRegion, RunLengths]]:
    """Every distinct two-party word, ordered by increasing cut point."""
    d = decompose(v1, v2)
    if d.p1 == d.p2:
        return [(CutpointRegion.whole(), RunLengths((1,), 0))]
    m = d.gap
    rows = [
        (CutpointRegion.interval(Fraction(l, m), Fraction(l + 1, m)), runs_for_cell(d, l))
        for l in range(m)
    ]
    rows.append((CutpointRegion.point1(), dhondt_runs(d)))
    return rows


def pair_word(v1: int, v2: int, c, big: int = 1, small: int = 2, repeat: int | None = None) -> tuple[int, ...]:
    """Periodic two-party word for votes ``v1 >= v2``, repeated ``repeat`` times (default: ``gcd``)."""
    d = decompose(v1, v2)
    if d.p1 == d.p2:
        base: tuple[int, ...] = (big, small)
    else:
        base = runs_for_cut(d, c).word(big, small)
    return base * (d.g if repeat is None else repeat)


def runs_of(word: Iterable[int], big: int = 1, small: int = 2) -> RunLengths:
    return RunLengths.from_word(tuple(word), big, small)
