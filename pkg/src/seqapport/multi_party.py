"""n-party sequences built from their pairwise two-party words.

Consistency of divisor methods means the subsequence of seats won by any two
parties is exactly their own two-party sequence. Lifting runs this backwards;
verification checks every pair and intersects the cut-point regions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .engine import PeriodicSequence, VoteProfile
from .two_party import (
    CutpointRegion,
    RunLengths,
    decompose,
    infer_cutpoint,
    pair_word,
)

__all__ = [
    "PairKey",
    "BreakpointSet",
    "LiftError",
    "pairwise_tables",
    "lift",
    "breakpoints",
    "count_sequences",
    "count_by_union",
    "inclusion_exclusion_terms",
    "enumerate_n_party",
    "verify_sequence",
]


class LiftError(RuntimeError):
    """Pairwise words that cannot be merged; never raised for valid input."""


class PairKey(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class BreakpointSet:
    """Per-pair cell counts and the sorted union of cell left endpoints."""

    moduli: dict[PairKey, int]
    endpoints: tuple[Fraction, ...]

    @property
    def distinct_moduli(self) -> list[int]:
        """Cell counts of the pairs with different votes."""
        return [m for m in self.moduli.values() if m > 0]


def pairwise_tables(profile: VoteProfile, c) -> dict[PairKey, tuple[int, ...]]:
    """The two-party word of every pair of canonical ranks, over one common period."""
    votes = profile.canonical
    g = profile.g
    tables = {}
    for i, j in combinations(range(1, profile.n + 1), 2):
        vi, vj = votes[i - 1], votes[j - 1]
        pair_g = math.gcd(vi, vj)
        tables[PairKey(i, j)] = pair_word(vi, vj, c, big=i, small=j, repeat=pair_g // g)
    return tables


def lift(profile: VoteProfile, c) -> PeriodicSequence:
    """Merge the pairwise words: repeatedly take the symbol leading ``n - 1`` of them."""
    n = profile.n
    if n == 1:
        return PeriodicSequence(profile, (1,) * profile.period)
    queues = {key: deque(word) for key, word in pairwise_tables(profile, c).items()}
    out = []
    for step in range(profile.period):
        leads = [0] * (n + 1)
        for q in queues.values():
            if q:
                leads[q[0]] += 1
        winners = [r for r in range(1, n + 1) if leads[r] == n - 1]
        if len(winners) != 1:
            raise LiftError(f"step {step + 1}: {len(winners)} ranks lead {n - 1} pairwise words")
        w = winners[0]
        for key, q in queues.items():
            if w in key:
                if not q or q[0] != w:
                    raise LiftError(f"step {step + 1}: word {key} does not start with {w}")
                q.popleft()
        out.append(w)
    leftover = {key: len(q) for key, q in queues.items() if q}
    if leftover:
        raise LiftError(f"pairwise words not drained: {leftover}")
    return PeriodicSequence(profile, tuple(out))


def breakpoints(profile: VoteProfile) -> BreakpointSet:
    votes = profile.canonical
    moduli = {}
    points = {Fraction(0)}
    for i, j in combinations(range(1, profile.n + 1), 2):
        vi, vj = votes[i - 1], votes[j - 1]
        m = (vi - vj) // math.gcd(vi, vj)
        moduli[PairKey(i, j)] = m
        points.update(Fraction(l, m) for l in range(m))
    return BreakpointSet(moduli, tuple(sorted(points)))


def _collapsed_moduli(profile: VoteProfile) -> list[int]:
    # Equal votes add no endpoints, so one representative per vote value suffices.
    distinct = sorted(set(profile.canonical), reverse=True)
    return [(x - y) // math.gcd(x, y) for x, y in combinations(distinct, 2)]


def count_by_union(profile: VoteProfile) -> int:
    union = {Fraction(l, m) for m in _collapsed_moduli(profile) for l in range(m)}
    return 1 + len(union)


def inclusion_exclusion_terms(profile: VoteProfile) -> list[int]:
    """Signed sums of ``gcd`` over all ``t``-element sets of pairs, for ``t = 1, 2, ...``.

    Their total is the size of the union of endpoint sets. Subsets are
    tallied by (size, gcd) rather than listed, so the work stays polynomial.
    """
    moduli = _collapsed_moduli(profile)
    tally: dict[tuple[int, int], int] = {}
    for m in moduli:
        new = dict(tally)
        new[(1, m)] = new.get((1, m), 0) + 1
        for (size, g), count in tally.items():
            key = (size + 1, math.gcd(g, m))
            new[key] = new.get(key, 0) + count
        tally = new
    terms = [0] * len(moduli)
    for (size, g), count in tally.items():
        terms[size - 1] += (-1) ** (size + 1) * g * count
    return terms


def count_sequences(profile: VoteProfile) -> int:
    """Number of distinct stationary sequences, computed two ways."""
    direct = count_by_union(profile)
    by_terms = 1 + sum(inclusion_exclusion_terms(profile))
    if direct != by_terms:
        raise ArithmeticError(f"union count {direct} != inclusion-exclusion {by_terms}")
    return direct


def _cells(profile: VoteProfile) -> list[CutpointRegion]:
    if len(set(profile.canonical)) == 1:
        return [CutpointRegion.whole()]
    ends = breakpoints(profile).endpoints + (Fraction(1),)
    cells = [CutpointRegion.interval(lo, hi) for lo, hi in zip(ends, ends[1:])]
    cells.append(CutpointRegion.point1())
    return cells


def enumerate_n_party(profile: VoteProfile) -> list[tuple[CutpointRegion, PeriodicSequence]]:
    rows = []
    for region in _cells(profile):
        seq = lift(profile, region.representative())
        rows.append((region, PeriodicSequence(profile, seq.period, region)))
    return rows


def verify_sequence(profile: VoteProfile, word: Sequence[int]) -> CutpointRegion | None:
    """The cut points producing ``word`` (one period, canonical ranks), or None."""
    word = tuple(word)
    n = profile.n
    if len(word) != profile.period:
        raise ValueError(f"word has length {len(word)}, period is {profile.period}")
    bad = {s for s in word if not (isinstance(s, int) and 1 <= s <= n)}
    if bad:
        raise ValueError(f"symbols {sorted(bad)} outside 1..{n}")
    region: CutpointRegion | None = CutpointRegion.whole()
    votes = profile.canonical
    for i, j in combinations(range(1, n + 1), 2):
        sub = tuple(s for s in word if s == i or s == j)
        pair_region = _pair_region(votes[i - 1], votes[j - 1], sub, i, j, profile.g)
        if pair_region is None:
            return None
        region = region.intersect(pair_region)
        if region is None:
            return None
    if lift(profile, region.representative()).period != word:
        return None
    return region


def _pair_region(vi: int, vj: int, sub, i: int, j: int, g: int) -> CutpointRegion | None:
    d = decompose(vi, vj)
    reps = d.g // g
    block = len(sub) // reps
    base = sub[:block]
    if block * reps != len(sub) or base * reps != sub:
        return None
    if d.p1 == d.p2:
        return CutpointRegion.whole() if base == (i, j) else None
    runs = RunLengths.from_word(base, i, j)
    if len(runs.k) != d.p2 or runs.total != d.p1:
        return None
    return infer_cutpoint(d, runs)
