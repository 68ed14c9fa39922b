"""Sequence utilities: minimal period, lexicographic order, Adams prefix, run-length text."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .engine import VoteProfile, generate
from .rational import Ordering

__all__ = [
    "LexOrdering",
    "minimal_period",
    "lex_compare",
    "adams_from_dhondt",
    "rle_encode",
    "rle_decode",
    "format_word",
    "parse_word",
]

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def minimal_period(word: Sequence) -> int:
    """Smallest period of ``word`` that divides its length."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no period")
    word = tuple(word)
    for q in range(1, n + 1):
        if n % q == 0 and word[q:] == word[:-q]:
            return q
    return n  # unreachable: q == n always matches


@dataclass(frozen=True)
class LexOrdering:
    """Result of comparing ``s`` with ``t``; ``position`` is the 1-based first difference."""

    order: Ordering
    position: int | None = None


def lex_compare(s: Sequence[int], t: Sequence[int]) -> LexOrdering:
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} vs {len(t)}")
    for pos, (x, y) in enumerate(zip(s, t), start=1):
        if x != y:
            return LexOrdering(Ordering.I_GREATER if x > y else Ordering.J_GREATER, pos)
    return LexOrdering(Ordering.EQUAL)


def adams_from_dhondt(profile: VoteProfile, h: int) -> tuple[int, ...]:
    """Adams (c = 0) prefix: one seat each in rank order, then the d'Hondt sequence."""
    if h < 0:
        raise ValueError(f"house size must be non-negative, got {h}")
    n = profile.n
    head = tuple(range(1, n + 1))
    if h <= n:
        return head[:h]
    return head + generate(profile, 1, h - n)


def rle_encode(word: Sequence[int]) -> str:
    """``(1, 1, 2)`` -> ``"1^2 2"``."""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(str(word[i]) if run == 1 else f"{word[i]}^{run}")
        i = j
    return " ".join(parts)


def rle_decode(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"malformed run token {tok!r}")
        sym = int(m.group(1))
        run = int(m.group(2)) if m.group(2) is not None else 1
        if run < 1:
            raise ValueError(f"run length must be positive in {tok!r}")
        out.extend([sym] * run)
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    """Flat comma form."""
    return ",".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    """Accept either the flat comma form or the caret run-length form."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        try:
            return tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
    return rle_decode(text)
