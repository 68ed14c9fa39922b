"""Exact rationals and exact comparison of divisor-method claims.

Cut points are stored as :class:`fractions.Fraction`. A claim is the ratio
``p / f(a)`` where ``f`` is the signpost for the next seat of a party that
currently holds ``a`` seats. Claims are never evaluated as floats; every
comparison reduces to integer cross-multiplication.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction

__all__ = [
    "Ordering",
    "SignpostRule",
    "Stationary",
    "GeometricMean",
    "parse_rational",
    "format_rational",
    "compare_claims",
]

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


class Ordering(enum.IntEnum):
    J_GREATER = -1
    EQUAL = 0
    I_GREATER = 1

    def flipped(self) -> "Ordering":
        return Ordering(-int(self))


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"``, an integer, or an exact decimal such as ``"0.1"``.

    Decimal strings go through :class:`decimal.Decimal`, so ``"0.1"`` is
    exactly ``1/10``.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse {type(text).__name__} as a rational")
    m = _FRACTION_RE.match(text)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    try:
        d = Decimal(text.strip())
    except InvalidOperation:
        raise ValueError(f"not a rational number: {text!r}") from None
    if not d.is_finite():
        raise ValueError(f"not a finite rational: {text!r}")
    return Fraction(d)


def format_rational(x: Fraction | int) -> str:
    """Canonical ``num/den`` text in lowest terms (``Fraction`` keeps it reduced)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Stationary:
    """Signpost ``a + c`` for the next seat of a party holding ``a`` seats."""

    c: Fraction

    def __post_init__(self):
        c = parse_rational(self.c)
        if not 0 <= c <= 1:
            raise ValueError(f"cut point must lie in [0, 1], got {c}")
        object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class GeometricMean:
    """Hill-Huntington signpost ``sqrt(a (a + 1))``."""


SignpostRule = Stationary | GeometricMean


def _sign(x: int) -> Ordering:
    return Ordering((x > 0) - (x < 0))


def compare_claims(p_i: int, a_i: int, p_j: int, a_j: int, rule: SignpostRule) -> Ordering:
    """Order the claims of two parties for the next seat.

    A zero signpost (``c = 0`` or the geometric mean with no seats held) is an
    infinite claim. Two infinite claims are ordered by raw votes, and are
    otherwise equal; resolving that tie is left to the caller.
    """
    if isinstance(rule, Stationary):
        num, den = rule.c.numerator, rule.c.denominator
        d_i = a_i * den + num
        d_j = a_j * den + num
        if d_i == 0 or d_j == 0:
            return _infinite(p_i, d_i == 0, p_j, d_j == 0)
        return _sign(p_i * d_j - p_j * d_i)
    if isinstance(rule, GeometricMean):
        if a_i == 0 or a_j == 0:
            return _infinite(p_i, a_i == 0, p_j, a_j == 0)
        return _sign(p_i * p_i * a_j * (a_j + 1) - p_j * p_j * a_i * (a_i + 1))
    raise TypeError(f"unknown signpost rule {rule!r}")


def _infinite(p_i: int, inf_i: bool, p_j: int, inf_j: bool) -> Ordering:
    if inf_i and inf_j:
        return _sign(p_i - p_j)
    return Ordering.I_GREATER if inf_i else Ordering.J_GREATER
