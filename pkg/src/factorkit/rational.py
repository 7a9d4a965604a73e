"""Exact rational values with a distinguished +infinity.

Toughness-style invariants are ratios of small integers and the theorem
thresholds are strict inequalities between fractions, so everything here
stays in :class:`fractions.Fraction`; floats are never involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class _Infinity:
    """Singleton that compares greater than every finite rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("factorkit-infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INF = _Infinity()

Rat = Union[Fraction, _Infinity]


def format_rational(value: Rat) -> str:
    """Serialize as ``"num/den"`` (denominator always explicit) or ``"inf"``."""
    if value is INF:
        return "inf"
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Rat:
    """Inverse of :func:`format_rational`; also accepts bare integers."""
    s = text.strip()
    if s == "inf":
        return INF
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))
