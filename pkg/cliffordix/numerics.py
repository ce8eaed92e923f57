"""
Exact arithmetic helpers shared by every cliffordix module.

Contents:
  * Rational          -- alias of fractions.Fraction, the only non-integer number type
  * rat               -- checked constructor for Rational
  * floor_div         -- floor division with an explicit zero check
  * IntInterval       -- closed integer interval, used for gonality entries and gamma_1
  * format_rational   -- canonical "p/q" / "k" text form
  * parse_rational    -- inverse of format_rational
  * CliffordixError   -- root of the package exception tree
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]


class CliffordixError(Exception):
    """Base class for every error raised by cliffordix."""


class ConstructionError(CliffordixError):
    """Raised when a rational is built with a zero denominator."""


def rat(numerator: Number, denominator: Number = 1) -> Fraction:
    if denominator == 0:
        raise ConstructionError(f"zero denominator in {numerator}/{denominator}")
    return Fraction(numerator) / Fraction(denominator)


def floor_div(a: int, b: int) -> int:
    if b == 0:
        raise ConstructionError(f"floor_div({a}, 0)")
    return a // b


def format_rational(value: Number) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rat(int(num), int(den))
    return Fraction(int(text))


@dataclass(frozen=True)
class IntInterval:
    """Closed interval [lo, hi] of integers."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ConstructionError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int) -> "IntInterval":
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def values(self):
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"
