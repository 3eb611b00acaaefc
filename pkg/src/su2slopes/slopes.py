"""Rational surgery slopes p/q in lowest terms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class SlopeParseError(ValueError):
    """Raised for text that does not parse as a slope."""


@dataclass(frozen=True)
class Slope:
    """A surgery coefficient p/q with p >= 0, q >= 1, gcd(p, q) = 1.

    The zero slope is (0, 1).  Instances must already be in lowest terms;
    use :meth:`from_fraction` to reduce.
    """

    p: int
    q: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("p and q must be integers")
        if self.p < 0:
            raise ValueError("negative slopes are not supported")
        if self.q < 1:
            raise ValueError("q must be a positive integer")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")

    @classmethod
    def from_fraction(cls, p, q=1):
        """Reduce p/q (q may be negative only together with p)."""
        if q == 0:
            raise ValueError("q must be nonzero")
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        return cls(p // g, q // g)

    @classmethod
    def parse(cls, text):
        """Parse 'p/q' or a bare integer 'p' (meaning p/1)."""
        s = text.strip()
        num, _, den = s.partition("/")
        try:
            p = int(num)
            q = int(den) if den else 1
        except ValueError:
            raise SlopeParseError(f"cannot parse slope {text!r}") from None
        try:
            return cls.from_fraction(p, q)
        except ValueError as exc:
            raise SlopeParseError(f"invalid slope {text!r}: {exc}") from None

    def as_fraction(self):
        return Fraction(self.p, self.q)

    @property
    def value(self):
        return self.p / self.q

    def __str__(self):
        return f"{self.p}/{self.q}"

    # ordering by rational value
    def __lt__(self, other):
        return self.p * other.q < other.p * self.q

    def __le__(self, other):
        return self.p * other.q <= other.p * self.q
