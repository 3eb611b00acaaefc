"""Branched cyclic cover arithmetic and cyclic SU(2) representation counts.

The order of the first homology of the n-fold cyclic branched cover of a
knot in an integral homology sphere is the absolute value of the product
of its Alexander polynomial over the nontrivial n-th roots of unity; a
vanishing product encodes positive first Betti number, which is exactly
the degenerate case the nondegeneracy criterion below rules out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, is_prime
from .laurent import cyclotomic, divides, root_of_unity_product


def _validate_alexander(delta):
    if delta.is_zero or not delta.is_symmetric():
        raise ValueError("expected a symmetric Alexander polynomial")
    if delta.evaluate(1) != 1:
        raise ValueError("an Alexander polynomial evaluates to 1 at t = 1")


def fox_branched_order(delta, n):
    """|H_1| of the n-fold cyclic branched cover of a knot with Alexander
    polynomial ``delta``; returns 0 when the group is infinite (b_1 > 0).

    >>> from su2slopes.laurent import LaurentPoly
    >>> fox_branched_order(LaurentPoly.parse("t - 1 + t^-1"), 2)
    3
    >>> fox_branched_order(LaurentPoly.parse("t - 1 + t^-1"), 6)
    0
    """
    if n < 2:
        raise ValueError("the cover degree n must be at least 2")
    _validate_alexander(delta)
    return root_of_unity_product(delta, n)


def nondegeneracy_check(delta, p, e):
    """Whether no nontrivial (2 p^e)-th root of unity is a zero of ``delta``.

    Decided twice, independently: once by sweeping cyclotomic divisibility
    over the divisors of 2 p^e, once by the nonvanishing of the branched
    cover order.  The two must agree; disagreement is a program error.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if e < 1:
        raise ValueError("e must be at least 1")
    _validate_alexander(delta)
    n = 2 * p**e
    by_cyclotomic = not any(
        divides(cyclotomic(d), delta) for d in divisors(n) if d >= 2
    )
    by_fox = fox_branched_order(delta, n) != 0
    assert by_cyclotomic == by_fox, "cyclotomic and resultant routes disagree"
    return by_cyclotomic


@dataclass(frozen=True)
class CyclicRepSet:
    """The cyclic SU(2) representations of a primitive knot complement that
    send the knot meridian to the quaternion i.

    There are exactly ``order`` of them when ``order = |H_1|`` is odd; each
    is pinned down by the angle it assigns to the generating meridian of
    the complement.  Angles are exact rational multiples of pi in [0, 2).
    """

    order: int
    angles: tuple

    def __post_init__(self):
        h = self.order
        if h < 1 or h % 2 == 0:
            raise ValueError("|H_1| must be odd and positive")
        if len(self.angles) != h:
            raise ValueError("expected exactly |H_1| angles")
        seen = set()
        for a in self.angles:
            if not isinstance(a, Fraction) or not 0 <= a < 2:
                raise ValueError("angles must be Fractions of pi in [0, 2)")
            # h * (a*pi) must be pi/2 up to whole turns
            if (h * a - Fraction(1, 2)) % 2 != 0:
                raise ValueError("angle does not power up to i")
            seen.add(a)
        if len(seen) != h:
            raise ValueError("angles must be pairwise distinct")

    def radians(self):
        """Floating-point angles, for display only."""
        return [float(a) * math.pi for a in self.angles]


def cyclic_reps(h):
    """The ``h`` cyclic representations with meridian image i, as exact
    angle fractions (pi/2 + 2 pi m)/h, m = 0, ..., h-1.

    >>> cyclic_reps(3).angles
    (Fraction(1, 6), Fraction(5, 6), Fraction(3, 2))
    """
    if h < 1 or h % 2 == 0:
        raise ValueError("|H_1| must be odd and positive")
    return CyclicRepSet(h, tuple(Fraction(4 * m + 1, 2 * h) for m in range(h)))
