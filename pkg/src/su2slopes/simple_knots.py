"""Invariants of the primitive simple knots attached to surgery slopes.

A slope p/q in [3, 6] with p odd and coprime to 5 determines the lens
space L(p, 2q) and, inside it, the unique simple knot homologous to five
times a core of the Heegaard solid torus on the surgery side.  That knot
is isotopic to a (5, 2)-curve on the Heegaard torus, so its group is a
torus-knot group ``<x, y | x^5 = y^d>`` and its Alexander polynomial is
the one of T(5, d), where d = |2p - 5 b'| for the mirror-normalized
b' = min(2q mod p, p - (2q mod p)).

From that one integer d everything else follows: the genus 2(d - 1), the
order p*|Delta(-1)| of the branched double cover (p for d odd, 5p for d
even), and the graded Euler characteristic, which is the Alexander
polynomial spread over a width-p window of monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .knots import torus_alexander
from .laurent import IntPoly, LaurentPoly, try_exact_division
from .slopes import Slope


@dataclass(frozen=True)
class LensSpaceId:
    """The lens space L(a, b), a/b-surgery on an unknot; 1 <= b < a, coprime."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2:
            raise ValueError("lens space order must be at least 2")
        if not 1 <= self.b < self.a:
            raise ValueError("b must satisfy 1 <= b < a")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"({self.a}, {self.b}) are not coprime")

    def __str__(self):
        return f"L({self.a},{self.b})"


@dataclass(frozen=True)
class GradedEuler:
    """A signed generating function with coefficients in {-1, +1}.

    Stored sparsely as (exponent, coefficient) pairs in decreasing
    exponent order; zero coefficients are never stored.
    """

    entries: tuple

    def __post_init__(self):
        seen = set()
        for e, c in self.entries:
            if c not in (-1, 1):
                raise ValueError("coefficients must be -1 or +1")
            if e in seen:
                raise ValueError("duplicate exponent")
            seen.add(e)
        ordered = tuple(sorted(self.entries, key=lambda t: -t[0]))
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_polynomial(cls, p):
        return cls(tuple(p.terms().items()))

    def terms(self):
        return dict(self.entries)

    def coefficient(self, exponent):
        return dict(self.entries).get(exponent, 0)

    def to_laurent(self):
        return LaurentPoly(self.entries)

    def coefficient_sum(self):
        return sum(c for _, c in self.entries)


@dataclass(frozen=True)
class SimpleKnotInvariants:
    """The full invariant record for the simple knot of a slope."""

    lens: LensSpaceId
    d: int
    genus: int
    alexander: LaurentPoly
    cover_order: int
    euler: GradedEuler


def _validate_slope(slope):
    if not isinstance(slope, Slope):
        raise TypeError("expected a Slope")
    p, q = slope.p, slope.q
    if p % 2 == 0:
        raise ValueError("p must be odd")
    if p % 5 == 0:
        raise ValueError("p must be coprime to 5 (the simple knot is not primitive)")
    if not 3 * q <= p <= 6 * q:
        raise ValueError("slope must lie in [3, 6]")
    return p, q


def lens_space_for(slope):
    """The lens space L(p, 2q) carrying the simple knot of this slope."""
    p, q = _validate_slope(slope)
    return LensSpaceId(p, (2 * q) % p)


def simple_knot_d(a, b):
    """The intersection count d = |2a - 5b'| for the (5,2)-curve in L(a, b).

    b is reduced mod a and mirror-normalized to b' = min(b, a - b), under
    which all the invariants derived from d are unchanged.
    """
    if a < 3 or a % 2 == 0:
        raise ValueError("a must be an odd integer >= 3")
    if a % 5 == 0:
        raise ValueError("a must be coprime to 5 (the simple knot is not primitive)")
    b %= a
    if b == 0 or gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    b = min(b, a - b)
    return abs(2 * a - 5 * b)


def simple_knot_genus(slope):
    """Genus of the simple knot: | |4p - 10 min(2q, p-2q)| - 2 |."""
    p, q = _validate_slope(slope)
    m = min(2 * q, p - 2 * q)
    return abs(abs(4 * p - 10 * m) - 2)


def simple_knot_alexander(slope):
    """Alexander polynomial of the simple knot: that of T(5, d)."""
    p, q = _validate_slope(slope)
    d = simple_knot_d(p, 2 * q)
    poly = torus_alexander(5, d)
    assert poly.degree == simple_knot_genus(slope), "genus/degree consistency"
    return poly


def branched_cover_order(slope):
    """|H_1| of the double cover of L(p, 2q) branched along the simple knot:
    p * |Delta(-1)|, i.e. p when d is odd and 5p when d is even."""
    p, _q = _validate_slope(slope)
    return p * abs(simple_knot_alexander(slope).evaluate(-1))


def graded_euler(slope):
    """Graded Euler characteristic of the knot Floer homology of the simple
    knot: the Alexander polynomial times the width-p window
    t^((p-1)/2) + ... + t^(-(p-1)/2).  All coefficients are 0 or +-1."""
    p, _q = _validate_slope(slope)
    half = (p - 1) // 2
    window = LaurentPoly({e: 1 for e in range(-half, half + 1)})
    return GradedEuler.from_polynomial(simple_knot_alexander(slope) * window)


def simple_knot_invariants(slope):
    """Assemble all simple-knot invariants of a slope, cross-checked."""
    p, q = _validate_slope(slope)
    lens = lens_space_for(slope)
    d = simple_knot_d(p, 2 * q)
    alexander = simple_knot_alexander(slope)
    genus = simple_knot_genus(slope)
    cover = branched_cover_order(slope)
    euler = graded_euler(slope)
    assert cover == lens.a * abs(alexander.evaluate(-1))
    return SimpleKnotInvariants(lens, d, genus, alexander, cover, euler)


def check_property_star(euler, p):
    """Whether each residue class mod p carries exactly one nonzero
    coefficient, equal to +1."""
    if p < 1:
        raise ValueError("p must be positive")
    hits = {}
    for e, c in euler.entries:
        cls = e % p
        if cls in hits:
            return False
        hits[cls] = c
    return len(hits) == p and all(c == 1 for c in hits.values())


def homologous_difference_divisible(euler1, euler2, p):
    """Whether (t^p - 1)^2 exactly divides the difference of two graded
    Euler characteristics (the divisibility constraint satisfied by
    homologous primitive knots)."""
    if p < 1:
        raise ValueError("p must be positive")
    diff = euler1.to_laurent() - euler2.to_laurent()
    if diff.is_zero:
        return True
    num, _shift = IntPoly.from_laurent(diff)
    square = [0] * (2 * p + 1)  # (t^p - 1)^2 = t^(2p) - 2 t^p + 1
    square[0], square[p], square[2 * p] = 1, -2, 1
    return try_exact_division(num, IntPoly(square)) is not None
