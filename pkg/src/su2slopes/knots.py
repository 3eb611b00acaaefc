"""Torus-knot Alexander polynomials and knot-level integer invariants.

This module also enumerates the symmetrized Alexander polynomials that are
compatible with the dimension pattern of the instanton knot homology of an
L-space knot: single generators in a nested symmetric set of Alexander
gradings, sitting in alternating mod-2 gradings.  The induced polynomial
has coefficients +-1, alternating in sign from +1 at the top degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .laurent import LaurentPoly, try_exact_division, x_power_minus_one
from .slopes import Slope


@dataclass(frozen=True)
class TorusKnotParams:
    """Parameters (a, b) of the torus knot T(a, b), coprime, a >= 2, b >= 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 1:
            raise ValueError("torus knot parameters need a >= 2 and b >= 1")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"({self.a}, {self.b}) are not coprime")


@lru_cache(maxsize=None)
def torus_alexander(a, b):
    """Symmetrized Alexander polynomial of the (a, b) torus knot.

    Computed as t^(-(a-1)(b-1)/2) (t^{ab}-1)(t-1) / ((t^a-1)(t^b-1)); the
    division is exact by construction, and the result is symmetric with
    value 1 at t = 1 and top degree (a-1)(b-1)/2.

    >>> print(torus_alexander(2, 5))
    t^2 - t + 1 - t^-1 + t^-2
    >>> torus_alexander(5, 1)
    LaurentPoly({0: 1})
    """
    if a < 1 or b < 1:
        raise ValueError("torus knot parameters must be positive")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    numerator = x_power_minus_one(a * b) * x_power_minus_one(1)
    denominator = x_power_minus_one(a) * x_power_minus_one(b)
    quotient = try_exact_division(numerator, denominator)
    assert quotient is not None, "torus-knot division is always exact"
    genus = (a - 1) * (b - 1) // 2
    return quotient.to_laurent().shifted(-genus)


def determinant(p):
    """|p(-1)| for a symmetrized Alexander polynomial (symmetric, p(1)=1)."""
    if not p.is_symmetric():
        raise ValueError("determinant requires a symmetric polynomial")
    if p.evaluate(1) != 1:
        raise ValueError("determinant requires p(1) = 1")
    return abs(p.evaluate(-1))


def binary_dihedral_count(det):
    """(det - 1) / 2: the number of conjugacy classes of non-abelian binary
    dihedral SU(2) representations of a knot group with this determinant."""
    if det < 1 or det % 2 == 0:
        raise ValueError("knot determinants are odd and positive")
    return (det - 1) // 2


@dataclass(frozen=True)
class LSpaceAlexanderPattern:
    """Support and signs of an L-space knot Alexander polynomial.

    ``exponents`` lists the full symmetric support n_k > ... > n_0 = 0 >
    ... > n_{-k} in decreasing order; ``coefficients`` the matching signs,
    which alternate starting from +1 at the top.  The top two positive
    exponents are forced to be g and g-1 (for genus 1 the pattern
    degenerates to exponents (1, 0, -1)).
    """

    genus: int
    exponents: tuple
    coefficients: tuple

    def __post_init__(self):
        g, exps, coeffs = self.genus, self.exponents, self.coefficients
        if g < 1:
            raise ValueError("genus must be at least 1")
        if len(exps) != len(coeffs) or len(exps) % 2 == 0:
            raise ValueError("need an odd number of matched exponents/signs")
        k = len(exps) // 2
        if list(exps) != sorted(exps, reverse=True):
            raise ValueError("exponents must be strictly decreasing")
        if exps[k] != 0:
            raise ValueError("the middle exponent must be 0")
        if any(exps[i] + exps[-1 - i] != 0 for i in range(k)):
            raise ValueError("support must be symmetric about 0")
        if exps[0] != g or exps[1] != g - 1:
            raise ValueError("top exponents must be g and g-1")
        if any(coeffs[i] != (-1) ** i for i in range(2 * k + 1)):
            raise ValueError("coefficients must alternate from +1 at the top")

    def polynomial(self):
        return LaurentPoly(zip(self.exponents, self.coefficients))


def _lspace_patterns(g):
    if g == 1:
        yield LSpaceAlexanderPattern(1, (1, 0, -1), (1, -1, 1))
        return
    middle = list(range(g - 2, 0, -1))
    for mask in range(1 << len(middle)):
        chosen = [middle[i] for i in range(len(middle)) if mask >> i & 1]
        positives = [g, g - 1] + chosen
        exps = positives + [0] + [-e for e in reversed(positives)]
        k = len(positives)
        coeffs = [(-1) ** i for i in range(2 * k + 1)]
        yield LSpaceAlexanderPattern(g, tuple(exps), tuple(coeffs))


def enumerate_lspace_alexander(g):
    """All genus-g Alexander polynomials realizable by the L-space pattern.

    There are 2^(g-2) of them for g >= 2 (one per subset of {1, ..., g-2}
    in the support) and exactly one for g = 1, namely t - 1 + t^-1.  Every
    member evaluates to 1 at t = 1.

    >>> sorted(str(p) for p in enumerate_lspace_alexander(2))
    ['t^2 - t + 1 - t^-1 + t^-2']
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    return {pattern.polynomial() for pattern in _lspace_patterns(g)}


def framed_instanton_dim(slope, r):
    """Complex dimension of the framed instanton homology of p/q surgery on
    a knot with instanton surgery invariant r: p when p/q >= r, else 2rq - p.
    """
    if not isinstance(slope, Slope):
        raise TypeError("slope must be a Slope")
    if r < 1:
        raise ValueError("r must be a positive integer")
    if slope.p >= r * slope.q:
        return slope.p
    return 2 * r * slope.q - slope.p
