"""Tests for the simple-knot invariants of slopes in [3, 6].

The genus oracle is the four-branch piecewise closed form (by subinterval
of p/q); the graded Euler oracle is a direct dictionary convolution of the
Alexander polynomial with the width-p window.
"""

from fractions import Fraction
from math import gcd

import pytest

from su2slopes.laurent import LaurentPoly
from su2slopes.simple_knots import (
    GradedEuler,
    LensSpaceId,
    branched_cover_order,
    check_property_star,
    graded_euler,
    homologous_difference_divisible,
    lens_space_for,
    simple_knot_alexander,
    simple_knot_d,
    simple_knot_genus,
    simple_knot_invariants,
)
from su2slopes.slopes import Slope


def valid_slopes(max_p):
    """All reduced p/q in [3, 6] with p odd, coprime to 5, p <= max_p."""
    for p in range(3, max_p + 1, 2):
        if p % 5 == 0:
            continue
        for q in range(max(1, p // 6), p // 3 + 1):
            if 3 * q <= p <= 6 * q and gcd(p, q) == 1:
                yield Slope(p, q)


def piecewise_genus_oracle(p, q):
    v = Fraction(p, q)
    if Fraction(3) <= v < Fraction(10, 3):
        return 20 * q - 6 * p - 2
    if Fraction(10, 3) < v < 4:
        return 6 * p - 20 * q - 2
    if 4 < v < 5:
        return 20 * q - 4 * p - 2
    if 5 < v <= 6:
        return 4 * p - 20 * q - 2
    raise ValueError(f"{p}/{q} is on an excluded boundary")


def euler_oracle(slope):
    delta = simple_knot_alexander(slope).terms()
    half = (slope.p - 1) // 2
    out = {}
    for e, c in delta.items():
        for w in range(-half, half + 1):
            out[e + w] = out.get(e + w, 0) + c
    return {e: c for e, c in out.items() if c}


def test_simple_knot_d_examples():
    assert simple_knot_d(3, 2) == 1
    assert simple_knot_d(9, 4) == 2
    assert simple_knot_d(7, 4) == 1
    # reduction mod a and mirror normalization are built in
    assert simple_knot_d(7, 11) == simple_knot_d(7, 4) == simple_knot_d(7, 3)


def test_simple_knot_d_validation():
    with pytest.raises(ValueError):
        simple_knot_d(15, 2)  # gcd(a, 5) != 1
    with pytest.raises(ValueError):
        simple_knot_d(6, 1)  # even
    with pytest.raises(ValueError):
        simple_knot_d(9, 3)  # not coprime


def test_genus_examples():
    assert simple_knot_genus(Slope(3, 1)) == 0
    assert simple_knot_genus(Slope(9, 2)) == 2
    assert simple_knot_genus(Slope(13, 4)) == 0


def test_genus_matches_piecewise_form():
    count = 0
    for slope in valid_slopes(150):
        assert simple_knot_genus(slope) == piecewise_genus_oracle(slope.p, slope.q)
        count += 1
    assert count > 200


def test_slope_validation():
    for bad in (Slope(4, 1), Slope(5, 1), Slope(7, 1), Slope(15, 4), Slope(7, 3)):
        with pytest.raises(ValueError):
            simple_knot_genus(bad)


def test_alexander_examples():
    assert simple_knot_alexander(Slope(3, 1)) == LaurentPoly.one()
    assert simple_knot_alexander(Slope(9, 2)) == LaurentPoly.parse(
        "t^2 - t + 1 - t^-1 + t^-2"
    )
    assert simple_knot_alexander(Slope(7, 2)) == LaurentPoly.one()


def test_alexander_degree_is_genus():
    for slope in valid_slopes(120):
        assert simple_knot_alexander(slope).degree == simple_knot_genus(slope)


def test_cover_order_examples():
    assert branched_cover_order(Slope(3, 1)) == 3
    assert branched_cover_order(Slope(9, 2)) == 45
    assert branched_cover_order(Slope(13, 4)) == 13


def test_cover_order_pattern():
    for slope in valid_slopes(150):
        p, q = slope.p, slope.q
        d = simple_knot_d(p, 2 * q)
        order = branched_cover_order(slope)
        if 3 * q <= p < 4 * q:
            assert d % 2 == 1 and order == p
        elif 4 * q < p < 6 * q or p == 6 * q:
            assert d % 2 == 0 and order == 5 * p
        assert (order == p) == (d % 2 == 1)


def test_lens_space_for():
    assert lens_space_for(Slope(3, 1)) == LensSpaceId(3, 2)
    assert lens_space_for(Slope(9, 2)) == LensSpaceId(9, 4)
    assert str(LensSpaceId(3, 2)) == "L(3,2)"


def test_graded_euler_3_1():
    ge = graded_euler(Slope(3, 1))
    assert ge.to_laurent() == LaurentPoly.parse("t + 1 + t^-1")


def test_graded_euler_9_2():
    # Delta_{T(5,2)} * (t^4 + ... + t^-4) expands, by direct convolution,
    # to monomials with coefficient +1 at exponents {6,4,2,1,0,-1,-2,-4,-6}
    # (one per residue class mod 9); in particular the coefficient is +1 at
    # exponent 6 and 0 at exponent 5.
    ge = graded_euler(Slope(9, 2))
    expected = {e: 1 for e in (6, 4, 2, 1, 0, -1, -2, -4, -6)}
    assert ge.terms() == expected == euler_oracle(Slope(9, 2))
    assert ge.coefficient(6) == 1
    assert ge.coefficient(5) == 0


def test_graded_euler_matches_convolution_oracle():
    for slope in valid_slopes(80):
        assert graded_euler(slope).terms() == euler_oracle(slope)


def test_graded_euler_sum_and_support():
    for slope in valid_slopes(100):
        ge = graded_euler(slope)
        assert ge.coefficient_sum() == slope.p
        n = simple_knot_genus(slope) + (slope.p - 1) // 2
        assert all(-n <= e <= n for e, _ in ge.entries)


def test_property_star_for_valid_slopes():
    for slope in valid_slopes(100):
        assert check_property_star(graded_euler(slope), slope.p)


def test_property_star_counterexamples():
    assert not check_property_star(GradedEuler(((0, 1), (3, 1))), 3)
    assert not check_property_star(GradedEuler(((0, 1), (1, -1), (2, 1))), 3)
    assert not check_property_star(GradedEuler(((0, 1), (1, 1))), 3)  # class 2 empty
    assert check_property_star(GradedEuler(((0, 1), (1, 1), (5, 1))), 3)


def test_graded_euler_type_validation():
    with pytest.raises(ValueError):
        GradedEuler(((0, 2),))
    with pytest.raises(ValueError):
        GradedEuler(((0, 1), (0, 1)))


def test_homologous_difference_divisible():
    g1 = graded_euler(Slope(9, 2))
    assert homologous_difference_divisible(g1, g1, 9)
    # a shift by one exponent of a property-(*) polynomial is never
    # congruent mod (t^p - 1)^2
    shifted = GradedEuler.from_polynomial(g1.to_laurent().shifted(1))
    assert not homologous_difference_divisible(g1, shifted, 9)
    # the difference (t^p - 1)^2 itself is divisible
    p = 5
    a = GradedEuler(((2 * p, 1), (p, -1), (0, 1)))
    b = GradedEuler(((p, 1),))
    diff = a.to_laurent() - b.to_laurent()
    assert diff == LaurentPoly({2 * p: 1, p: -2, 0: 1})
    assert homologous_difference_divisible(a, b, p)


def test_same_p_distinct_slopes_fail_divisibility():
    by_p = {}
    for slope in valid_slopes(60):
        by_p.setdefault(slope.p, []).append(slope)
    checked = 0
    for p, slopes in by_p.items():
        for i in range(len(slopes)):
            for j in range(i + 1, len(slopes)):
                e1, e2 = graded_euler(slopes[i]), graded_euler(slopes[j])
                if e1 == e2:
                    continue
                assert not homologous_difference_divisible(e1, e2, p)
                checked += 1
    assert checked > 10


def test_simple_knot_invariants_bundle():
    inv = simple_knot_invariants(Slope(9, 2))
    assert inv.lens == LensSpaceId(9, 4)
    assert inv.d == 2
    assert inv.genus == 2
    assert inv.cover_order == 45
    assert inv.alexander.degree == inv.genus
    assert inv.cover_order == inv.lens.a * abs(inv.alexander.evaluate(-1))
