"""Tests for branched-cover orders, the nondegeneracy criterion, and
cyclic representation sets."""

import doctest
import random
from fractions import Fraction

import pytest

import su2slopes.covers
from su2slopes.covers import CyclicRepSet, cyclic_reps, fox_branched_order, nondegeneracy_check
from su2slopes.knots import torus_alexander
from su2slopes.laurent import LaurentPoly, cyclotomic, divides


def random_symmetric_normalized(rng, max_degree=8, max_coeff=4):
    """A random symmetric Laurent polynomial with value 1 at t = 1."""
    deg = rng.randint(0, max_degree)
    side = {e: rng.randint(-max_coeff, max_coeff) for e in range(1, deg + 1)}
    center = 1 - 2 * sum(side.values())
    terms = {0: center}
    for e, c in side.items():
        terms[e] = c
        terms[-e] = c
    return LaurentPoly(terms)


def test_fox_branched_order_examples():
    trefoil = LaurentPoly.parse("t - 1 + t^-1")
    assert fox_branched_order(trefoil, 2) == 3
    assert fox_branched_order(trefoil, 6) == 0
    for n in (2, 3, 5, 8):
        assert fox_branched_order(LaurentPoly.one(), n) == 1


def test_fox_branched_order_two_bridge():
    # the double branched cover of T(2, b) is a lens space of order b
    for b in range(1, 16, 2):
        assert fox_branched_order(torus_alexander(2, b), 2) == b


def test_fox_branched_order_validation():
    with pytest.raises(ValueError):
        fox_branched_order(LaurentPoly.parse("t - 1"), 2)
    with pytest.raises(ValueError):
        fox_branched_order(LaurentPoly.parse("t + 1 + t^-1"), 2)  # value 3 at 1
    with pytest.raises(ValueError):
        fox_branched_order(LaurentPoly.one(), 1)


def test_nondegeneracy_examples():
    # determinant 1 forces nondegeneracy (the cyclotomic values at +-1
    # are 2 or p, which cannot divide 1)
    one_det = LaurentPoly.parse("t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4")
    assert abs(one_det.evaluate(-1)) == 1
    assert nondegeneracy_check(one_det, 3, 1)
    # the trefoil polynomial is killed by the 6th root of unity
    assert not nondegeneracy_check(LaurentPoly.parse("t - 1 + t^-1"), 3, 1)
    assert nondegeneracy_check(LaurentPoly.one(), 7, 2)


def test_nondegeneracy_determinant_one_property():
    for poly in (
        LaurentPoly.one(),
        torus_alexander(3, 5),
        torus_alexander(5, 7),
        torus_alexander(3, 7),
    ):
        assert abs(poly.evaluate(-1)) == 1
        for p in (3, 5, 7, 11, 13):
            for e in (1, 2, 3):
                assert nondegeneracy_check(poly, p, e)


def test_nondegeneracy_routes_agree_on_random_polys():
    rng = random.Random(424242)
    for _ in range(300):
        poly = random_symmetric_normalized(rng)
        p = rng.choice([3, 5, 7, 11, 13])
        e = rng.randint(1, 2)
        # the check itself asserts that both routes agree
        nondegeneracy_check(poly, p, e)


def test_nondegeneracy_matches_manual_divisibility():
    rng = random.Random(31337)
    for _ in range(60):
        poly = random_symmetric_normalized(rng, max_degree=5)
        p, e = 3, 1
        expected = not any(
            divides(cyclotomic(d), poly) for d in (2, 3, 6)
        )
        assert nondegeneracy_check(poly, p, e) == expected


def test_nondegeneracy_validation():
    with pytest.raises(ValueError):
        nondegeneracy_check(LaurentPoly.one(), 4, 1)
    with pytest.raises(ValueError):
        nondegeneracy_check(LaurentPoly.one(), 2, 1)
    with pytest.raises(ValueError):
        nondegeneracy_check(LaurentPoly.one(), 3, 0)


def test_cyclic_reps_examples():
    assert cyclic_reps(1).angles == (Fraction(1, 2),)
    assert cyclic_reps(3).angles == (Fraction(1, 6), Fraction(5, 6), Fraction(3, 2))


def test_cyclic_reps_counts_and_invariant():
    for h in range(1, 100, 2):
        reps = cyclic_reps(h)
        assert len(reps.angles) == h
        assert len(set(reps.angles)) == h
        for a in reps.angles:
            assert (h * a - Fraction(1, 2)) % 2 == 0
            assert 0 <= a < 2


def test_cyclic_reps_validation():
    with pytest.raises(ValueError):
        cyclic_reps(4)
    with pytest.raises(ValueError):
        cyclic_reps(0)
    with pytest.raises(ValueError):
        CyclicRepSet(3, (Fraction(1, 6), Fraction(5, 6), Fraction(1, 6)))
    with pytest.raises(ValueError):
        CyclicRepSet(3, (Fraction(1, 6), Fraction(5, 6), Fraction(1, 2)))


def test_doctests():
    failures, _ = doctest.testmod(su2slopes.covers)
    assert failures == 0
