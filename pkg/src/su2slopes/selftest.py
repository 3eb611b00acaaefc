"""The acceptance suite: one check per headline guarantee of the package.

Each check raises AssertionError on failure.  ``run_selftest`` prints one
pass/fail line per check; the same checks back ``tests/test_acceptance.py``
and the ``selftest`` CLI subcommand.  Everything here finishes in well
under a minute on an ordinary laptop with the compiled kernel.
"""

from __future__ import annotations

import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from . import quatopt
from .arith import prime_power
from .certify import CERTIFIED, FAILS_IN_GENERAL, OPEN, certify
from .covers import cyclic_reps, fox_branched_order, nondegeneracy_check
from .knots import (
    binary_dihedral_count,
    determinant,
    enumerate_lspace_alexander,
    framed_instanton_dim,
    torus_alexander,
)
from .laurent import LaurentPoly, cyclotomic
from .presentations import (
    abelianization_smith,
    lens_presentation,
    surgery_presentation,
)
from .simple_knots import (
    branched_cover_order,
    check_property_star,
    graded_euler,
    simple_knot_genus,
)
from .slopes import Slope
from .su2search import (
    _flatten,
    defect_gradient,
    evaluate_word,
    search_irreducible,
)


@dataclass(frozen=True)
class AcceptanceCheck:
    ident: str
    title: str
    run: object  # zero-argument callable


def _valid_slopes(max_p):
    for p in range(3, max_p + 1, 2):
        if p % 5 == 0:
            continue
        for q in range(max(1, p // 6), p // 3 + 1):
            if 3 * q <= p <= 6 * q and gcd(p, q) == 1:
                yield Slope(p, q)


def check_alexander_pattern():
    """Genus 2 and 3 L-space Alexander polynomials, their determinants,
    and the binary dihedral counts; exact equality."""
    genus2 = enumerate_lspace_alexander(2)
    assert genus2 == {LaurentPoly.parse("t^2 - t + 1 - t^-1 + t^-2")}
    genus3 = enumerate_lspace_alexander(3)
    assert genus3 == {
        LaurentPoly.parse("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"),
        LaurentPoly.parse("t^3 - t^2 + 1 - t^-2 + t^-3"),
    }
    assert {determinant(p) for p in genus2} == {5}
    assert {determinant(p) for p in genus3} == {7, 3}
    assert {binary_dihedral_count(determinant(p)) for p in genus2} == {2}
    assert {binary_dihedral_count(determinant(p)) for p in genus3} == {3, 1}


def check_genus_and_order_tables():
    """For every valid slope with p <= 500: the min-formula genus equals the
    four-branch piecewise value, and the branched cover order is p on
    [3,4) and 5p on (4,6)."""
    count = 0
    for slope in _valid_slopes(500):
        p, q = slope.p, slope.q
        v = Fraction(p, q)
        genus = simple_knot_genus(slope)
        if Fraction(3) <= v < Fraction(10, 3):
            assert genus == 20 * q - 6 * p - 2
        elif Fraction(10, 3) < v < 4:
            assert genus == 6 * p - 20 * q - 2
        elif 4 < v < 5:
            assert genus == 20 * q - 4 * p - 2
        elif 5 < v:
            assert genus == 4 * p - 20 * q - 2
        else:
            raise AssertionError("excluded boundary slope appeared")
        order = branched_cover_order(slope)
        if 3 * q <= p < 4 * q:
            assert order == p
        else:
            assert order == 5 * p
        count += 1
    assert count >= 1000


def check_inequality_equivalence():
    """(23p - 9 <= 80q <= 25p + 9) iff genus <= (p+1)/4, for every eligible
    slope in [3,4) with p <= 1000; exact."""
    count = 0
    for p in range(3, 1001, 2):
        if p % 5 == 0:
            continue
        for q in range(p // 4 + 1, p // 3 + 1):
            if gcd(p, q) != 1 or not 3 * q <= p < 4 * q:
                continue
            genus = simple_knot_genus(Slope(p, q))
            assert (23 * p - 9 <= 80 * q <= 25 * p + 9) == (4 * genus <= p + 1)
            count += 1
    assert count >= 1000


def check_certifier_regression():
    """Fixed verdicts; all integer and half-integer slopes below 5; all
    eligible slopes in [16/5, 80/23) with p <= 200 certified by the
    simple-knot genus rule."""
    assert certify(Slope(3, 1)).verdict == CERTIFIED
    assert certify(Slope(4, 1)).verdict == CERTIFIED
    assert certify(Slope(7, 2)).verdict == CERTIFIED
    assert certify(Slope(9, 2)).verdict == CERTIFIED
    assert certify(Slope(5, 1)).verdict == FAILS_IN_GENERAL
    assert certify(Slope(19, 5)).verdict == OPEN
    for twice in range(0, 10):
        assert certify(Slope.from_fraction(twice, 2)).verdict == CERTIFIED
    lo, hi = Fraction(16, 5), Fraction(80, 23)
    for p in range(3, 201, 2):
        if p % 5 == 0 or prime_power(p) is None:
            continue
        for q in range(1, p + 1):
            if gcd(p, q) != 1 or not lo <= Fraction(p, q) < hi:
                continue
            cert = certify(Slope(p, q))
            assert cert.verdict == CERTIFIED
            assert cert.chain[0].rule == "simple-knot-genus"


def check_property_star_everywhere():
    """Every valid slope with p <= 200 has a graded Euler characteristic
    with one +1 per residue class and coefficient sum p."""
    count = 0
    for slope in _valid_slopes(200):
        euler = graded_euler(slope)
        assert check_property_star(euler, slope.p)
        assert euler.coefficient_sum() == slope.p
        count += 1
    assert count >= 400


def check_fox_cyclotomic_agreement():
    """The divisibility sweep and the resultant nonvanishing agree on 1000
    seeded random symmetric polynomials; the double branched cover of
    T(2, b) has |H_1| = b."""
    rng = random.Random(20250809)
    for _ in range(1000):
        degree = rng.randint(0, 8)
        side = {e: rng.randint(-3, 3) for e in range(1, degree + 1)}
        terms = {0: 1 - 2 * sum(side.values())}
        for e, c in side.items():
            terms[e] = c
            terms[-e] = c
        poly = LaurentPoly(terms)
        p = rng.choice([3, 5, 7, 11, 13])
        e = rng.randint(1, 2)
        nondegeneracy_check(poly, p, e)  # asserts the two routes agree
    for b in range(1, 16, 2):
        assert fox_branched_order(torus_alexander(2, b), 2) == b


def check_representation_counts():
    """cyclic_reps(h) has exactly h angles with h*theta = pi/2 mod 2 pi,
    exactly, for all odd h <= 99."""
    for h in range(1, 100, 2):
        reps = cyclic_reps(h)
        assert len(reps.angles) == h
        assert len(set(reps.angles)) == h
        for angle in reps.angles:
            assert (h * angle - Fraction(1, 2)) % 2 == 0
    assert cyclic_reps(1).angles == (Fraction(1, 2),)
    assert cyclic_reps(3).angles == (Fraction(1, 6), Fraction(5, 6), Fraction(3, 2))


def check_numerical_oracle():
    """The representation search finds the Poincare-sphere irreducible and
    reports none for the two abelian fillings; the gradient matches central
    finite differences; the abelianization gate holds on the full grid."""
    poincare = surgery_presentation(2, 3, Slope(1, 1))
    res = search_irreducible(poincare, restarts=200, seed=1)
    assert res.found and res.defect < 1e-8
    for word in poincare.relators:
        w = evaluate_word(word, res.assignment)
        w[0] -= 1.0
        assert float(np.linalg.norm(w)) <= math.sqrt(1e-10)
    again = search_irreducible(poincare, restarts=200, seed=1)
    assert again.defect == res.defect and again.restarts_used == res.restarts_used

    assert not search_irreducible(lens_presentation(5), restarts=1000, seed=1).found
    lens_surgery = surgery_presentation(2, 3, Slope(5, 1))
    assert not search_irreducible(lens_surgery, restarts=1000, seed=1).found

    rng = np.random.default_rng(77)
    pres = surgery_presentation(2, 5, Slope(7, 2))
    letters, offsets = _flatten(pres)
    for _ in range(100):
        images = rng.standard_normal((2, 4))
        images /= np.linalg.norm(images, axis=1, keepdims=True)
        grad = defect_gradient(pres, images)
        fd = np.zeros_like(grad)
        h = 1e-6
        for g in range(2):
            for k in range(4):
                plus, minus = images.copy(), images.copy()
                plus[g, k] += h
                minus[g, k] -= h
                plus[g] /= np.linalg.norm(plus[g])
                minus[g] /= np.linalg.norm(minus[g])
                fd[g, k] = (
                    quatopt.defect(plus, letters, offsets)
                    - quatopt.defect(minus, letters, offsets)
                ) / (2 * h)
        denom = max(float(np.linalg.norm(grad)), 1e-3)
        assert float(np.linalg.norm(fd - grad)) / denom < 1e-5

    for a in range(2, 8):
        for b in range(a + 1, 8):
            if gcd(a, b) != 1:
                continue
            for p in range(0, 21):
                for q in range(1, 5):
                    if gcd(p, q) != 1:
                        continue
                    pres = surgery_presentation(a, b, Slope(p, q))
                    assert abelianization_smith(pres) == [p]


def check_framed_instanton_dimension():
    """The zero-surgery dimension is 6 and the two branches agree at
    slope 3."""
    assert framed_instanton_dim(Slope(0, 1), 3) == 6
    assert framed_instanton_dim(Slope(3, 1), 3) == 3
    assert framed_instanton_dim(Slope(1, 1), 3) == 5
    for q in (1, 2, 5):
        s = Slope.from_fraction(3 * q, q)
        assert framed_instanton_dim(s, 3) == s.p == 2 * 3 * s.q - s.p


def check_reference_values():
    """Spot values quoted throughout the other checks' sources: cyclotomic
    polynomials, torus-knot evaluations, cover orders, genus values."""
    assert list(cyclotomic(2).coeffs) == [1, 1]
    assert list(cyclotomic(9).coeffs) == [1, 0, 0, 1, 0, 0, 1]
    assert list(cyclotomic(1).coeffs) == [-1, 1]
    five = torus_alexander(2, 5)
    assert five == LaurentPoly.parse("t^2 - t + 1 - t^-1 + t^-2")
    assert five.is_symmetric()
    assert five.evaluate(-1) == 5 and five.evaluate(1) == 1
    assert abs(torus_alexander(5, 4).evaluate(-1)) == 5
    assert abs(torus_alexander(5, 3).evaluate(-1)) == 1
    assert simple_knot_genus(Slope(3, 1)) == 0
    assert branched_cover_order(Slope(3, 1)) == 3
    assert binary_dihedral_count(1) == 0
    assert fox_branched_order(LaurentPoly.one(), 6) == 1
    euler = graded_euler(Slope(3, 1))
    assert euler.to_laurent() == LaurentPoly.parse("t + 1 + t^-1")


CHECKS = (
    AcceptanceCheck("criterion-01", "L-space Alexander pattern, determinants, dihedral counts", check_alexander_pattern),
    AcceptanceCheck("criterion-02", "genus and cover-order tables, p <= 500", check_genus_and_order_tables),
    AcceptanceCheck("criterion-03", "genus bound iff 23p-9 <= 80q <= 25p+9, p <= 1000", check_inequality_equivalence),
    AcceptanceCheck("criterion-04", "certifier regression and coverage windows", check_certifier_regression),
    AcceptanceCheck("criterion-05", "one +1 per residue class, sum p, p <= 200", check_property_star_everywhere),
    AcceptanceCheck("criterion-06", "cyclotomic sweep vs resultant on 1000 random polynomials", check_fox_cyclotomic_agreement),
    AcceptanceCheck("criterion-07", "cyclic representation counts and exact angles", check_representation_counts),
    AcceptanceCheck("criterion-08", "representation search, gradient, abelianization gate", check_numerical_oracle),
    AcceptanceCheck("criterion-09", "framed instanton dimensions", check_framed_instanton_dimension),
    AcceptanceCheck("criterion-10", "reference spot values", check_reference_values),
)


def run_selftest(stream=None):
    """Run every acceptance check, print one line per check, and return
    True iff all of them pass."""
    stream = stream if stream is not None else sys.stdout
    all_ok = True
    for check in CHECKS:
        try:
            check.run()
            status = "PASS"
        except AssertionError as exc:
            status = "FAIL"
            all_ok = False
            detail = f" ({exc})" if str(exc) else ""
            print(f"{status}  {check.ident}  {check.title}{detail}", file=stream)
            continue
        print(f"{status}  {check.ident}  {check.title}", file=stream)
    return all_ok
