"""Tests for the SU(2) representation search.

The gradient oracle is a central finite difference of the defect through
the retraction (perturb one ambient coordinate, renormalize the row);
that directional derivative equals the corresponding component of the
tangent gradient.
"""

import math
from math import gcd

import numpy as np
import pytest

from su2slopes import quatopt
from su2slopes.presentations import (
    lens_presentation,
    surgery_presentation,
)
from su2slopes.slopes import Slope
from su2slopes.su2search import (
    QuaternionAssignment,
    classify_image,
    commutator_margin,
    defect,
    defect_gradient,
    evaluate_word,
    is_irreducible,
    quaternion_multiply,
    search_irreducible,
    starting_assignment,
    _flatten,
)

I = np.array([0.0, 1.0, 0.0, 0.0])
J = np.array([0.0, 0.0, 1.0, 0.0])
ONE = np.array([1.0, 0.0, 0.0, 0.0])


def fd_tangent_gradient(pres, images, h=1e-6):
    letters, offsets = _flatten(pres)
    base = np.asarray(images, dtype=float)
    out = np.zeros_like(base)
    for g in range(base.shape[0]):
        for k in range(4):
            plus = base.copy()
            minus = base.copy()
            plus[g, k] += h
            minus[g, k] -= h
            plus[g] /= np.linalg.norm(plus[g])
            minus[g] /= np.linalg.norm(minus[g])
            fp = quatopt.defect(plus, letters, offsets)
            fm = quatopt.defect(minus, letters, offsets)
            out[g, k] = (fp - fm) / (2 * h)
    return out


def test_quaternion_multiply_and_words():
    k = quaternion_multiply(I, J)
    assert np.allclose(k, [0, 0, 0, 1])
    assert np.allclose(quaternion_multiply(J, I), [0, 0, 0, -1])
    a = QuaternionAssignment([I, J])
    assert np.allclose(evaluate_word((1, 2), a), [0, 0, 0, 1])
    assert np.allclose(evaluate_word((1, -1), a), ONE)


def test_quaternion_assignment_validation():
    qa = QuaternionAssignment([[2.0, 0, 0, 0], [0, 3.0, 0, 0]])
    assert np.allclose(np.linalg.norm(qa.images, axis=1), 1.0, atol=1e-12)
    with pytest.raises(ValueError):
        QuaternionAssignment([[0.0, 0.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        QuaternionAssignment([[1.0, 0.0]])


def test_defect_examples():
    lens5 = lens_presentation(5)
    c, s = math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5)
    fifth_root = QuaternionAssignment([[c, s, 0.0, 0.0]])
    assert defect(lens5, fifth_root) < 1e-12
    # j^5 = j, so the defect is ||j - 1||^2 = 2
    assert defect(lens5, QuaternionAssignment([J])) == pytest.approx(2.0, abs=1e-12)
    # the trivial representation satisfies every relator
    trefoil = surgery_presentation(2, 3, Slope(5, 1))
    trivial = QuaternionAssignment([ONE, ONE])
    assert defect(trefoil, trivial) == 0.0


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(2024)
    presentations = [
        lens_presentation(3),
        surgery_presentation(2, 3, Slope(5, 1)),
        surgery_presentation(2, 5, Slope(7, 2)),
    ]
    checked = 0
    for pres in presentations:
        for _ in range(34):
            images = rng.standard_normal((pres.generator_count, 4))
            images /= np.linalg.norm(images, axis=1, keepdims=True)
            grad = defect_gradient(pres, images)
            fd = fd_tangent_gradient(pres, images)
            denom = max(float(np.linalg.norm(grad)), 1e-3)
            assert np.linalg.norm(fd - grad) / denom < 1e-5
            checked += 1
    assert checked >= 100


def test_gradient_is_tangent():
    rng = np.random.default_rng(11)
    pres = surgery_presentation(2, 3, Slope(3, 1))
    for _ in range(20):
        images = rng.standard_normal((2, 4))
        images /= np.linalg.norm(images, axis=1, keepdims=True)
        grad = defect_gradient(pres, images)
        for q, row in zip(images, grad):
            assert abs(float(np.dot(q, row))) < 1e-10


def test_gradient_vanishes_at_zero_of_defect():
    lens5 = lens_presentation(5)
    c, s = math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5)
    images = np.array([[c, s, 0.0, 0.0]])
    assert np.linalg.norm(defect_gradient(lens5, images)) < 1e-8


def test_is_irreducible():
    assert is_irreducible(QuaternionAssignment([I, J]), 0.5)
    assert commutator_margin(QuaternionAssignment([I, J])) == pytest.approx(2.0)
    assert not is_irreducible(QuaternionAssignment([I, I]), 0.01)
    assert not is_irreducible(QuaternionAssignment([J]), 0.01)
    with pytest.raises(ValueError):
        is_irreducible(QuaternionAssignment([I, J]), 0.0)


def test_classify_image():
    theta = 2 * math.pi / 7
    rot = np.array([math.cos(theta), math.sin(theta), 0.0, 0.0])
    assert classify_image(QuaternionAssignment([I, I]), 1e-2) == "cyclic"
    assert classify_image(QuaternionAssignment([rot, J]), 1e-2) == "binary-dihedral"


def test_search_finds_poincare_irreducible():
    pres = surgery_presentation(2, 3, Slope(1, 1))
    res = search_irreducible(pres, restarts=200, seed=1)
    assert res.found
    assert res.defect < 1e-8
    assert res.irreducibility_margin > 1e-2
    assert res.image_type == "other"  # binary icosahedral image
    # each relator is satisfied to norm error at most sqrt(tol)
    for word in pres.relators:
        w = evaluate_word(word, res.assignment)
        assert np.linalg.norm(w - ONE) <= math.sqrt(1e-10)


def test_search_finds_nothing_for_abelian_groups():
    res = search_irreducible(lens_presentation(5), restarts=200, seed=1)
    assert not res.found
    assert res.assignment is None
    assert res.irreducibility_margin == 0.0

    res = search_irreducible(
        surgery_presentation(2, 3, Slope(5, 1)), restarts=1000, seed=1
    )
    assert not res.found
    assert res.defect < 1e-10  # abelian representations abound
    assert res.irreducibility_margin <= 1e-2


def test_search_is_deterministic():
    pres = surgery_presentation(2, 3, Slope(1, 1))
    a = search_irreducible(pres, restarts=50, seed=9)
    b = search_irreducible(pres, restarts=50, seed=9)
    assert a.defect == b.defect
    assert a.restarts_used == b.restarts_used
    assert a.irreducibility_margin == b.irreducibility_margin
    if a.found:
        assert np.array_equal(a.assignment.images, b.assignment.images)


def test_starting_assignments_are_reproducible_and_uniformish():
    a = starting_assignment(3, 42, 7).images
    b = starting_assignment(3, 42, 7).images
    assert np.array_equal(a, b)
    assert not np.array_equal(a, starting_assignment(3, 42, 8).images)
    assert not np.array_equal(a, starting_assignment(3, 43, 7).images)
    assert np.allclose(np.linalg.norm(a, axis=1), 1.0)


def test_trefoil_surgeries_with_base_multiplicity_at_least_two():
    # Seifert-fibered surgeries on the trefoil with |6q - p| >= 2 all carry
    # irreducible representations; the search must find every one
    for q in (1, 2, 3):
        for p in range(1, 13):
            if gcd(p, q) != 1 or abs(6 * q - p) < 2:
                continue
            pres = surgery_presentation(2, 3, Slope(p, q))
            res = search_irreducible(pres, restarts=200, seed=1)
            assert res.found and res.defect < 1e-8, (p, q, res)


def test_backend_parity():
    backends = quatopt.available_backends()
    if len(backends) < 2:
        pytest.skip("only one kernel backend available")
    compiled = backends["compiled"]
    python = backends["python"]
    pres = surgery_presentation(2, 3, Slope(5, 1))
    letters, offsets = _flatten(pres)
    for k in range(10):
        start = starting_assignment(2, 5, k).images
        d1 = compiled.defect(start, letters, offsets)
        d2 = python.defect(start, letters, offsets)
        assert d1 == pytest.approx(d2, rel=1e-12, abs=1e-15)
        g1 = compiled.defect_gradient(start, letters, offsets)
        g2 = python.defect_gradient(start, letters, offsets)
        assert np.allclose(g1, g2, atol=1e-12)
        x1, f1, i1 = compiled.descend(start, letters, offsets, 4000, 1e-12, 1e-13)
        x2, f2, i2 = python.descend(start, letters, offsets, 4000, 1e-12, 1e-13)
        assert f1 == pytest.approx(f2, rel=1e-6, abs=1e-12)


def test_search_input_validation():
    pres = lens_presentation(3)
    with pytest.raises(ValueError):
        search_irreducible(pres, restarts=0, seed=1)
    with pytest.raises(ValueError):
        search_irreducible(pres, restarts=1, seed=1, tol=0.0)
    with pytest.raises(TypeError):
        search_irreducible("not a presentation", restarts=1, seed=1)
