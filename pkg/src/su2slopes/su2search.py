"""Numerical search for irreducible SU(2) representations.

SU(2) is the group of unit quaternions.  A candidate representation of a
finitely presented group assigns a unit quaternion to each generator; its
defect is the summed squared distance of the relator words from 1, so the
zero set of the defect is exactly the representation variety.  The search
runs projected gradient descent on the product of unit 3-spheres from
deterministic pseudo-random starting points and reports the first local
minimum that is both a representation (defect below tolerance) and
irreducible (some pair of generator images fails to commute).

A failed search is evidence, not proof: exhausting the restarts without
finding an irreducible says nothing rigorous about nonexistence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quatopt
from .presentations import GroupPresentation

DEFAULT_TOL = 1e-10
DEFAULT_EPS = 1e-2
MAX_ITERS = 4000
GRAD_TOL = 1e-12


class QuaternionAssignment:
    """Unit-quaternion images of the generators, one row per generator.

    Rows are renormalized on construction and must be within 1e-12 of unit
    norm afterwards (i.e. not numerically degenerate on input).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        arr = np.array(images, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[1] != 4:
            raise ValueError("images must have shape (n, 4)")
        if not np.all(np.isfinite(arr)):
            raise ValueError("images must be finite")
        norms = np.sqrt((arr * arr).sum(axis=1))
        if np.any(norms < 1e-8):
            raise ValueError("images too close to zero to renormalize")
        arr /= norms[:, None]
        arr.setflags(write=False)
        self.images = arr

    def __len__(self):
        return self.images.shape[0]

    def __repr__(self):
        return f"QuaternionAssignment({self.images.tolist()!r})"


@dataclass(frozen=True)
class RepSearchResult:
    """Outcome of a random-restart search.

    When ``found`` is False the defect/margin describe the best (lowest
    defect) trial seen, as evidence.  ``image_type`` is a coarse heuristic
    classification of the image subgroup ("cyclic", "binary-dihedral", or
    "other"); it is never a proof of the image type.
    """

    found: bool
    assignment: QuaternionAssignment | None
    defect: float
    irreducibility_margin: float
    restarts_used: int
    seed: int
    image_type: str | None = None


def quaternion_multiply(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    )


def evaluate_word(word, assignment):
    """Product of the quaternions a relator word spells out."""
    images = assignment.images if isinstance(assignment, QuaternionAssignment) else np.asarray(assignment, float)
    out = np.array([1.0, 0.0, 0.0, 0.0])
    for letter in word:
        q = images[abs(letter) - 1]
        if letter < 0:
            q = q * np.array([1.0, -1.0, -1.0, -1.0])
        out = quaternion_multiply(out, q)
    return out


def _flatten(pres):
    letters = [letter for word in pres.relators for letter in word]
    offsets = [0]
    for word in pres.relators:
        offsets.append(offsets[-1] + len(word))
    return (
        np.asarray(letters, dtype=np.int64),
        np.asarray(offsets, dtype=np.int64),
    )


def _images_of(assignment):
    if isinstance(assignment, QuaternionAssignment):
        return assignment.images
    return np.asarray(assignment, dtype=np.float64)


def defect(pres, assignment):
    """Sum over relators of ||rho(word) - 1||^2; zero iff a representation."""
    images = _images_of(assignment)
    if images.shape[0] != pres.generator_count:
        raise ValueError("assignment length must match the generator count")
    letters, offsets = _flatten(pres)
    return quatopt.defect(images, letters, offsets)


def defect_gradient(pres, assignment):
    """Riemannian gradient of the defect: the ambient gradient projected to
    the tangent space of each unit-quaternion sphere."""
    images = _images_of(assignment)
    if images.shape[0] != pres.generator_count:
        raise ValueError("assignment length must match the generator count")
    letters, offsets = _flatten(pres)
    return quatopt.defect_gradient(images, letters, offsets)


def commutator_margin(assignment):
    """max over generator pairs of ||gh - hg||; 0 for fewer than 2 generators."""
    images = _images_of(assignment)
    n = images.shape[0]
    margin = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            gh = quaternion_multiply(images[i], images[j])
            hg = quaternion_multiply(images[j], images[i])
            margin = max(margin, float(np.linalg.norm(gh - hg)))
    return margin


def is_irreducible(assignment, eps):
    """True iff some pair of generator images fails to commute by more than
    ``eps`` (noncommuting images have no common axis, hence a non-abelian
    image)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return commutator_margin(assignment) > eps


def classify_image(assignment, eps):
    """Heuristic nearest-subgroup classification of the image closure.

    "cyclic" when all images commute within ``eps``; otherwise
    "binary-dihedral" when every image is near the subgroup
    {e^(i theta)} u {e^(i theta) j} for some common axis, else "other".
    Heuristic only -- reported for orientation, never as a certificate.
    """
    images = _images_of(assignment)
    if commutator_margin(assignment) <= eps:
        return "cyclic"
    vecs = images[:, 1:]
    lengths = np.linalg.norm(vecs, axis=1)
    axes = [v / n for v, n in zip(vecs, lengths) if n > 1e-8]
    candidates = list(axes)
    for i in range(len(axes)):
        for j in range(i + 1, len(axes)):
            cross = np.cross(axes[i], axes[j])
            norm = np.linalg.norm(cross)
            if norm > 1e-8:
                candidates.append(cross / norm)
    best = np.inf
    for axis in candidates:
        worst = 0.0
        for q, v, length in zip(images, vecs, lengths):
            if length < 1e-8:
                continue  # central +-1
            alignment = abs(float(np.dot(v, axis))) / length
            rotation_dev = 1.0 - alignment  # axis parallel to the candidate
            flip_dev = max(abs(float(q[0])), alignment)  # Re=0, axis orthogonal
            worst = max(worst, min(rotation_dev, flip_dev))
        best = min(best, worst)
    return "binary-dihedral" if best < 0.05 else "other"


def starting_assignment(generator_count, seed, restart_index):
    """Deterministic uniform starting point on the product of 3-spheres.

    Drawn from a counter-based Philox stream keyed by (seed, restart
    index), so each restart is reproducible independently of the others.
    """
    key = np.array([seed % 2**64, restart_index % 2**64], dtype=np.uint64)
    gen = np.random.Generator(np.random.Philox(key=key))
    raw = gen.standard_normal((generator_count, 4))
    return QuaternionAssignment(raw)


def search_irreducible(pres, restarts, seed, tol=DEFAULT_TOL, eps=DEFAULT_EPS):
    """Random-restart search for an irreducible representation.

    Runs projected gradient descent from ``restarts`` deterministic
    starting assignments and returns the first trial whose local minimum
    has defect below ``tol`` and noncommuting images (margin above
    ``eps``).  Deterministic for fixed arguments; restart trials are
    independent, and the reported trial is the qualifying one of lowest
    restart index.
    """
    if not isinstance(pres, GroupPresentation):
        raise TypeError("expected a GroupPresentation")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    if tol <= 0 or eps <= 0:
        raise ValueError("tolerances must be positive")
    letters, offsets = _flatten(pres)
    n = pres.generator_count
    best = None
    for index in range(restarts):
        start = starting_assignment(n, seed, index)
        images, f, _iters = quatopt.descend(
            start.images, letters, offsets, MAX_ITERS, GRAD_TOL, tol * 1e-3
        )
        assignment = QuaternionAssignment(images)
        margin = commutator_margin(assignment)
        if best is None or f < best[0]:
            best = (f, margin, assignment)
        if f < tol and margin > eps:
            return RepSearchResult(
                found=True,
                assignment=assignment,
                defect=f,
                irreducibility_margin=margin,
                restarts_used=index + 1,
                seed=seed,
                image_type=classify_image(assignment, eps),
            )
    f, margin, _assignment = best
    return RepSearchResult(
        found=False,
        assignment=None,
        defect=f,
        irreducibility_margin=margin,
        restarts_used=restarts,
        seed=seed,
        image_type=None,
    )
