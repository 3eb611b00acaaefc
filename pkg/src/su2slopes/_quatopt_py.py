"""Pure-Python twin of the compiled kernel in ``_quatopt.pyx``.

Same functions, same semantics, same algorithmic constants; used when the
compiled extension is unavailable.  Everything is plain tuples of floats
internally, with numpy only at the call boundary.
"""

from math import sqrt

import numpy as np

BACKEND_NAME = "python"

ALPHA_INIT = 1.0
ALPHA_GROW = 2.0
ALPHA_CAP = 1024.0
ALPHA_MIN = 1e-20
ARMIJO = 1e-4
STALL_REL = 1e-16
STALL_LIMIT = 16

_ONE = (1.0, 0.0, 0.0, 0.0)


def _qmul(a, b):
    return (
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    )


def _conj(a):
    return (a[0], -a[1], -a[2], -a[3])


def _letter_value(images, letter):
    if letter > 0:
        return images[letter - 1]
    return _conj(images[-letter - 1])


def _unpack(images, letters, offsets):
    img = [tuple(map(float, row)) for row in np.asarray(images, dtype=np.float64)]
    lets = [int(x) for x in np.asarray(letters, dtype=np.int64)]
    offs = [int(x) for x in np.asarray(offsets, dtype=np.int64)]
    relators = [lets[offs[r] : offs[r + 1]] for r in range(len(offs) - 1)]
    return img, relators


def _defect(img, relators):
    total = 0.0
    for word in relators:
        w = _ONE
        for letter in word:
            w = _qmul(w, _letter_value(img, letter))
        e0 = w[0] - 1.0
        total += e0 * e0 + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]
    return total


def _ambient_gradient(img, relators, ngen):
    grad = [[0.0, 0.0, 0.0, 0.0] for _ in range(ngen)]
    for word in relators:
        m = len(word)
        pref = [_ONE] * (m + 1)
        for t in range(m):
            pref[t + 1] = _qmul(pref[t], _letter_value(img, word[t]))
        suf = [_ONE] * (m + 1)
        for t in range(m - 1, -1, -1):
            suf[t] = _qmul(_letter_value(img, word[t]), suf[t + 1])
        w = pref[m]
        e = (w[0] - 1.0, w[1], w[2], w[3])
        for t in range(m):
            gterm = _qmul(_qmul(_conj(pref[t]), e), _conj(suf[t + 1]))
            letter = word[t]
            if letter > 0:
                row = grad[letter - 1]
                row[0] += 2.0 * gterm[0]
                row[1] += 2.0 * gterm[1]
                row[2] += 2.0 * gterm[2]
                row[3] += 2.0 * gterm[3]
            else:
                row = grad[-letter - 1]
                row[0] += 2.0 * gterm[0]
                row[1] -= 2.0 * gterm[1]
                row[2] -= 2.0 * gterm[2]
                row[3] -= 2.0 * gterm[3]
    return grad


def _project(img, grad):
    for q, row in zip(img, grad):
        d = row[0] * q[0] + row[1] * q[1] + row[2] * q[2] + row[3] * q[3]
        row[0] -= d * q[0]
        row[1] -= d * q[1]
        row[2] -= d * q[2]
        row[3] -= d * q[3]


def _normalize(rows):
    out = []
    for q in rows:
        n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]
        if n2 < 1e-28:
            return None
        s = 1.0 / sqrt(n2)
        out.append((q[0] * s, q[1] * s, q[2] * s, q[3] * s))
    return out


def defect(images, letters, offsets):
    """Sum over relators of ||(word product) - 1||^2, quaternion norm."""
    img, relators = _unpack(images, letters, offsets)
    return _defect(img, relators)


def defect_gradient(images, letters, offsets):
    """Tangent gradient of the defect, shape (n, 4); each row is orthogonal
    to the corresponding unit-quaternion image."""
    img, relators = _unpack(images, letters, offsets)
    grad = _ambient_gradient(img, relators, len(img))
    _project(img, grad)
    return np.array(grad, dtype=np.float64).reshape(len(img), 4)


def descend(images, letters, offsets, max_iters, grad_tol, stop_defect):
    """Projected gradient descent with Armijo backtracking line search.

    Same contract as the compiled version: starts from ``images``
    (renormalized), renormalizes after every step, and stops on a small
    defect, a small tangent gradient, stalled progress, or ``max_iters``.
    Returns ``(images, defect, iterations)``.  Fully deterministic.
    """
    img, relators = _unpack(images, letters, offsets)
    ngen = len(img)
    if ngen == 0 or not relators:
        return np.asarray(images, dtype=np.float64).copy(), 0.0, 0
    img = _normalize(img)
    if img is None:
        raise ValueError("starting image too close to zero to normalize")

    f = _defect(img, relators)
    alpha = ALPHA_INIT
    it = 0
    stall = 0
    while it < max_iters:
        if f < stop_defect:
            break
        grad = _ambient_gradient(img, relators, ngen)
        _project(img, grad)
        gn2 = sum(v * v for row in grad for v in row)
        if sqrt(gn2) < grad_tol:
            break
        accepted = False
        fnew = f
        while alpha >= ALPHA_MIN:
            trial = _normalize(
                [
                    (
                        q[0] - alpha * row[0],
                        q[1] - alpha * row[1],
                        q[2] - alpha * row[2],
                        q[3] - alpha * row[3],
                    )
                    for q, row in zip(img, grad)
                ]
            )
            if trial is not None:
                fnew = _defect(trial, relators)
                if fnew <= f - ARMIJO * alpha * gn2:
                    accepted = True
                    break
            alpha *= 0.5
        if not accepted:
            break
        img = trial
        if f - fnew <= STALL_REL * f:
            stall += 1
            if stall >= STALL_LIMIT:
                f = fnew
                it += 1
                break
        else:
            stall = 0
        f = fnew
        alpha = min(alpha * ALPHA_GROW, ALPHA_CAP)
        it += 1

    return np.array(img, dtype=np.float64).reshape(ngen, 4), f, it
