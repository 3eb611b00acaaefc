# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the SU(2) representation search.

Quaternion word products, relator defects, their tangent gradients on the
product of unit 3-spheres, and the projected-gradient descent loop.  The
pure-Python twin is su2slopes._quatopt_py; both expose the same three
functions with the same semantics, and the algorithmic constants here must
stay in sync with that module.
"""

from libc.math cimport sqrt
from libc.stdint cimport int64_t

import numpy as np

BACKEND_NAME = "compiled"

cdef double ALPHA_INIT = 1.0
cdef double ALPHA_GROW = 2.0
cdef double ALPHA_CAP = 1024.0
cdef double ALPHA_MIN = 1e-20
cdef double ARMIJO = 1e-4
cdef double STALL_REL = 1e-16
cdef int STALL_LIMIT = 16


cdef inline void qmul(const double* a, const double* b, double* out) noexcept nogil:
    cdef double w = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    cdef double x = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]
    cdef double y = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]
    cdef double z = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]
    out[0] = w
    out[1] = x
    out[2] = y
    out[3] = z


cdef inline void letter_value(const double* img, int64_t letter, double* out) noexcept nogil:
    cdef int64_t g
    if letter > 0:
        g = letter - 1
        out[0] = img[4 * g]
        out[1] = img[4 * g + 1]
        out[2] = img[4 * g + 2]
        out[3] = img[4 * g + 3]
    else:
        g = -letter - 1
        out[0] = img[4 * g]
        out[1] = -img[4 * g + 1]
        out[2] = -img[4 * g + 2]
        out[3] = -img[4 * g + 3]


cdef double _defect(const double* img, const int64_t* letters,
                    const int64_t* offsets, Py_ssize_t nrel) noexcept nogil:
    cdef double total = 0.0
    cdef double w[4]
    cdef double v[4]
    cdef double tmp[4]
    cdef Py_ssize_t r, t
    cdef int64_t start, stop
    for r in range(nrel):
        start = offsets[r]
        stop = offsets[r + 1]
        w[0] = 1.0
        w[1] = w[2] = w[3] = 0.0
        for t in range(start, stop):
            letter_value(img, letters[t], v)
            qmul(w, v, tmp)
            w[0] = tmp[0]
            w[1] = tmp[1]
            w[2] = tmp[2]
            w[3] = tmp[3]
        w[0] -= 1.0
        total += w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]
    return total


cdef void _ambient_gradient(const double* img, const int64_t* letters,
                            const int64_t* offsets, Py_ssize_t nrel,
                            Py_ssize_t ngen, double* grad,
                            double* pref, double* suf) noexcept nogil:
    # grad must hold 4*ngen doubles; pref/suf hold 4*(mmax+2) each
    cdef Py_ssize_t i, r, t, m
    cdef int64_t start, lett
    cdef int64_t g
    cdef double v[4]
    cdef double e[4]
    cdef double a[4]
    cdef double gterm[4]
    for i in range(4 * ngen):
        grad[i] = 0.0
    for r in range(nrel):
        start = offsets[r]
        m = offsets[r + 1] - start
        # prefix products: pref[0] = 1, pref[t] = pref[t-1] * v_t
        pref[0] = 1.0
        pref[1] = pref[2] = pref[3] = 0.0
        for t in range(m):
            letter_value(img, letters[start + t], v)
            qmul(pref + 4 * t, v, pref + 4 * (t + 1))
        # suffix products: suf[m] = 1, suf[t] = v_{t+1} * suf[t+1]
        suf[4 * m] = 1.0
        suf[4 * m + 1] = suf[4 * m + 2] = suf[4 * m + 3] = 0.0
        for t in range(m - 1, -1, -1):
            letter_value(img, letters[start + t], v)
            qmul(v, suf + 4 * (t + 1), suf + 4 * t)
        # error term e = W - 1
        e[0] = pref[4 * m] - 1.0
        e[1] = pref[4 * m + 1]
        e[2] = pref[4 * m + 2]
        e[3] = pref[4 * m + 3]
        # per-letter contribution 2 * conj(P_{t-1}) * e * conj(S_{t+1})
        for t in range(m):
            a[0] = pref[4 * t]
            a[1] = -pref[4 * t + 1]
            a[2] = -pref[4 * t + 2]
            a[3] = -pref[4 * t + 3]
            qmul(a, e, v)
            a[0] = suf[4 * (t + 1)]
            a[1] = -suf[4 * (t + 1) + 1]
            a[2] = -suf[4 * (t + 1) + 2]
            a[3] = -suf[4 * (t + 1) + 3]
            qmul(v, a, gterm)
            lett = letters[start + t]
            if lett > 0:
                g = lett - 1
                grad[4 * g] += 2.0 * gterm[0]
                grad[4 * g + 1] += 2.0 * gterm[1]
                grad[4 * g + 2] += 2.0 * gterm[2]
                grad[4 * g + 3] += 2.0 * gterm[3]
            else:
                g = -lett - 1
                grad[4 * g] += 2.0 * gterm[0]
                grad[4 * g + 1] -= 2.0 * gterm[1]
                grad[4 * g + 2] -= 2.0 * gterm[2]
                grad[4 * g + 3] -= 2.0 * gterm[3]


cdef void _project(const double* img, double* grad, Py_ssize_t ngen) noexcept nogil:
    cdef Py_ssize_t g
    cdef double d
    for g in range(ngen):
        d = (grad[4 * g] * img[4 * g] + grad[4 * g + 1] * img[4 * g + 1]
             + grad[4 * g + 2] * img[4 * g + 2] + grad[4 * g + 3] * img[4 * g + 3])
        grad[4 * g] -= d * img[4 * g]
        grad[4 * g + 1] -= d * img[4 * g + 1]
        grad[4 * g + 2] -= d * img[4 * g + 2]
        grad[4 * g + 3] -= d * img[4 * g + 3]


cdef int _normalize_rows(double* arr, Py_ssize_t ngen) noexcept nogil:
    cdef Py_ssize_t g
    cdef double n2
    for g in range(ngen):
        n2 = (arr[4 * g] * arr[4 * g] + arr[4 * g + 1] * arr[4 * g + 1]
              + arr[4 * g + 2] * arr[4 * g + 2] + arr[4 * g + 3] * arr[4 * g + 3])
        if n2 < 1e-28:
            return 0
        n2 = 1.0 / sqrt(n2)
        arr[4 * g] *= n2
        arr[4 * g + 1] *= n2
        arr[4 * g + 2] *= n2
        arr[4 * g + 3] *= n2
    return 1


def _prepare(images, letters, offsets):
    img = np.ascontiguousarray(images, dtype=np.float64)
    if img.ndim != 2 or img.shape[1] != 4:
        raise ValueError("images must have shape (n, 4)")
    lets = np.ascontiguousarray(letters, dtype=np.int64)
    offs = np.ascontiguousarray(offsets, dtype=np.int64)
    return img, lets, offs


def defect(images, letters, offsets):
    """Sum over relators of ||(word product) - 1||^2, quaternion norm."""
    img, lets, offs = _prepare(images, letters, offsets)
    cdef const double[:, ::1] imv = img
    cdef const int64_t[::1] lv = lets
    cdef const int64_t[::1] ov = offs
    cdef Py_ssize_t nrel = ov.shape[0] - 1
    if nrel == 0:
        return 0.0
    return _defect(&imv[0, 0], &lv[0], &ov[0], nrel)


def defect_gradient(images, letters, offsets):
    """Tangent gradient of the defect, shape (n, 4); each row is orthogonal
    to the corresponding unit-quaternion image."""
    img, lets, offs = _prepare(images, letters, offsets)
    cdef Py_ssize_t ngen = img.shape[0]
    cdef Py_ssize_t nrel = offs.shape[0] - 1
    grad = np.zeros((ngen, 4), dtype=np.float64)
    if nrel == 0 or ngen == 0:
        return grad
    mmax = 0
    for r in range(nrel):
        mmax = max(mmax, int(offs[r + 1] - offs[r]))
    pref = np.empty(4 * (mmax + 2), dtype=np.float64)
    suf = np.empty(4 * (mmax + 2), dtype=np.float64)
    cdef const double[:, ::1] imv = img
    cdef const int64_t[::1] lv = lets
    cdef const int64_t[::1] ov = offs
    cdef double[:, ::1] gv = grad
    cdef double[::1] pv = pref
    cdef double[::1] sv = suf
    cdef const int64_t* lptr = NULL
    if lv.shape[0] > 0:
        lptr = &lv[0]
    _ambient_gradient(&imv[0, 0], lptr, &ov[0],
                      nrel, ngen, &gv[0, 0], &pv[0], &sv[0])
    _project(&imv[0, 0], &gv[0, 0], ngen)
    return grad


def descend(images, letters, offsets, max_iters, grad_tol, stop_defect):
    """Projected gradient descent with Armijo backtracking line search.

    Starts from ``images`` (renormalized rows), renormalizes after every
    step, and stops when the defect falls below ``stop_defect``, the
    tangent gradient norm falls below ``grad_tol``, progress stalls, or
    ``max_iters`` is reached.  Returns ``(images, defect, iterations)``.
    Fully deterministic.
    """
    img, lets, offs = _prepare(images, letters, offsets)
    img = img.copy()
    cdef Py_ssize_t ngen = img.shape[0]
    cdef Py_ssize_t nrel = offs.shape[0] - 1
    cdef double[:, ::1] imv = img
    cdef const int64_t[::1] lv = lets
    cdef const int64_t[::1] ov = offs
    if ngen == 0 or nrel == 0:
        return img, 0.0, 0
    if not _normalize_rows(&imv[0, 0], ngen):
        raise ValueError("starting image too close to zero to normalize")
    mmax = 0
    for r in range(nrel):
        mmax = max(mmax, int(offs[r + 1] - offs[r]))
    grad = np.zeros((ngen, 4), dtype=np.float64)
    trial = np.zeros((ngen, 4), dtype=np.float64)
    pref = np.empty(4 * (mmax + 2), dtype=np.float64)
    suf = np.empty(4 * (mmax + 2), dtype=np.float64)
    cdef double[:, ::1] gv = grad
    cdef double[:, ::1] tv = trial
    cdef double[::1] pv = pref
    cdef double[::1] sv = suf

    cdef double* x = &imv[0, 0]
    cdef double* g = &gv[0, 0]
    cdef double* tr = &tv[0, 0]
    cdef const int64_t* cl = NULL
    if lv.shape[0] > 0:
        cl = &lv[0]
    cdef const int64_t* co = &ov[0]

    cdef double f = _defect(x, cl, co, nrel)
    cdef double alpha = ALPHA_INIT
    cdef double gn2, fnew
    cdef Py_ssize_t it = 0, i
    cdef int stall = 0
    cdef bint accepted
    cdef Py_ssize_t total = 4 * ngen
    cdef Py_ssize_t c_max_iters = max_iters
    cdef double c_grad_tol = grad_tol
    cdef double c_stop_defect = stop_defect

    with nogil:
        while it < c_max_iters:
            if f < c_stop_defect:
                break
            _ambient_gradient(x, cl, co, nrel, ngen, g, &pv[0], &sv[0])
            _project(x, g, ngen)
            gn2 = 0.0
            for i in range(total):
                gn2 += g[i] * g[i]
            if sqrt(gn2) < c_grad_tol:
                break
            accepted = False
            fnew = f
            while alpha >= ALPHA_MIN:
                for i in range(total):
                    tr[i] = x[i] - alpha * g[i]
                if _normalize_rows(tr, ngen):
                    fnew = _defect(tr, cl, co, nrel)
                    if fnew <= f - ARMIJO * alpha * gn2:
                        accepted = True
                        break
                alpha *= 0.5
            if not accepted:
                break
            for i in range(total):
                x[i] = tr[i]
            if f - fnew <= STALL_REL * f:
                stall += 1
                if stall >= STALL_LIMIT:
                    f = fnew
                    it += 1
                    break
            else:
                stall = 0
            f = fnew
            alpha *= ALPHA_GROW
            if alpha > ALPHA_CAP:
                alpha = ALPHA_CAP
            it += 1

    return img, f, int(it)
