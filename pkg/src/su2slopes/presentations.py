"""Finitely presented groups for surgered torus-knot complements and lens
spaces, with exact abelianization via Smith normal form.

Words are tuples of signed 1-based generator indices (``-k`` is the
inverse of generator ``k``).  The peripheral system of the torus-knot
group ``<x, y | x^a = y^b>`` is fixed once and for all: the meridian word
is ``x^-s y^r`` for the unique solution of ``r a - s b = 1`` with least
nonnegative ``r``, and the longitude word is ``x^a mu^(-ab)``.  That
convention is not taken on faith: every surgery presentation is gated by
the exact Smith-form postcondition that its abelianization is cyclic of
order p (and Z for the unfilled complement).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .slopes import Slope


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation: generator count plus relator words."""

    generator_count: int
    relators: tuple

    def __post_init__(self):
        n = self.generator_count
        if n < 1:
            raise ValueError("need at least one generator")
        for word in self.relators:
            if not word:
                raise ValueError("relators must be nonempty words")
            for letter in word:
                if not isinstance(letter, int) or letter == 0 or abs(letter) > n:
                    raise ValueError(f"letter {letter!r} out of range")

    def max_word_length(self):
        return max((len(w) for w in self.relators), default=0)


def invert_word(word):
    return tuple(-letter for letter in reversed(word))


def word_power(word, k):
    if k >= 0:
        return tuple(word) * k
    return invert_word(word) * (-k)


def lens_presentation(p):
    """``<x | x^p>``, the fundamental group of a lens space of order p."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return GroupPresentation(1, ((1,) * p,))


def _meridian_exponents(a, b):
    """Least nonnegative r with r*a = 1 mod b, and s = (r*a - 1)/b."""
    r = 0
    while (r * a - 1) % b != 0:
        r += 1
    return r, (r * a - 1) // b


def surgery_presentation(a, b, slope=None):
    """Two-generator presentation of p/q-surgery on the (a, b) torus knot.

    With ``slope=None`` the filling relator is omitted and the result
    presents the knot complement itself.  The abelianization is checked
    exactly: [p] for a filled slope p/q, [0] (infinite cyclic) unfilled.
    """
    if a < 1 or b < 1:
        raise ValueError("torus knot parameters must be positive")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    x, y = 1, 2
    torus_relator = (x,) * a + (-y,) * b
    if slope is None:
        pres = GroupPresentation(2, (torus_relator,))
        expected = [0]
    else:
        if not isinstance(slope, Slope):
            raise TypeError("slope must be a Slope or None")
        r, s = _meridian_exponents(a, b)
        meridian = word_power((-x,), s) + (y,) * r
        longitude = (x,) * a + word_power(meridian, -a * b)
        filling = word_power(meridian, slope.p) + word_power(longitude, slope.q)
        pres = GroupPresentation(2, (torus_relator, filling))
        expected = [slope.p]
    actual = abelianization_smith(pres)
    assert actual == expected, (
        f"peripheral convention broken: H_1 = {actual}, expected {expected}"
    )
    return pres


def smith_normal_form(rows, ncols):
    """Diagonal of the Smith normal form of an integer matrix.

    ``rows`` is a list of length-``ncols`` integer rows.  Returns the full
    diagonal (length ``min(len(rows), ncols)``), nonnegative, with each
    entry dividing the next.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    size = min(nrows, ncols)
    diag = []
    t = 0
    while t < size:
        # locate a nonzero entry of least magnitude in the submatrix
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(m[i][j])
                if v and (pivot is None or v < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        m[t], m[i0] = m[i0], m[t]
        for row in m:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear the pivot column, then the pivot row
            reduced = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        reduced = True
            if reduced:
                continue
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        reduced = True
            if reduced:
                continue
            # pivot must divide everything below-right; if not, fold the
            # offending row in and reduce again
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                m[t][j] += m[offender][j]
        diag.append(abs(m[t][t]))
        t += 1
    diag.extend([0] * (size - len(diag)))
    return diag


def exponent_matrix(pres):
    """Relator-by-generator matrix of exponent sums."""
    rows = []
    for word in pres.relators:
        row = [0] * pres.generator_count
        for letter in word:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def abelianization_smith(pres):
    """Invariant factors of the abelianization.

    Unit factors are dropped and free factors appear as zeros, so ``Z/5``
    is ``[5]``, ``Z`` is ``[0]``, and a free group of rank 2 is ``[0, 0]``;
    the trivial group is reported as ``[1]``.
    """
    diag = smith_normal_form(exponent_matrix(pres), pres.generator_count)
    nonzero = [d for d in diag if d]
    factors = [d for d in nonzero if d != 1]
    factors += [0] * (pres.generator_count - len(nonzero))
    return factors if factors else [1]


# -- text file format --------------------------------------------------------
#
#   gens <n>
#   rel x1 X1 x2 ...
#
# One "rel" line per relator; "xk" is generator k, "Xk" its inverse.


def format_presentation(pres):
    lines = [f"gens {pres.generator_count}"]
    for word in pres.relators:
        tokens = [
            (f"x{letter}" if letter > 0 else f"X{-letter}") for letter in word
        ]
        lines.append("rel " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_presentation(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("gens"):
        raise ValueError("first line must be 'gens <n>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("first line must be 'gens <n>'") from None
    relators = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "rel":
            raise ValueError(f"expected a 'rel' line, got {ln!r}")
        word = []
        for token in parts[1:]:
            if len(token) < 2 or token[0] not in "xX" or not token[1:].isdigit():
                raise ValueError(f"bad letter token {token!r}")
            index = int(token[1:])
            word.append(index if token[0] == "x" else -index)
        relators.append(tuple(word))
    return GroupPresentation(n, tuple(relators))
