"""Exact arithmetic for integer Laurent polynomials.

Everything in this package that looks like a polynomial -- Alexander
polynomials, graded Euler characteristics, cyclotomic polynomials -- is
carried by :class:`LaurentPoly` (sparse, arbitrary-precision integer
coefficients, exponents of either sign) or by :class:`IntPoly` (dense,
nonnegative exponents).  All arithmetic here is exact; floating point
appears only in test oracles.

Beyond the ring operations, the module provides the d-th cyclotomic
polynomial, exact divisibility tests, and the absolute value of the product
of a polynomial over all nontrivial n-th roots of unity.  The latter is
computed without floating point as a resultant against
``(t^n - 1)/(t - 1)``, using the fraction-free subresultant remainder
sequence over the integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class PolynomialParseError(ValueError):
    """Raised for text that does not parse as a Laurent polynomial."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LaurentPoly:
    """An integer-coefficient Laurent polynomial in one variable ``t``.

    Instances are immutable, hashable, and kept in canonical form: no zero
    coefficient is ever stored, so two polynomials are equal exactly when
    their term mappings coincide.

    >>> p = LaurentPoly({2: 1, 0: -1, -2: 1})
    >>> print(p)
    t^2 - 1 + t^-2
    >>> p == LaurentPoly.parse("t^2 - 1 + t^-2")
    True
    >>> p(-1)
    1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        data = {}
        for exponent, coeff in items:
            if not isinstance(exponent, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            c = data.get(exponent, 0) + coeff
            if c:
                data[exponent] = c
            elif exponent in data:
                del data[exponent]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        """The single-term polynomial ``coeff * t^exponent``."""
        return cls({exponent: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self):
        return not self._terms

    def terms(self):
        """A copy of the exponent -> coefficient mapping."""
        return dict(self._terms)

    def coefficient(self, exponent):
        return self._terms.get(exponent, 0)

    @property
    def degree(self):
        """The largest exponent with nonzero coefficient; None for 0."""
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self):
        """The smallest exponent with nonzero coefficient; None for 0."""
        return min(self._terms) if self._terms else None

    def support(self):
        """Exponents with nonzero coefficient, in increasing order."""
        return sorted(self._terms)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        return LaurentPoly(data)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    del data[e]
        return LaurentPoly(data)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k):
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def involution(self):
        """The substitution ``t -> t^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def is_symmetric(self):
        """True iff the polynomial is invariant under ``t -> t^-1``."""
        return self._terms == self.involution()._terms

    # -- evaluation --------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a nonzero integer (or Fraction) ``x``.

        Returns an ``int`` whenever the value is integral (always the case
        for ``x = 1`` or ``x = -1``), otherwise a ``Fraction``.
        """
        if x == 0:
            raise ValueError("cannot evaluate at 0: negative exponents")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(x) ** e
        if total.denominator == 1:
            return int(total)
        return total

    __call__ = evaluate

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- text format ---------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        """Render with terms in descending exponent order, e.g.
        ``t^2 - t + 1 - t^-1 + t^-2``."""
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if mag == 1 else f"{mag}*{tpart}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text):
        """Parse the textual format produced by ``str``.

        Terms are ``c*t^e`` with integer ``c`` and ``e`` (either may be
        omitted: ``t``, ``-t^-3``, ``7``); whitespace is free.  Raises
        :class:`PolynomialParseError` with the offending position.
        """
        i, n = 0, len(text)

        def skip_ws():
            nonlocal i
            while i < n and text[i].isspace():
                i += 1

        def read_uint():
            nonlocal i
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == start:
                raise PolynomialParseError("expected an integer", start)
            return int(text[start:i])

        terms = []
        first = True
        while True:
            skip_ws()
            if i >= n:
                if first:
                    raise PolynomialParseError("empty polynomial", i)
                break
            sign = 1
            if text[i] in "+-":
                sign = -1 if text[i] == "-" else 1
                i += 1
                skip_ws()
            elif not first:
                raise PolynomialParseError("expected '+' or '-' between terms", i)
            coeff = None
            if i < n and text[i].isdigit():
                coeff = read_uint()
                skip_ws()
                if i < n and text[i] == "*":
                    i += 1
                    skip_ws()
                    if i >= n or text[i] != "t":
                        raise PolynomialParseError("expected 't' after '*'", i)
            if i < n and text[i] == "t":
                i += 1
                skip_ws()
                exponent = 1
                if i < n and text[i] == "^":
                    i += 1
                    skip_ws()
                    esign = 1
                    if i < n and text[i] in "+-":
                        esign = -1 if text[i] == "-" else 1
                        i += 1
                        skip_ws()
                    exponent = esign * read_uint()
                terms.append((exponent, sign * (1 if coeff is None else coeff)))
            elif coeff is not None:
                terms.append((0, sign * coeff))
            else:
                raise PolynomialParseError("expected a coefficient or 't'", i)
            first = False
        return cls(terms)


class IntPoly:
    """A dense integer polynomial; ``coeffs[k]`` is the coefficient of ``t^k``.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.  ``degree`` is -1 for the zero
    polynomial, which keeps the resultant bookkeeping uniform.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __sub__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def to_laurent(self):
        return LaurentPoly({e: c for e, c in enumerate(self.coeffs) if c})

    @classmethod
    def from_laurent(cls, p):
        """Normalize ``p`` to nonnegative exponents.

        Returns ``(poly, shift)`` with ``p = poly * t^shift`` and
        ``poly(0) != 0`` (for nonzero ``p``).
        """
        if p.is_zero:
            return cls(), 0
        shift = p.low_degree
        coeffs = [0] * (p.degree - shift + 1)
        for e, c in p.terms().items():
            coeffs[e - shift] = c
        return cls(coeffs), shift


def x_power_minus_one(n):
    """The polynomial ``t^n - 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPoly([-1] + [0] * (n - 1) + [1])


def try_exact_division(num, den):
    """Quotient of ``num`` by ``den`` in Z[t], or None if it does not divide.

    Plain long division: the candidate quotient coefficients are computed
    top-down and the division fails as soon as one of them is not an
    integer, or if a nonzero remainder survives.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return IntPoly()
    if num.degree < den.degree:
        return None
    rem = list(num.coeffs)
    dcs = den.coeffs
    lead = dcs[-1]
    qdeg = num.degree - den.degree
    quo = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        top = rem[k + den.degree]
        if top % lead:
            return None
        q = top // lead
        quo[k] = q
        if q:
            for j, c in enumerate(dcs):
                rem[k + j] -= q * c
    if any(rem[: den.degree]):
        return None
    return IntPoly(quo)


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(d):
    """The d-th cyclotomic polynomial, monic of degree phi(d).

    >>> list(cyclotomic(2).coeffs)
    [1, 1]
    >>> list(cyclotomic(9).coeffs)
    [1, 0, 0, 1, 0, 0, 1]
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    poly = x_power_minus_one(d)
    for e in _divisors(d):
        if e == d:
            continue
        quo = try_exact_division(poly, cyclotomic(e))
        assert quo is not None, "cyclotomic recursion must divide exactly"
        poly = quo
    return poly


def divides(divisor, dividend):
    """True iff ``dividend = divisor * c`` for some integer Laurent ``c``.

    ``divisor`` is an :class:`IntPoly`, ``dividend`` a :class:`LaurentPoly`.
    Powers of ``t`` are units, so they are stripped from both sides before
    the polynomial division.
    """
    if divisor.is_zero:
        raise ValueError("the zero polynomial divides only itself")
    if dividend.is_zero:
        return True
    low = 0
    while divisor.coeffs[low] == 0:
        low += 1
    core = IntPoly(divisor.coeffs[low:])
    num, _shift = IntPoly.from_laurent(dividend)
    return try_exact_division(num, core) is not None


def _pseudo_rem(a, b):
    """Pseudo-remainder: ``lc(b)^(deg a - deg b + 1) * a  mod  b``.

    Requires ``deg a >= deg b >= 0`` and ``b`` nonzero.
    """
    db = b.degree
    dcs = b.coeffs
    lead = dcs[-1]
    rem = list(a.coeffs)
    for k in range(a.degree - db, -1, -1):
        # rem <- lead*rem - rem[k+db] * t^k * b; positions above k+db stay 0
        top = rem[k + db]
        for j in range(k + db):
            rem[j] *= lead
        rem[k + db] = 0
        if top:
            for j in range(db):
                rem[k + j] -= top * dcs[j]
    return IntPoly(rem[:db])


def resultant(a, b):
    """Resultant of two integer polynomials, by the subresultant
    (fraction-free) polynomial remainder sequence.

    Exact over arbitrary-precision integers; no rational arithmetic.
    """
    if a.is_zero or b.is_zero:
        return 0
    sign = 1
    if a.degree < b.degree:
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        a, b = b, a
    if b.degree == 0:
        return sign * b.leading_coefficient ** a.degree
    g = h = 1
    while b.degree > 0:
        delta = a.degree - b.degree
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        rem = _pseudo_rem(a, b)
        if rem.is_zero:
            return 0
        scale = g * h**delta
        assert all(c % scale == 0 for c in rem.coeffs), "subresultant division must be exact"
        a, b = b, IntPoly([c // scale for c in rem.coeffs])
        g = a.leading_coefficient
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    # b is now a nonzero constant
    c = b.leading_coefficient
    if a.degree == 1:
        return sign * c
    return sign * (c**a.degree // h ** (a.degree - 1))


def root_of_unity_product(p, n):
    """``|prod_{k=1}^{n-1} p(zeta_n^k)|`` for a nonzero Laurent polynomial.

    Computed exactly as the resultant of ``(t^n - 1)/(t - 1)`` with the
    normalization of ``p`` to nonnegative exponents; the unit ``t^k``
    stripped by the normalization contributes a factor ``+-1`` which the
    absolute value discards.  The result is 0 exactly when some nontrivial
    n-th root of unity is a zero of ``p``.

    >>> root_of_unity_product(LaurentPoly.parse("t - 1 + t^-1"), 2)
    3
    >>> root_of_unity_product(LaurentPoly.parse("t - 1 + t^-1"), 6)
    0
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if p.is_zero:
        raise ValueError("p must be nonzero")
    num, _shift = IntPoly.from_laurent(p)
    if num.degree == 0:
        return abs(num.coeffs[0]) ** (n - 1)
    psi = IntPoly([1] * n)
    return abs(resultant(psi, num))
