"""Small number-theory helpers (trial division is plenty at these sizes)."""

from __future__ import annotations


def factorize(n):
    """Prime factorization as a dict {prime: exponent}, for n >= 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    return n >= 2 and list(factorize(n)) == [n]


def prime_power(n):
    """(prime, exponent) with n = prime**exponent, or None; defined for n >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    factors = factorize(n)
    if len(factors) == 1:
        ((p, e),) = factors.items()
        return p, e
    return None


def divisors(n):
    """All positive divisors of n >= 1, increasing."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
