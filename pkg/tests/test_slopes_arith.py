"""Tests for slope parsing/ordering and the small number-theory helpers."""

from fractions import Fraction

import pytest

from su2slopes.arith import divisors, factorize, is_prime, prime_power
from su2slopes.slopes import Slope, SlopeParseError


def test_slope_construction_and_reduction():
    assert Slope.from_fraction(10, 4) == Slope(5, 2)
    assert Slope.from_fraction(0, 7) == Slope(0, 1)
    assert str(Slope(7, 2)) == "7/2"
    with pytest.raises(ValueError):
        Slope(4, 2)
    with pytest.raises(ValueError):
        Slope(3, 0)
    with pytest.raises(ValueError):
        Slope(-1, 2)


def test_slope_parse():
    assert Slope.parse("9/2") == Slope(9, 2)
    assert Slope.parse(" 7 ") == Slope(7, 1)
    assert Slope.parse("10/4") == Slope(5, 2)
    for bad in ("", "x", "1/0", "3/-1", "1/2/3"):
        with pytest.raises(SlopeParseError):
            Slope.parse(bad)


def test_slope_ordering_and_fraction():
    assert Slope(7, 2) < Slope(4, 1)
    assert Slope(3, 1) <= Slope(3, 1)
    assert Slope(9, 2).as_fraction() == Fraction(9, 2)
    assert sorted([Slope(4, 1), Slope(10, 3), Slope(7, 2)]) == [
        Slope(10, 3),
        Slope(7, 2),
        Slope(4, 1),
    ]


def test_factorize():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(97) == {97: 1}
    assert factorize(2**10) == {2: 10}
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_and_prime_power():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    assert prime_power(6) is None
    assert prime_power(97) == (97, 1)
    with pytest.raises(ValueError):
        prime_power(1)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    assert divisors(2 * 3**2) == [1, 2, 3, 6, 9, 18]
