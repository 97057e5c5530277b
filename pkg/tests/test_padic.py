"""Test exact scalars and valuations."""

from fractions import Fraction

import pytest
from sympy import primerange

from tracedyn.padic import (
    INFINITY,
    GaussianRational,
    ValuationSpec,
    gaussian_valuation,
    is_prime,
    next_prime,
    two_squares,
    vp,
)

from .fixtures import rng


def random_rational(rng, p):
    num = int(rng.integers(1, 50)) * p ** int(rng.integers(0, 4))
    den = int(rng.integers(1, 50)) * p ** int(rng.integers(0, 4))
    return Fraction(num * (-1) ** int(rng.integers(2)), den)


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert next_prime(101) == 103
    assert next_prime(2) == 3
    assert two_squares(5) == (2, 1)
    assert two_squares(13) == (3, 2)
    with pytest.raises(ValueError):
        two_squares(7)


@pytest.mark.parametrize("p", [p for p in primerange(5, 3000) if p % 4 == 1])
def test_two_squares_split_primes(p):
    a, b = two_squares(p)
    assert a * a + b * b == p
    assert a > b >= 1


def test_vp():
    assert vp(8, 2) == 3
    assert vp(Fraction(1, 25), 5) == -2
    assert vp(0, 7) == INFINITY
    assert vp(Fraction(-50, 3), 5) == 2
    assert vp(7, 5) == 0
    with pytest.raises(ValueError):
        vp(8, 4)


def test_vp_properties(rng):
    for p in (2, 3, 101):
        for _ in range(200):
            q, r = random_rational(rng, p), random_rational(rng, p)
            assert vp(q * r, p) == vp(q, p) + vp(r, p)
            if q + r != 0:
                assert vp(q + r, p) >= min(vp(q, p), vp(r, p))


def test_gaussian_arithmetic():
    pi = GaussianRational(2, 1)
    assert pi * pi.conjugate() == 5
    assert pi * pi == GaussianRational(3, 4)
    assert (pi / pi.conjugate()) * pi.conjugate() == pi
    assert pi**-1 * pi == 1
    assert pi.norm() == 5
    assert 1 - pi == GaussianRational(-1, -1)
    assert str(pi) == "2+1i"
    assert str(GaussianRational(Fraction(1, 2))) == "1/2"
    assert not GaussianRational()
    with pytest.raises(ZeroDivisionError):
        pi / 0


def test_gaussian_valuation():
    spec = ValuationSpec.gaussian(5, 2, 1)
    pi = spec.prime_element
    assert spec.valuation(1) == 0
    assert spec.valuation(5) == 1
    assert spec.valuation(pi) == 1
    assert spec.valuation(pi.conjugate()) == 0
    assert spec.valuation(pi * pi / 5) == 1
    assert spec.valuation(pi.conjugate() ** 2 / 5) == -1
    assert spec.valuation(Fraction(1, 25)) == -2
    assert spec.valuation(0) == INFINITY
    with pytest.raises(ValueError):
        gaussian_valuation(pi, ValuationSpec.rational(5))


def test_gaussian_valuation_properties(rng):
    spec = ValuationSpec.gaussian(13)
    for _ in range(200):
        z = GaussianRational(random_rational(rng, 13), random_rational(rng, 13))
        w = GaussianRational(random_rational(rng, 13), random_rational(rng, 13))
        assert spec.valuation(z * w) == spec.valuation(z) + spec.valuation(w)
        if z + w:
            assert spec.valuation(z + w) >= min(spec.valuation(z), spec.valuation(w))


def test_valuation_spec():
    spec = ValuationSpec.rational(101)
    assert not spec.is_gaussian
    assert spec.describe() == "101"
    assert spec.valuation(Fraction(1, 101)) == -1
    with pytest.raises(ValueError):
        spec.valuation(GaussianRational(1, 1))
    spec = ValuationSpec.gaussian(5)
    assert (spec.a, spec.b) == (2, 1)
    assert spec.describe() == "(2+1i)"
    with pytest.raises(ValueError):
        ValuationSpec.rational(100)
    with pytest.raises(ValueError):
        ValuationSpec.gaussian(5, 1, 1)
    with pytest.raises(ValueError):
        ValuationSpec("real", 5)
