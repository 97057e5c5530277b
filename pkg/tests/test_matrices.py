"""Test exact 2x2 matrices."""

from fractions import Fraction

import pytest

from tracedyn.matrices import Matrix2, random_sl2, word_image
from tracedyn.padic import GaussianRational

from .fixtures import rng


def test_arithmetic():
    S = Matrix2.from_rows([[2, 1], [1, 1]])
    assert S.det() == 1
    assert S.trace() == 3
    assert S @ S.inverse() == Matrix2.identity()
    assert S**2 == S @ S
    assert S**-2 == S.inverse() @ S.inverse()
    assert S**0 == Matrix2.identity()
    assert S.apply((1, 0)) == (2, 1)
    assert S.is_integral()
    assert S.rows == ((2, 1), (1, 1))


def test_inverse_fractions():
    M = Matrix2(2, 0, 0, 3)
    inv = M.inverse()
    assert inv == Matrix2.diag(Fraction(1, 2), Fraction(1, 3))
    assert not inv.is_integral()
    with pytest.raises(ZeroDivisionError):
        Matrix2(1, 1, 1, 1).inverse()


def test_gaussian_entries():
    pi = GaussianRational(2, 1)
    D = Matrix2.diag(pi * pi / 5, pi.conjugate() * pi.conjugate() / 5)
    assert D.det() == 1
    assert D.trace() == Fraction(6, 5)
    assert (D @ D.inverse()) == Matrix2.identity()


def test_invalid():
    with pytest.raises(TypeError):
        Matrix2(1.5, 0, 0, 1)
    with pytest.raises(ValueError):
        Matrix2.from_rows([[1, 0, 0], [0, 1, 0]])


def test_random_sl2(rng):
    for _ in range(100):
        M = random_sl2(rng, 5)
        assert M.det() == 1
        assert max(abs(e) for row in M.rows for e in row) <= 5
    with pytest.raises(ValueError):
        random_sl2(rng, 0)


def test_word_image():
    A = Matrix2(2, 1, 1, 1)
    B = Matrix2(1, 1, 0, 1)
    assert word_image("", [A, B]) == Matrix2.identity()
    assert word_image("ab", [A, B]) == A @ B
    assert word_image("aA", [A, B]) == Matrix2.identity()
    assert word_image("Ba", [A, B]) == B.inverse() @ A
    with pytest.raises(ValueError):
        word_image("c", [A, B])
