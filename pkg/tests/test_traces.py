"""Test trace polynomials of words in F2."""

import pytest

from tracedyn.matrices import Matrix2, random_sl2
from tracedyn.traces import (
    TraceKey,
    clear_cache,
    markov_invariant,
    matrix_trace,
    trace_point,
    trace_polynomial,
)
from tracedyn.words import Word, conjugate, inverse, parse_word, random_word

from .fixtures import rng


@pytest.mark.parametrize(
    "word, expected",
    [
        ("", "2"),
        ("a", "x"),
        ("B", "y"),
        ("ab", "z"),
        ("BA", "z"),
        ("aB", "x*y - z"),
        ("aa", "x^2 - 2"),
        ("aab", "x*z - y"),
        ("abAB", "x^2 + y^2 + z^2 - x*y*z - 2"),
    ],
)
def test_small_words(word, expected):
    assert str(trace_polynomial(parse_word(word))) == expected


def test_markov():
    assert trace_polynomial(parse_word("abAB")) == markov_invariant()
    assert trace_polynomial(parse_word("BAba")) == markov_invariant()


def test_keys():
    key = TraceKey.from_word(parse_word("ab"))
    assert key == TraceKey.from_word(parse_word("ba"))
    assert key == TraceKey.from_word(parse_word("BA"))
    assert key == TraceKey.from_word(parse_word("Babb"))
    assert len(TraceKey.from_word(parse_word("aA"))) == 0
    assert str(TraceKey.from_word(Word(""))) == "1"
    with pytest.raises(ValueError, match="rank 2"):
        TraceKey.from_word(Word("abc", 3))


def test_against_matrices(rng):
    clear_cache()
    words = [random_word(rng, 2, int(rng.integers(0, 11))) for _ in range(200)]
    pairs = [(random_sl2(rng), random_sl2(rng)) for _ in range(20)]
    for A, B in pairs:
        point = trace_point(A, B)
        for w in words:
            assert trace_polynomial(w).evaluate(point) == matrix_trace(w, A, B)


def test_symmetries(rng):
    for _ in range(50):
        w = random_word(rng, 2, 9)
        p = trace_polynomial(w)
        assert trace_polynomial(inverse(w)) == p
        assert trace_polynomial(conjugate(w, random_word(rng, 2, 4))) == p
        assert p.degree() <= len(w)


def test_matrix_trace():
    A = Matrix2(2, 1, 1, 1)
    B = Matrix2(1, 1, 0, 1)
    assert trace_point(A, B) == (3, 2, 4)
    assert matrix_trace(parse_word("ab"), A, B) == 4
    assert matrix_trace(Word(""), A, B) == 2
    with pytest.raises(ValueError):
        matrix_trace(Word("c", 3), A, B)
