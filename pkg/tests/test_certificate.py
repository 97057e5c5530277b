"""Test the p-adic length certificate and the lower bound."""

from fractions import Fraction
from math import log

import pytest

from tracedyn.certificate import (
    BadMatrixError,
    CertificationError,
    PrimeTooSmallError,
    build_certified_representation,
    build_representation,
    certify_length_formula,
    lower_bound_rate,
    projective_points,
    translation_length,
)
from tracedyn.matrices import Matrix2
from tracedyn.padic import ValuationSpec
from tracedyn.words import Word, cyclic_words, parse_word, random_word

from .fixtures import anosov, identity, rank3, rng, twist_x

LOG_GOLDEN = 2 * log((1 + 5**0.5) / 2)


def test_representation():
    rep = build_representation()
    assert rep.valuation.p == 101
    assert rep.D == Matrix2.diag(Fraction(1, 101), 101)
    assert rep.images[0] == rep.D
    S = Matrix2(2, 1, 1, 1)
    assert rep.images[1] == S @ rep.D @ S.inverse()
    for M, M_inv in zip(rep.images, rep.inverses):
        assert M.det() == 1
        assert M @ M_inv == Matrix2.identity()
    assert rep.image(parse_word("ab")) == rep.images[0] @ rep.images[1]
    data = rep.to_dict()
    assert data["valuation"] == "rational-prime"
    assert data["S"] == [["2", "1"], ["1", "1"]]


def test_projective_points():
    S = Matrix2(2, 1, 1, 1)
    assert projective_points(S, 2) == [(1, 0), (0, 1), (2, 1), (1, 1)]


def test_bad_inputs():
    with pytest.raises(PrimeTooSmallError, match="p too small"):
        build_representation(2, 2)
    with pytest.raises(BadMatrixError, match="bad S"):
        build_representation(2, 101, [[1, 0], [0, 1]])
    with pytest.raises(BadMatrixError, match="bad S"):
        build_representation(2, 101, [[2, 0], [0, 1]])
    with pytest.raises(BadMatrixError):
        build_representation(2, 101, [[Fraction(1, 2), 0], [0, 2]])
    with pytest.raises(ValueError):
        build_representation(1)
    with pytest.raises(ValueError):
        build_representation(2, 100)


def test_translation_length():
    spec = ValuationSpec.rational(7)
    assert translation_length(Matrix2.identity(), spec) == 0
    assert translation_length(Matrix2(2, 1, 1, 1), spec) == 0
    assert translation_length(Matrix2.diag(Fraction(1, 7), 7), spec) == 2
    assert translation_length(Matrix2(0, 1, -1, 0), spec) == 0


def test_certify(rng):
    rep = build_representation()
    words = cyclic_words(2, 5)
    words += [random_word(rng, 2, int(rng.integers(1, 9))) for _ in range(50)]
    report = certify_length_formula(rep, words)
    assert report.ok
    assert report.words_checked == len(words)
    assert report.to_dict()["prime"] == "101"
    # non-cyclically reduced words use their cyclic length
    assert certify_length_formula(rep, [parse_word("abA"), Word("")]).ok


def test_certify_gaussian(rng):
    rep = build_representation(2, ValuationSpec.gaussian(5))
    report = certify_length_formula(rep, cyclic_words(2, 4))
    assert report.ok
    assert report.prime == "(2+1i)"


def test_certify_rank3():
    rep = build_representation(3, 101)
    assert len(rep.images) == 3
    assert certify_length_formula(rep, cyclic_words(3, 3)).ok


def test_certified_representation():
    rep, report = build_certified_representation(2, 2)
    assert rep.valuation.p == 3
    assert report.ok
    rep, _ = build_certified_representation(2, ValuationSpec.gaussian(5))
    assert rep.valuation.p == 5
    with pytest.raises(CertificationError):
        build_certified_representation(2, 2, max_tries=1)


def test_lower_bound(anosov, identity, twist_x):
    rep = build_representation()
    bound = lower_bound_rate(anosov, rep, budget=10**5)
    assert bound.rate == pytest.approx(LOG_GOLDEN, rel=0.02)
    assert bound.lengths[:5] == [1, 3, 8, 21, 55]
    assert bound.certified == 7
    assert bound.budget_hit
    assert lower_bound_rate(identity, rep, n_max=10).rate == 0.0
    assert lower_bound_rate(twist_x, rep, n_max=10).rate == 0.0
    assert set(bound.to_dict()) == {
        "rate",
        "prime",
        "n_used",
        "budget_hit",
        "certified_iterates",
        "tolerance",
    }


def test_lower_bound_rank_mismatch(anosov, rank3):
    with pytest.raises(ValueError):
        lower_bound_rate(rank3, build_representation())
