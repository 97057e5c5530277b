"""Test induced trace maps and their degree growth."""

from math import log

import pytest

from tracedyn.automorphism import compose, iterate_image, power
from tracedyn.data import random_anosov
from tracedyn.dynamics import (
    InverseMapError,
    TraceMap,
    check_submultiplicative,
    compose_trace_map,
    degree_sequence,
    embedding_invariance_harness,
    induced_trace_map,
    preserves_markov,
    semiconjugacy_check,
    trace_map_degrees,
)
from tracedyn.polynomial import IntPolynomial
from tracedyn.words import Word

from .fixtures import anosov, identity, rank3, rng, twist_product, twist_x

LOG_GOLDEN = 2 * log((1 + 5**0.5) / 2)
CHANGE = TraceMap.from_text(["x", "y", "z + x^2"])
CHANGE_INVERSE = TraceMap.from_text(["x", "y", "z - x^2"])


def test_induced_maps(identity, twist_x, anosov):
    assert induced_trace_map(identity) == TraceMap.identity()
    F = induced_trace_map(twist_x)
    assert str(F) == "(x, z, x*z - y)"
    assert str(induced_trace_map(anosov)) == "(x*z - y, z, x*z^2 - y*z - x)"


def test_iterates(twist_x):
    F = induced_trace_map(twist_x)
    F2 = compose_trace_map(F, F)
    assert str(F2) == "(x, x*z - y, x^2*z - x*y - z)"
    F3 = compose_trace_map(F, F2)
    assert [str(c) for c in F3.components] == [
        "x",
        "x^2*z - x*y - z",
        "x^3*z - x^2*y - 2*x*z + y",
    ]
    assert F3 == induced_trace_map(power(twist_x, 3))
    assert semiconjugacy_check(power(twist_x, 3)).passed == 100


def test_composition_order(twist_x, anosov):
    # the induced map reverses the order of composition
    f, g = twist_x, anosov
    lhs = induced_trace_map(compose(f, g))
    rhs = compose_trace_map(induced_trace_map(g), induced_trace_map(f))
    assert lhs == rhs
    F = induced_trace_map(f)
    assert compose_trace_map(F, TraceMap.identity()) == F


def test_trace_map_validation():
    with pytest.raises(ValueError):
        TraceMap.from_text(["x", "y"])
    with pytest.raises(ValueError):
        TraceMap.from_text(["x", "0", "z"])
    with pytest.raises(ValueError):
        TraceMap((IntPolynomial.variable("u", ("u",)),) * 3)


def test_rank(rank3):
    with pytest.raises(ValueError, match="rank 2"):
        induced_trace_map(rank3)


def test_degrees_identity(identity):
    seq = degree_sequence(identity, n_max=10)
    assert seq.degrees == [1] * 11
    assert seq.ealg_estimate == 0.0
    assert not seq.budget_hit


def test_degrees_twist(twist_x):
    seq = degree_sequence(twist_x, n_max=30)
    assert seq.degrees == list(range(1, 32))
    assert 0 < seq.ealg_estimate < 0.05
    assert seq.n_used == 30
    assert check_submultiplicative(seq.degrees) == []


def test_degrees_anosov(anosov):
    seq = degree_sequence(anosov, n_max=4)
    assert seq.degrees[:3] == [1, 3, 8]
    assert seq.ealg_estimate == pytest.approx(LOG_GOLDEN, rel=0.1)
    assert check_submultiplicative(seq.degrees) == []
    assert seq.terms[0] == 3
    frame = seq.to_frame()
    assert list(frame.columns) == ["n", "degree", "terms"]
    assert set(seq.to_dict()) == {"degrees", "ealg", "n_used", "budget_hit", "tolerance"}


def test_term_budget(anosov):
    seq = degree_sequence(anosov, n_max=30, term_budget=50)
    assert seq.budget_hit
    assert seq.n_used < 30
    assert seq.terms[-1] > 50
    assert all(t <= 50 for t in seq.terms[1:-1])
    with pytest.raises(ValueError):
        trace_map_degrees(TraceMap.identity(), n_max=0)


def test_submultiplicative():
    assert check_submultiplicative([1, 2, 4, 8]) == []
    assert check_submultiplicative([1, 2, 5]) == [(1, 1)]


def test_markov(identity, twist_x, anosov, twist_product, rng):
    for f in (identity, twist_x, anosov, twist_product, random_anosov(rng)):
        assert preserves_markov(induced_trace_map(f))
    assert not preserves_markov(CHANGE)


def test_semiconjugacy(twist_x, anosov, twist_product):
    for f in (twist_x, anosov, twist_product):
        report = semiconjugacy_check(f, trials=50)
        assert report.ok
        assert report.passed == 50
        assert report.to_dict()["witnesses"] == []
    with pytest.raises(ValueError):
        semiconjugacy_check(anosov, trials=0)


def test_embedding_twist(twist_x):
    report = embedding_invariance_harness(twist_x, CHANGE, CHANGE_INVERSE, n_max=30)
    assert report.difference < 0.05
    assert report.changed.degrees[1] == 3
    assert set(report.to_dict()) == {"original", "changed", "difference"}


def test_embedding_anosov(anosov):
    report = embedding_invariance_harness(anosov, CHANGE, CHANGE_INVERSE)
    assert report.difference < 0.05
    assert report.changed.degrees[:3] == [1, 6, 16]
    # degrees in both embeddings agree up to the factor deg(C) deg(C^-1) = 4
    for d, e in zip(report.original.degrees, report.changed.degrees):
        assert e <= 4 * d
        assert d <= 4 * e


def test_embedding_wrong_inverse(twist_x):
    with pytest.raises(InverseMapError):
        embedding_invariance_harness(twist_x, CHANGE, CHANGE)


@pytest.mark.parametrize("name, n_max", [("twist_x", 8), ("anosov", 4)])
def test_degree_bound(name, n_max, request):
    f = request.getfixturevalue(name)
    seq = degree_sequence(f, n_max=n_max)
    orbits = [iterate_image(f, Word.generator(i), seq.n_used, 10**6) for i in (1, 2)]
    for n, d in enumerate(seq.degrees):
        assert d <= max(len(orbit[n]) for orbit in orbits)
