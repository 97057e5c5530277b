"""Test the packaged automorphisms."""

from math import log

import pytest

from tracedyn.automorphism import Automorphism
from tracedyn.data import FIXTURES, TWIST_X, TWIST_Y, fixture_path, load_fixture, random_anosov
from tracedyn.dynamics import semiconjugacy_check
from tracedyn.growth import abelianization, estimate_rho, spectral_radius_matrix

from .fixtures import rng


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures(name):
    f = load_fixture(name)
    assert isinstance(f, Automorphism)
    assert f.rank == 2
    assert f.name == name
    assert fixture_path(name).endswith(name + ".json")


def test_unknown_fixture():
    with pytest.raises(ValueError):
        load_fixture("nonexistent")


def test_twists():
    assert load_fixture("twist_x") == TWIST_X
    assert abelianization(TWIST_Y).rows == ((1, 0), (-1, 1))


def test_random_anosov(rng):
    for _ in range(3):
        f = random_anosov(rng)
        radius = spectral_radius_matrix(abelianization(f))
        assert radius > 1
        assert f.name.startswith("random_anosov")
        assert semiconjugacy_check(f, trials=10).ok
        est = estimate_rho(f, budget=10**5)
        assert est.rho_estimate == pytest.approx(log(radius), rel=0.02)
    with pytest.raises(ValueError):
        random_anosov(rng, 1)


def test_package_api():
    import tracedyn

    f = tracedyn.load_fixture("anosov")
    assert f == load_fixture("anosov")
    assert tracedyn.degree_sequence(f, n_max=3).degrees == [1, 3, 8, 21]
