"""Helper fixtures for tracedyn."""

import numpy as np
import pytest

from tracedyn.automorphism import Automorphism
from tracedyn.data import load_fixture


@pytest.fixture
def identity():
    """The identity of F2."""
    return load_fixture("identity")


@pytest.fixture
def twist_x():
    """The Dehn twist a -> a, b -> ba."""
    return load_fixture("twist_x")


@pytest.fixture
def anosov():
    """The pseudo-Anosov a -> aba, b -> ba with dilatation (3 + sqrt(5)) / 2."""
    return load_fixture("anosov")


@pytest.fixture
def twist_product():
    """The pseudo-Anosov a -> abaa, b -> baa with dilatation 2 + sqrt(3)."""
    return load_fixture("twist_product")


@pytest.fixture
def rank3():
    """A rank 3 automorphism permuting the generators cyclically."""
    return Automorphism.from_strings(["b", "c", "a"], ["c", "a", "b"], name="cycle")


@pytest.fixture
def rng():
    return np.random.default_rng(42)
