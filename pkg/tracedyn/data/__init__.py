"""Submodule including some common automorphisms of F2."""

from os.path import join, split

from ..automorphism import Automorphism, compose, load_automorphism
from ..growth import abelianization

__all__ = ("FIXTURES", "fixture_path", "load_fixture", "random_anosov")
this_dir, _ = split(__file__)

FIXTURES = ("identity", "twist_x", "anosov", "twist_product")
"""Packaged automorphisms: the identity, the Dehn twist a -> a, b -> ba, the
pseudo-Anosov a -> aba, b -> ba and the pseudo-Anosov a -> abaa, b -> baa."""

TWIST_X = Automorphism.from_strings(["a", "ba"], ["a", "bA"], name="T_X")
TWIST_Y = Automorphism.from_strings(["aB", "b"], ["ab", "b"], name="T_Y")


def fixture_path(name: str) -> str:
    """Get the path of a packaged automorphism file."""
    if name not in FIXTURES:
        raise ValueError("unknown fixture `%s`, use one of %s." % (name, FIXTURES))
    return join(this_dir, name + ".json")


def load_fixture(name: str) -> Automorphism:
    """Load one of the packaged automorphisms.

    Parameters
    ----------
    name : str
        One of `FIXTURES`.

    Returns
    -------
    Automorphism
        The automorphism of F2.
    """
    return load_automorphism(fixture_path(name))


def random_anosov(rng, n_twists=4):
    """Draw a random product of Dehn twists that acts hyperbolically on homology.

    Parameters
    ----------
    rng : numpy.random.Generator
        The random number generator to draw from.
    n_twists : int >= 2
        How many twists T_X^(+-1), T_Y^(+-1) to multiply.

    Returns
    -------
    Automorphism
        A product whose action on homology has |trace| > 2.
    """
    if n_twists < 2:
        raise ValueError("need at least two twists.")
    twists = [TWIST_X, TWIST_X.inverse(), TWIST_Y, TWIST_Y.inverse()]
    while True:
        picks = rng.integers(len(twists), size=n_twists)
        f = Automorphism.identity(2)
        for i in picks:
            f = compose(twists[int(i)], f)
        if abs(abelianization(f).trace()) > 2:
            object.__setattr__(
                f, "name", "random_anosov(%s)" % "".join(str(int(i)) for i in picks)
            )
            return f
