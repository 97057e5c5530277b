"""Test automorphisms of free groups."""

import json

import pytest

from tracedyn.automorphism import (
    Automorphism,
    AutomorphismError,
    apply,
    change_generators,
    compose,
    inner,
    iterate_image,
    load_automorphism,
    power,
    save_automorphism,
)
from tracedyn.data import random_anosov
from tracedyn.words import Word, cyclic_length, parse_word, random_word

from .fixtures import anosov, rank3, rng, twist_x


def test_fixture(anosov):
    assert anosov.rank == 2
    assert anosov.name == "anosov"
    assert [w.letters for w in anosov.images] == ["aba", "ba"]
    assert "a -> aba" in str(anosov)


def test_wrong_inverse():
    with pytest.raises(AutomorphismError, match="inverse"):
        Automorphism.from_strings(["aba", "ba"], ["aB", "bA"])
    with pytest.raises(AutomorphismError):
        Automorphism.from_strings(["ab", "b"], ["aB", "c"])
    with pytest.raises(AutomorphismError):
        Automorphism.from_strings(["a"], ["a"])


def test_apply(anosov):
    assert apply(anosov, parse_word("a")).letters == "aba"
    assert apply(anosov, parse_word("ab")).letters == "ababa"
    assert apply(anosov, Word("")).is_identity
    with pytest.raises(AutomorphismError):
        apply(anosov, Word("a", 3))


def test_inverse(anosov, twist_x, rank3, rng):
    for f in (anosov, twist_x, rank3):
        assert compose(f, f.inverse()) == Automorphism.identity(f.rank)
        assert compose(f.inverse(), f) == Automorphism.identity(f.rank)
    for _ in range(20):
        w = random_word(rng, 2, 10)
        assert apply(anosov.inverse(), apply(anosov, w)) == w


def test_power(twist_x, anosov):
    assert power(twist_x, 3).images[1].letters == "baaa"
    assert power(twist_x, -2).images[1].letters == "bAA"
    assert power(anosov, 0) == Automorphism.identity(2)
    assert power(anosov, 2) == compose(anosov, anosov)
    assert power(anosov, 2).name == "anosov^2"


def test_inner():
    f = inner(2, parse_word("a"))
    assert [w.letters for w in f.images] == ["a", "abA"]
    assert [w.letters for w in f.inverse_images] == ["a", "Aba"]


def test_change_generators(anosov, rng):
    basis = Automorphism.from_strings(["a", "ab"], ["a", "Ab"])
    g = change_generators(anosov, basis)
    assert [w.letters for w in g.images] == ["ba", "bba"]
    for _ in range(20):
        w = random_word(rng, 2, 8)
        assert cyclic_length(apply(g, w)) == cyclic_length(
            apply(basis.inverse(), apply(anosov, apply(basis, w)))
        )


def test_iterate_image(anosov, twist_x):
    orbit = iterate_image(anosov, parse_word("a"), 10, 30)
    assert [len(w) for w in orbit] == [1, 3, 8, 21]
    orbit = iterate_image(twist_x, parse_word("b"), 4, 100)
    assert [w.letters for w in orbit] == ["b", "ba", "baa", "baaa", "baaaa"]
    with pytest.raises(ValueError):
        iterate_image(anosov, parse_word("a"), -1, 10)


def test_save_load(anosov, tmp_path):
    path = str(tmp_path / "anosov.json")
    save_automorphism(anosov, path)
    loaded = load_automorphism(path)
    assert loaded == anosov
    assert loaded.name == "anosov"


def test_load_invalid(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2]")
    with pytest.raises(AutomorphismError):
        load_automorphism(str(path))
    path.write_text(json.dumps({"rank": 2, "images": ["a", "b"]}))
    with pytest.raises(AutomorphismError, match="inverse_images"):
        load_automorphism(str(path))
    path.write_text("{not json")
    with pytest.raises(AutomorphismError):
        load_automorphism(str(path))


def test_homomorphism(rng):
    for _ in range(5):
        f = random_anosov(rng)
        for _ in range(20):
            u, v = random_word(rng, 2, 12), random_word(rng, 2, 12)
            assert apply(f, u * v) == apply(f, u) * apply(f, v)


def test_compose_apply(rng):
    for _ in range(5):
        f, g = random_anosov(rng), random_anosov(rng)
        fg = compose(f, g)
        for _ in range(20):
            w = random_word(rng, 2, 10)
            assert apply(fg, w) == apply(f, apply(g, w))


def test_iterate_image_rank(anosov, rank3):
    with pytest.raises(AutomorphismError, match="rank"):
        iterate_image(anosov, parse_word("abc", 3), 3, 100)
    with pytest.raises(AutomorphismError, match="rank"):
        iterate_image(rank3, parse_word("a"), 3, 100)
