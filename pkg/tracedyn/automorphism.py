"""Automorphisms of free groups given by generator images."""

from __future__ import annotations

from dataclasses import dataclass, field
import json
from typing import Dict, List, Sequence

from .logger import logger
from .words import (
    _INVERSE,
    Form,
    Word,
    WordError,
    inverse,
    letters_of,
    parse_word,
    reduce,
)


class AutomorphismError(ValueError):
    """Raised for invalid automorphism definitions."""


def _table(images: Sequence[Word]) -> Dict[int, bytes]:
    """Map letter codes to the byte strings they are substituted by.

    The inverse of a generator maps to the inverse of its image.
    """
    table = {}
    for i, img in enumerate(images):
        letter = letters_of(len(images))[i]
        table[ord(letter)] = img.letters.encode("ascii")
        table[ord(letter.upper())] = inverse(img).letters.encode("ascii")
    return table


def _substitute(letters: str, table: Dict[int, bytes]) -> str:
    """Substitute images for letters and freely reduce on the fly.

    Images are reduced, so cancellation can only happen where an image is
    appended to the already reduced output.
    """
    out = bytearray()
    for c in letters.encode("ascii"):
        img = table[c]
        i, n = 0, len(img)
        while i < n and out and out[-1] == _INVERSE[img[i]]:
            out.pop()
            i += 1
        out += img[i:] if i else img
    return out.decode("ascii")


@dataclass(frozen=True)
class Automorphism:
    """An automorphism of the free group F_rank.

    The inverse has to be supplied explicitly and is validated on
    construction: substituting the images into the inverse images (and the
    other way round) has to give back every generator.

    Attributes
    ----------
    rank : int
        The rank of the free group, at least 2.
    images : tuple of Word
        The image of each generator.
    inverse_images : tuple of Word
        The image of each generator under the inverse automorphism.
    name : str
        An optional label used in reports.
    """

    rank: int
    images: tuple
    inverse_images: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.rank < 2:
            raise AutomorphismError("rank must be at least 2, got %d." % self.rank)
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise AutomorphismError(
                "need exactly %d images and %d inverse images." % (self.rank, self.rank)
            )
        for w in tuple(self.images) + tuple(self.inverse_images):
            if w.rank != self.rank:
                raise AutomorphismError(
                    "image `%s` has rank %d instead of %d." % (w, w.rank, self.rank)
                )
        object.__setattr__(self, "images", tuple(reduce(w) for w in self.images))
        object.__setattr__(
            self, "inverse_images", tuple(reduce(w) for w in self.inverse_images)
        )
        forward = _table(self.images)
        backward = _table(self.inverse_images)
        for i, letter in enumerate(letters_of(self.rank)[: self.rank]):
            there = _substitute(self.inverse_images[i].letters, forward)
            back = _substitute(self.images[i].letters, backward)
            if there != letter or back != letter:
                raise AutomorphismError(
                    "supplied inverse is wrong on generator `%s` (f(g(%s)) = %s, "
                    "g(f(%s)) = %s)." % (letter, letter, there or 1, letter, back or 1)
                )

    def __str__(self):
        maps = ", ".join(
            "%s -> %s" % (g, w) for g, w in zip(letters_of(self.rank), self.images)
        )
        return "%s(%s)" % (self.name + ": " if self.name else "", maps)

    @property
    def table(self) -> Dict[int, bytes]:
        return _table(self.images)

    @classmethod
    def from_strings(
        cls,
        images: Sequence[str],
        inverse_images: Sequence[str],
        rank: int = None,
        name: str = "",
    ) -> Automorphism:
        """Create an automorphism from images in the letter encoding."""
        rank = len(images) if rank is None else rank
        try:
            return cls(
                rank,
                tuple(parse_word(w, rank) for w in images),
                tuple(parse_word(w, rank) for w in inverse_images),
                name,
            )
        except WordError as error:
            raise AutomorphismError("invalid image: %s" % error) from error

    @classmethod
    def identity(cls, rank: int = 2) -> Automorphism:
        gens = tuple(Word.generator(i, rank) for i in range(1, rank + 1))
        return cls(rank, gens, gens, "identity")

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> Automorphism:
        """Create an automorphism from the definition file format."""
        try:
            return cls.from_strings(
                data["images"],
                data["inverse_images"],
                int(data["rank"]),
                data.get("name", name),
            )
        except (KeyError, TypeError) as error:
            raise AutomorphismError(
                "automorphism definitions need `rank`, `images` and `inverse_images`."
            ) from error

    def to_dict(self) -> dict:
        data = {
            "rank": self.rank,
            "images": [w.letters for w in self.images],
            "inverse_images": [w.letters for w in self.inverse_images],
        }
        if self.name:
            data["name"] = self.name
        return data

    def inverse(self) -> Automorphism:
        """The inverse automorphism."""
        name = self.name + "^-1" if self.name else ""
        return Automorphism(self.rank, self.inverse_images, self.images, name)


def apply(f: Automorphism, w: Word) -> Word:
    """Apply an automorphism to a word.

    Parameters
    ----------
    f : Automorphism
        The automorphism.
    w : Word
        A word in the same free group.

    Returns
    -------
    Word
        The freely reduced image of `w`.
    """
    if w.rank != f.rank:
        raise AutomorphismError(
            "word has rank %d but the automorphism has rank %d." % (w.rank, f.rank)
        )
    letters = reduce(w).letters
    return Word(_substitute(letters, f.table), f.rank, Form.REDUCED)


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """Compose two automorphisms, applying `g` first.

    The images of the result are the images of `g` with `f` applied and the
    inverse images are those of f^-1 with g^-1 applied.
    """
    if f.rank != g.rank:
        raise AutomorphismError(
            "can not compose automorphisms of rank %d and %d." % (f.rank, g.rank)
        )
    g_inv = g.inverse()
    images = tuple(apply(f, w) for w in g.images)
    inverse_images = tuple(apply(g_inv, w) for w in f.inverse_images)
    name = "%s.%s" % (f.name, g.name) if f.name and g.name else ""
    return Automorphism(f.rank, images, inverse_images, name)


def power(f: Automorphism, q: int) -> Automorphism:
    """The q-th power of an automorphism, negative powers use the inverse."""
    base = f if q >= 0 else f.inverse()
    result = Automorphism.identity(f.rank)
    for _ in range(abs(q)):
        result = compose(base, result)
    if f.name:
        object.__setattr__(result, "name", "%s^%d" % (f.name, q))
    return result


def inner(rank: int, w: Word) -> Automorphism:
    """The inner automorphism x -> w x w^-1."""
    w = reduce(w)
    w_inv = inverse(w)
    gens = [Word.generator(i, rank) for i in range(1, rank + 1)]
    images = tuple(reduce(Word(w.letters + g.letters + w_inv.letters, rank)) for g in gens)
    inverse_images = tuple(
        reduce(Word(w_inv.letters + g.letters + w.letters, rank)) for g in gens
    )
    return Automorphism(rank, images, inverse_images, "inner(%s)" % w)


def change_generators(f: Automorphism, basis: Automorphism) -> Automorphism:
    """Express an automorphism in a different free generating set.

    The new generating set consists of the images of the generators under
    `basis`. The result acts on words written in the new generators.

    Parameters
    ----------
    f : Automorphism
        The automorphism to re-express.
    basis : Automorphism
        Maps each new generator to its expression in the old generators.

    Returns
    -------
    Automorphism
        basis^-1 o f o basis.
    """
    return compose(basis.inverse(), compose(f, basis))


def iterate_image(
    f: Automorphism, w: Word, n: int, length_budget: int
) -> List[Word]:
    """Iterate an automorphism on a word.

    Parameters
    ----------
    f : Automorphism
        The automorphism.
    w : Word
        The starting word.
    n : int >= 0
        The number of iterations.
    length_budget : int >= 1
        The largest reduced word length to keep.

    Returns
    -------
    list of Word
        The freely reduced words w, f(w), ..., f^m(w) where m is `n` or the
        last index before the length would exceed `length_budget`.
    """
    if n < 0 or length_budget < 1:
        raise ValueError("need n >= 0 and a positive length budget.")
    if w.rank != f.rank:
        raise AutomorphismError(
            "word has rank %d but the automorphism has rank %d." % (w.rank, f.rank)
        )
    table = f.table
    current = reduce(w)
    orbit = [current]
    for k in range(1, n + 1):
        nxt = _substitute(current.letters, table)
        if len(nxt) > length_budget:
            logger.info(
                "word budget of %d letters reached after %d iterations.",
                length_budget,
                k - 1,
            )
            break
        current = Word(nxt, f.rank, Form.REDUCED)
        orbit.append(current)
    return orbit


def load_automorphism(path: str) -> Automorphism:
    """Load an automorphism from a JSON definition file.

    The file has the form
    ``{"rank": 2, "images": ["aba", "ba"], "inverse_images": ["aB", "bbA"]}``.
    """
    logger.info("reading automorphism from {}".format(path))
    try:
        with open(path) as infile:
            data = json.load(infile)
    except json.JSONDecodeError as error:
        raise AutomorphismError("%s is not valid JSON: %s" % (path, error)) from error
    if not isinstance(data, dict):
        raise AutomorphismError("%s does not contain a JSON object." % path)
    return Automorphism.from_dict(data)


def save_automorphism(f: Automorphism, path: str):
    """Write an automorphism to a JSON definition file."""
    with open(path, "w") as outfile:
        json.dump(f.to_dict(), outfile, indent=2)
