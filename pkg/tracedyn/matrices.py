"""Exact 2x2 matrices and representations of free group words."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .constants import ORACLE_BOUND
from .padic import GaussianRational


def _exact(value):
    if isinstance(value, (int, Fraction, GaussianRational)):
        return value
    raise TypeError("matrix entries must be exact numbers, got `%r`." % (value,))


@dataclass(frozen=True)
class Matrix2:
    """A 2x2 matrix [[a, b], [c, d]] over exact scalars.

    Entries may be ints, `fractions.Fraction` or `GaussianRational`.
    """

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _exact(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix2:
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("need a 2x2 matrix, got %s." % (rows,))
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, a, d) -> Matrix2:
        return cls(a, 0, 0, d)

    @property
    def rows(self) -> Tuple[tuple, tuple]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse(self) -> Matrix2:
        det = self.det()
        if det == 1:
            return Matrix2(self.d, -self.b, -self.c, self.a)
        if det == 0:
            raise ZeroDivisionError("matrix is singular.")
        if isinstance(det, int):
            det = Fraction(det)
        return Matrix2(
            self.d / det,
            -self.b / det,
            -self.c / det,
            self.a / det,
        )

    def __pow__(self, k: int) -> Matrix2:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Matrix2.identity()
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def apply(self, vector: Sequence) -> tuple:
        """Multiply a column vector."""
        u, v = vector
        return (self.a * u + self.b * v, self.c * u + self.d * v)

    def is_integral(self) -> bool:
        return all(
            isinstance(e, int) or getattr(e, "denominator", 0) == 1
            for e in (self.a, self.b, self.c, self.d)
        )

    def to_json(self) -> list:
        return [[str(e) for e in row] for row in self.rows]

    def __str__(self):
        return "[[%s, %s], [%s, %s]]" % (self.a, self.b, self.c, self.d)


def random_sl2(rng, bound: int = ORACLE_BOUND) -> Matrix2:
    """Draw a random integer matrix of determinant one.

    Entries lie in [-bound, bound]. The entries a, b and c are drawn uniformly
    and d is solved for from ad - bc = 1, rejecting draws without a solution.
    """
    if bound < 1:
        raise ValueError("`bound` must be at least 1.")
    while True:
        a, b, c = (int(v) for v in rng.integers(-bound, bound + 1, size=3))
        if a == 0:
            # then -bc = 1 and d is free
            if b * c != -1:
                continue
            d = int(rng.integers(-bound, bound + 1))
            return Matrix2(a, b, c, d)
        if (1 + b * c) % a:
            continue
        d = (1 + b * c) // a
        if abs(d) <= bound:
            return Matrix2(a, b, c, d)


def word_image(letters: str, generators: Sequence[Matrix2], inverses=None) -> Matrix2:
    """The image of a word under a representation of the free group.

    Parameters
    ----------
    letters : str
        The word in letter encoding (see `tracedyn.words`).
    generators : list of Matrix2
        The image of each generator.
    inverses : list of Matrix2, optional
        Precomputed inverses of `generators`.

    Returns
    -------
    Matrix2
        The left-to-right product of the letter images.
    """
    if inverses is None:
        inverses = [g.inverse() for g in generators]
    images = {}
    for i, (g, h) in enumerate(zip(generators, inverses)):
        images[chr(ord("a") + i)] = g
        images[chr(ord("A") + i)] = h
    result = Matrix2.identity()
    for c in letters:
        try:
            result = result @ images[c]
        except KeyError as error:
            raise ValueError(
                "letter `%s` has no image among %d generators." % (c, len(generators))
            ) from error
    return result
