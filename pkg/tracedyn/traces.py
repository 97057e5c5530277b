"""Trace polynomials of words in the free group of rank two.

Every SL2 representation of F2 = <a, b> has its character determined by the
Fricke coordinates x = tr(a), y = tr(b) and z = tr(ab). The trace of any
other word is an integer polynomial in these coordinates, obtained here by
recursive reduction with the SL2 trace identities

    tr(A^-1) = tr(A),
    tr(AB) = tr(A) tr(B) - tr(AB^-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .constants import VARIABLES
from .matrices import Matrix2, word_image
from .polynomial import IntPolynomial
from .words import Word, _cyclic_core, _free_reduce, cyclic_reduce

X, Y, Z = IntPolynomial.generators(VARIABLES)
TWO = IntPolynomial.constant(2, VARIABLES)


def _inverse_letters(letters: str) -> str:
    return letters[::-1].swapcase()


def _canonical(letters: str) -> str:
    """Minimal rotation of a word or its inverse after cyclic reduction."""
    letters = _free_reduce(letters)
    i, j = _cyclic_core(letters)
    core = letters[i:j]
    if len(core) < 2:
        return core.lower()
    inv = _inverse_letters(core)
    return min(
        min(core[k:] + core[:k] for k in range(len(core))),
        min(inv[k:] + inv[:k] for k in range(len(inv))),
    )


@dataclass(frozen=True)
class TraceKey:
    """The canonical representative of a word up to conjugation and inversion.

    Words with the same key have the same trace under every SL2
    representation.
    """

    letters: str

    @classmethod
    def from_word(cls, w: Word) -> TraceKey:
        if w.rank != 2:
            raise ValueError("trace polynomials are implemented for rank 2 only.")
        return cls(_canonical(w.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters if self.letters else "1"


def _repeated_split(w: str) -> Tuple[int, int]:
    """Positions i < j of a repeated letter with j - i closest to len(w) / 2."""
    n = len(w)
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] == w[j]:
                score = abs(2 * (j - i) - n)
                if best is None or score < best[0]:
                    best = (score, i, j)
    return None if best is None else best[1:]


@lru_cache(maxsize=None)
def _trace(key: str) -> IntPolynomial:
    n = len(key)
    if n == 0:
        return TWO
    if n == 1:
        return X if key == "a" else Y
    split = _repeated_split(key)
    if split is not None:
        # w = gU gV gives tr(w) = tr(gU) tr(gV) - tr(U V^-1)
        i, j = split
        w = key[i:] + key[:i]
        j -= i
        gu, gv = w[:j], w[j:]
        u, v = w[1:j], w[j + 1 :]
        return _trace(_canonical(gu)) * _trace(_canonical(gv)) - _trace(
            _canonical(u + _inverse_letters(v))
        )
    # all letters distinct, so the word is ab (up to symmetry), aB or a commutator
    if n == 2:
        return Z if key[0].islower() == key[1].islower() else X * Y - Z
    h = n // 2
    A, B = key[:h], key[h:]
    return _trace(_canonical(A)) * _trace(_canonical(B)) - _trace(
        _canonical(A + _inverse_letters(B))
    )


def trace_polynomial(w: Word) -> IntPolynomial:
    """Compute the trace polynomial of a word in F2.

    Arguments
    ---------
    w : Word
        A word of rank 2.

    Returns
    -------
    IntPolynomial
        The polynomial P in (x, y, z) with P(tr A, tr B, tr AB) = tr w(A, B)
        for all A and B in SL2.

    Note
    ----
    Results are memoized on the `TraceKey` of the word, so conjugate and
    inverse words share a single computation.
    """
    return _trace(TraceKey.from_word(w).letters)


def clear_cache():
    """Drop all memoized trace polynomials."""
    _trace.cache_clear()


def markov_invariant() -> IntPolynomial:
    """The trace of the commutator abAB, x^2 + y^2 + z^2 - xyz - 2."""
    return X**2 + Y**2 + Z**2 - X * Y * Z - 2


def trace_point(A: Matrix2, B: Matrix2) -> tuple:
    """Fricke coordinates (tr A, tr B, tr AB) of a pair of matrices."""
    return (A.trace(), B.trace(), (A @ B).trace())


def matrix_trace(w: Word, A: Matrix2, B: Matrix2):
    """Trace of a word evaluated at the matrices A and B by exact products."""
    if w.rank != 2:
        raise ValueError("need a word of rank 2, got rank %d." % w.rank)
    core, _ = cyclic_reduce(w)
    return word_image(core.letters, [A, B]).trace()
