"""Lower bounds for algebraic entropy from a p-adic representation.

A free group F_n is represented in SL2 over Q (or Q(i)) by conjugates
S^i D S^-i of a diagonal matrix D whose trace has valuation -1. When the
axes of these matrices on the Bruhat-Tits tree meet in distinct directions,
the translation length of every word is twice its cyclically reduced length.
Translation lengths are read off the trace valuation, so word growth under an
automorphism becomes growth of the valuation of a trace function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import log
from typing import List, Sequence, Tuple, Union

from .automorphism import Automorphism, iterate_image
from .constants import (
    CERTIFY_MAX_LENGTH,
    DEFAULT_PRIME,
    DEFAULT_S,
    GROWTH_N_MAX,
    WORD_BUDGET,
)
from .logger import logger
from .matrices import Matrix2, word_image
from .padic import INFINITY, ValuationSpec, next_prime
from .util import trailing_rate, window_tolerance
from .words import Word, cyclic_length, cyclic_reduce, cyclic_words
from .workflows.core import workflow


class CertificationError(ValueError):
    """Raised when a representation does not satisfy the length formula."""


class PrimeTooSmallError(CertificationError):
    """Raised when the projective test points collide modulo p."""


class BadMatrixError(CertificationError):
    """Raised for conjugating matrices that do not give distinct axes."""


@dataclass(frozen=True)
class RepresentationSpec:
    """A representation of F_n sending x_(i+1) to S^i D S^-i.

    Attributes
    ----------
    rank : int
        The rank of the free group.
    valuation : ValuationSpec
        The valuation used for translation lengths.
    S : Matrix2
        The integral conjugating matrix.
    D : Matrix2
        The diagonal matrix with trace of valuation -1.
    images : tuple of Matrix2
        The image of each generator.
    inverses : tuple of Matrix2
        The inverse of each image.
    """

    rank: int
    valuation: ValuationSpec
    S: Matrix2
    D: Matrix2
    images: Tuple[Matrix2, ...]
    inverses: Tuple[Matrix2, ...] = field(repr=False, default=())

    def __post_init__(self):
        if not self.inverses:
            object.__setattr__(
                self, "inverses", tuple(m.inverse() for m in self.images)
            )

    def image(self, w: Word) -> Matrix2:
        """The image of a word as an exact matrix product."""
        if w.rank != self.rank:
            raise ValueError(
                "word has rank %d but the representation has rank %d."
                % (w.rank, self.rank)
            )
        return word_image(w.letters, self.images, self.inverses)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "valuation": self.valuation.kind,
            "p": self.valuation.p,
            "prime": self.valuation.describe(),
            "S": self.S.to_json(),
            "D": self.D.to_json(),
        }


def _as_matrix(S) -> Matrix2:
    if isinstance(S, Matrix2):
        return S
    return Matrix2.from_rows(S)


def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def projective_points(S: Matrix2, rank: int) -> List[tuple]:
    """The ends S^k(1, 0) and S^k(0, 1) of the axes, k = 0...rank-1."""
    points = []
    M = Matrix2.identity()
    for _ in range(rank):
        points.append(M.apply((1, 0)))
        points.append(M.apply((0, 1)))
        M = S @ M
    return points


def _diagonal(spec: ValuationSpec) -> Matrix2:
    p = spec.p
    if spec.is_gaussian:
        pi = spec.prime_element
        return Matrix2.diag(pi * pi / p, pi.conjugate() * pi.conjugate() / p)
    return Matrix2.diag(Fraction(1, p), Fraction(p))


def build_representation(
    rank: int = 2,
    p: Union[int, ValuationSpec] = DEFAULT_PRIME,
    S: Union[Matrix2, Sequence] = DEFAULT_S,
) -> RepresentationSpec:
    """Build the representation x_(i+1) -> S^i D S^-i.

    D is diag(1/p, p) for a rational prime and diag(pi^2 / p, conj(pi)^2 / p)
    for a split Gaussian prime pi = a + bi. Both have a trace of valuation -1.

    Arguments
    ---------
    rank : int >= 2
        The rank of the free group.
    p : int or ValuationSpec
        A rational prime or a full valuation spec.
    S : Matrix2 or nested list
        An integer matrix of determinant one.

    Returns
    -------
    RepresentationSpec
        The validated representation.

    Raises
    ------
    BadMatrixError
        If S is not in SL2(Z) or the points S^k(1, 0), S^k(0, 1) are not
        pairwise distinct in the projective line over Q ("bad S").
    PrimeTooSmallError
        If these points collide modulo p ("p too small").
    """
    if rank < 2:
        raise ValueError("rank must be at least 2, got %d." % rank)
    spec = p if isinstance(p, ValuationSpec) else ValuationSpec.rational(p)
    try:
        S = _as_matrix(S)
    except TypeError as error:
        raise BadMatrixError("bad S: %s" % error) from error
    if not S.is_integral() or S.det() != 1:
        raise BadMatrixError("bad S: %s is not an integer matrix of determinant 1." % S)
    S = Matrix2(*(int(e) for e in (S.a, S.b, S.c, S.d)))
    points = projective_points(S, rank)
    for u, v in combinations(points, 2):
        if _cross(u, v) == 0:
            raise BadMatrixError(
                "bad S: projective points %s and %s coincide over Q." % (u, v)
            )
    for u, v in combinations(points, 2):
        if _cross(u, v) % spec.p == 0:
            raise PrimeTooSmallError(
                "p too small: projective points %s and %s coincide modulo %d."
                % (u, v, spec.p)
            )
    D = _diagonal(spec)
    images = []
    M, M_inv = Matrix2.identity(), Matrix2.identity()
    S_inv = S.inverse()
    for _ in range(rank):
        images.append(M @ D @ M_inv)
        M, M_inv = S @ M, M_inv @ S_inv
    return RepresentationSpec(rank, spec, S, D, tuple(images))


def translation_length(M: Matrix2, spec: ValuationSpec) -> int:
    """Translation length of a matrix on the Bruhat-Tits tree.

    Computed from the trace as -2 min(v(tr M), 0), which vanishes for
    traces that are integral at the prime.
    """
    nu = spec.valuation(M.trace())
    if nu == INFINITY:
        return 0
    return -2 * min(nu, 0)


@dataclass
class CertificationReport:
    """Outcome of checking the length formula on a set of words."""

    prime: str
    words_checked: int
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "words_checked": self.words_checked,
            "failures": self.failures,
        }


def _check_word(args):
    rep, w = args
    M = rep.image(w)
    expected = 2 * cyclic_length(w)
    observed = translation_length(M, rep.valuation)
    det = M.det()
    if observed == expected and det == 1:
        return None
    return {
        "word": str(w),
        "expected": expected,
        "observed": observed,
        "det": str(det),
    }


def certify_length_formula(
    rep: RepresentationSpec,
    words: Sequence[Word],
    threads: int = 1,
    progress: bool = True,
) -> CertificationReport:
    """Check that translation lengths are twice the cyclically reduced lengths.

    Arguments
    ---------
    rep : RepresentationSpec
        The representation to certify.
    words : list of Word
        The words to check.
    threads : int
        How many words to check in parallel.
    progress : bool
        Whether to show a progress bar over the words.

    Returns
    -------
    CertificationReport
        The number of checked words and a witness for every failure.
    """
    results = workflow(
        _check_word,
        [(rep, w) for w in words],
        threads=threads,
        description="Certifying words",
        progress=progress,
    )
    failures = [r for r in results if r is not None]
    if failures:
        logger.warning(
            "length formula fails on %d of %d words at prime %s.",
            len(failures),
            len(words),
            rep.valuation.describe(),
        )
    return CertificationReport(rep.valuation.describe(), len(words), failures)


def _next_spec(spec: ValuationSpec) -> ValuationSpec:
    q = next_prime(spec.p)
    if spec.is_gaussian:
        while q % 4 != 1:
            q = next_prime(q)
        return ValuationSpec.gaussian(q)
    return ValuationSpec.rational(q)


def build_certified_representation(
    rank: int = 2,
    p: Union[int, ValuationSpec] = DEFAULT_PRIME,
    S: Union[Matrix2, Sequence] = DEFAULT_S,
    max_length: int = 4,
    max_tries: int = 20,
) -> Tuple[RepresentationSpec, CertificationReport]:
    """Build a representation and retry with larger primes until it certifies.

    Every candidate is checked on all cyclically reduced words up to
    `max_length`.

    Returns
    -------
    tuple of (RepresentationSpec, CertificationReport)
        The first certified representation and its report.
    """
    spec = p if isinstance(p, ValuationSpec) else ValuationSpec.rational(p)
    words = cyclic_words(rank, max_length)
    for _ in range(max_tries):
        try:
            rep = build_representation(rank, spec, S)
        except PrimeTooSmallError as error:
            logger.warning("%s, retrying with a larger prime.", error)
            spec = _next_spec(spec)
            continue
        report = certify_length_formula(rep, words, progress=False)
        if report.ok:
            return rep, report
        logger.warning(
            "prime %s fails certification, retrying with a larger prime.",
            spec.describe(),
        )
        spec = _next_spec(spec)
    raise CertificationError("no certified representation within %d primes." % max_tries)


@dataclass
class LowerBoundReport:
    """Lower bound for the algebraic entropy from valuation growth.

    Attributes
    ----------
    rate : float
        Trailing-window growth rate of log |tr f^n(x_1)|_v.
    lengths : list of int
        Cyclically reduced lengths of f^n(x_1).
    n_used : int
        The number of iterations.
    budget_hit : bool
        Whether the word budget stopped the iteration.
    certified : int
        How many iterates had their trace valuation checked by exact products.
    prime : str
        The prime of the valuation.
    tolerance : float
        Change of the rate when the last iterate is dropped.
    """

    rate: float
    lengths: List[int]
    n_used: int
    budget_hit: bool
    certified: int
    prime: str
    tolerance: float = 0.0

    def to_dict(self) -> dict:
        return {
            "rate": self.rate,
            "prime": self.prime,
            "n_used": self.n_used,
            "budget_hit": self.budget_hit,
            "certified_iterates": self.certified,
            "tolerance": self.tolerance,
        }


def lower_bound_rate(
    f: Automorphism,
    rep: RepresentationSpec,
    n_max: int = GROWTH_N_MAX,
    budget: int = WORD_BUDGET,
    certify_up_to: int = CERTIFY_MAX_LENGTH,
) -> LowerBoundReport:
    """Certified lower bound for the algebraic entropy of an automorphism.

    With |.| the absolute value of the valuation and P the character of the
    representation, log |tr f^n(x_1)(P)| equals |f^n(x_1)|_cyc log p once the
    length formula holds. The rate is the trailing-window slope of
    log of that quantity.

    Note
    ----
    Iterates of cyclically reduced length up to `certify_up_to` have their
    trace valuation checked by exact matrix products. Longer iterates use the
    length formula directly.

    Arguments
    ---------
    f : Automorphism
        The automorphism.
    rep : RepresentationSpec
        A representation of the same rank.
    n_max : int
        The maximal number of iterations.
    budget : int
        The largest reduced word length kept while iterating.
    certify_up_to : int
        The longest iterate checked by exact products.

    Returns
    -------
    LowerBoundReport
        The rate together with the length sequence.

    Raises
    ------
    CertificationError
        If some checked iterate violates the length formula.
    """
    if f.rank != rep.rank:
        raise ValueError(
            "automorphism has rank %d but the representation has rank %d."
            % (f.rank, rep.rank)
        )
    seed = Word.generator(1, f.rank)
    orbit = iterate_image(f, seed, n_max, budget)
    lengths = []
    certified = 0
    for n, w in enumerate(orbit):
        core, length = cyclic_reduce(w)
        lengths.append(length)
        if length <= certify_up_to:
            nu = rep.valuation.valuation(rep.image(core).trace())
            if nu != -length:
                raise CertificationError(
                    "iterate %d of length %d has trace valuation %s."
                    % (n, length, nu)
                )
            certified += 1
    values = [length * log(rep.valuation.p) for length in lengths]
    report = LowerBoundReport(
        rate=trailing_rate(values),
        lengths=lengths,
        n_used=len(orbit) - 1,
        budget_hit=len(orbit) - 1 < n_max,
        certified=certified,
        prime=rep.valuation.describe(),
        tolerance=window_tolerance(values),
    )
    logger.info(
        "certified lower bound %.4f with %d checked iterates.", report.rate, certified
    )
    return report
