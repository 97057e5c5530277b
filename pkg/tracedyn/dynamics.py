"""Induced polynomial maps on the SL2 character variety of F2 and their degrees.

The character variety of F2 is affine 3-space in the Fricke coordinates
(x, y, z) = (tr a, tr b, tr ab). An automorphism f acts on it through the
trace polynomials of f(a), f(b) and f(ab). Its algebraic entropy is the
exponential growth rate of the degrees of the iterates of that map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from .automorphism import Automorphism, apply
from .constants import EALG_N_MAX, SEED, TERM_BUDGET, VARIABLES
from .logger import logger
from .matrices import random_sl2
from .polynomial import IntPolynomial
from .traces import markov_invariant, matrix_trace, trace_point, trace_polynomial
from .util import get_rng, trailing_rate, window_tolerance
from .words import Word


class InverseMapError(ValueError):
    """Raised when a coordinate change and its inverse do not compose to the identity."""


@dataclass(frozen=True)
class TraceMap:
    """A polynomial self-map of affine 3-space.

    Attributes
    ----------
    components : tuple of IntPolynomial
        The images of x, y and z.
    """

    components: Tuple[IntPolynomial, IntPolynomial, IntPolynomial]

    def __post_init__(self):
        components = tuple(self.components)
        if len(components) != len(VARIABLES):
            raise ValueError("trace maps need exactly %d components." % len(VARIABLES))
        for c in components:
            if not isinstance(c, IntPolynomial) or c.variables != VARIABLES:
                raise ValueError("components must be polynomials in %s." % (VARIABLES,))
            if c.is_zero:
                raise ValueError("trace map components can not be zero.")
        object.__setattr__(self, "components", components)

    @classmethod
    def identity(cls) -> TraceMap:
        return cls(tuple(IntPolynomial.generators(VARIABLES)))

    @classmethod
    def from_text(cls, texts: Sequence[str]) -> TraceMap:
        """Read a map from polynomial text such as ["x", "y", "z + x^2"]."""
        return cls(tuple(IntPolynomial.from_text(t, VARIABLES) for t in texts))

    @property
    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    @property
    def n_terms(self) -> int:
        return sum(c.n_terms for c in self.components)

    def evaluate(self, point: Sequence) -> tuple:
        return tuple(c.evaluate(point) for c in self.components)

    def to_json(self) -> List[list]:
        return [c.to_json() for c in self.components]

    def __str__(self):
        return "(%s)" % ", ".join(str(c) for c in self.components)


def induced_trace_map(f: Automorphism) -> TraceMap:
    """The action of a rank 2 automorphism on Fricke coordinates.

    Arguments
    ---------
    f : Automorphism
        An automorphism of F2.

    Returns
    -------
    TraceMap
        The trace polynomials of f(a), f(b) and f(ab).
    """
    if f.rank != 2:
        raise ValueError("character dynamics implemented for rank 2 only.")
    ab = Word("ab", 2)
    words = list(f.images) + [apply(f, ab)]
    return TraceMap(tuple(trace_polynomial(w) for w in words))


def compose_trace_map(F: TraceMap, G: TraceMap) -> TraceMap:
    """The composition F o G, substituting the components of G into F."""
    cache: Dict = {}
    return TraceMap(tuple(c.substitute(G.components, cache) for c in F.components))


@dataclass
class DegreeSequence:
    """Degrees of the iterates of a polynomial map.

    Attributes
    ----------
    degrees : list of int
        d_n, the maximal component degree of the n-th iterate, with d_0 = 1.
    ealg_estimate : float
        Trailing-window growth rate of the degrees in nats/iteration.
    n_used : int
        The number of computed iterates.
    budget_hit : bool
        Whether the term budget stopped the iteration before `n_max`.
    terms : list of int
        Stored monomials of each iterate.
    tolerance : float
        Change of the estimate when the last iterate is dropped.
    """

    degrees: List[int]
    ealg_estimate: float
    n_used: int
    budget_hit: bool
    terms: List[int] = field(default_factory=list, repr=False)
    tolerance: float = 0.0

    def to_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "ealg": self.ealg_estimate,
            "n_used": self.n_used,
            "budget_hit": self.budget_hit,
            "tolerance": self.tolerance,
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"n": range(len(self.degrees)), "degree": self.degrees, "terms": self.terms}
        )


def trace_map_iterates(F: TraceMap, n_max: int, term_budget: int = TERM_BUDGET):
    """Yield the iterates F, F o F, ... until `n_max` or the term budget."""
    current = F
    for n in range(1, n_max + 1):
        if n > 1:
            current = compose_trace_map(F, current)
        yield n, current
        if current.n_terms > term_budget:
            break


def trace_map_degrees(
    F: TraceMap, n_max: int = EALG_N_MAX, term_budget: int = TERM_BUDGET
) -> DegreeSequence:
    """Compute the degree sequence of the iterates of a polynomial map.

    Note
    ----
    The n-th iterate is computed as F o F^(n-1). Iteration stops after the
    first iterate storing more than `term_budget` monomials, since the cost of
    the next composition grows quadratically with it.

    Arguments
    ---------
    F : TraceMap
        The map to iterate.
    n_max : positive int
        The largest iterate to compute.
    term_budget : positive int
        The number of stored monomials after which iteration stops.

    Returns
    -------
    DegreeSequence
        The degrees d_0, ..., d_m and the estimated algebraic entropy.
    """
    if n_max < 1 or term_budget < 1:
        raise ValueError("need n_max >= 1 and a positive term budget.")
    degrees = [1]
    terms = [len(VARIABLES)]
    for n, current in trace_map_iterates(F, n_max, term_budget):
        degrees.append(current.degree)
        terms.append(current.n_terms)
        logger.debug("iterate %d has degree %d and %d terms.", n, degrees[-1], terms[-1])
    budget_hit = len(degrees) - 1 < n_max
    if budget_hit:
        logger.info(
            "term budget of %d reached after %d iterates.", term_budget, len(degrees) - 1
        )
    return DegreeSequence(
        degrees=degrees,
        ealg_estimate=trailing_rate(degrees),
        n_used=len(degrees) - 1,
        budget_hit=budget_hit,
        terms=terms,
        tolerance=window_tolerance(degrees),
    )


def degree_sequence(
    f: Automorphism, n_max: int = EALG_N_MAX, term_budget: int = TERM_BUDGET
) -> DegreeSequence:
    """Estimate the algebraic entropy of the action of `f` on the character variety.

    Arguments
    ---------
    f : Automorphism
        An automorphism of F2.
    n_max : positive int
        The largest iterate to compute.
    term_budget : positive int
        The number of stored monomials after which iteration stops.

    Returns
    -------
    DegreeSequence
        The degree sequence of the induced trace map.
    """
    seq = trace_map_degrees(induced_trace_map(f), n_max, term_budget)
    logger.info(
        "estimated e_alg = %.4f from %d iterates.", seq.ealg_estimate, seq.n_used
    )
    return seq


def check_submultiplicative(degrees: Sequence[int]) -> List[Tuple[int, int]]:
    """Index pairs (n, m) violating d_(n+m) <= d_n * d_m."""
    bad = []
    for n in range(len(degrees)):
        for m in range(len(degrees) - n):
            if degrees[n + m] > degrees[n] * degrees[m]:
                bad.append((n, m))
    return bad


def preserves_markov(F: TraceMap) -> bool:
    """Whether the commutator trace x^2 + y^2 + z^2 - xyz - 2 is invariant under F."""
    kappa = markov_invariant()
    return kappa.substitute(F.components) == kappa


@dataclass
class SemiconjugacyReport:
    """Outcome of comparing the induced map against matrix products."""

    trials: int
    passed: int
    failed: int
    witnesses: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "witnesses": self.witnesses,
        }


def semiconjugacy_check(f: Automorphism, trials: int = 100, seed=SEED) -> SemiconjugacyReport:
    """Check the induced trace map on random integer SL2 representations.

    For random pairs (A, B) the map is evaluated at (tr A, tr B, tr AB) and
    compared with the traces of f(a), f(b) and f(ab) computed by exact matrix
    products.

    Arguments
    ---------
    f : Automorphism
        An automorphism of F2.
    trials : positive int
        The number of random pairs.
    seed : int or numpy.random.Generator
        Seed for drawing the matrices.

    Returns
    -------
    SemiconjugacyReport
        Pass and fail counts with the failing pairs as witnesses.
    """
    if trials < 1:
        raise ValueError("need at least one trial.")
    rng = get_rng(seed)
    F = induced_trace_map(f)
    words = list(f.images) + [apply(f, Word("ab", 2))]
    passed = 0
    witnesses = []
    for _ in range(trials):
        A, B = random_sl2(rng), random_sl2(rng)
        expected = tuple(matrix_trace(w, A, B) for w in words)
        observed = F.evaluate(trace_point(A, B))
        if observed == expected:
            passed += 1
        else:
            witnesses.append(
                {
                    "A": A.to_json(),
                    "B": B.to_json(),
                    "expected": list(expected),
                    "observed": list(observed),
                }
            )
    if witnesses:
        logger.warning("induced map disagrees with %d of %d pairs.", len(witnesses), trials)
    return SemiconjugacyReport(trials, passed, trials - passed, witnesses)


@dataclass
class EmbeddingReport:
    """Degree sequences of a map before and after a polynomial change of coordinates."""

    original: DegreeSequence
    changed: DegreeSequence

    @property
    def difference(self) -> float:
        return abs(self.original.ealg_estimate - self.changed.ealg_estimate)

    def to_dict(self) -> dict:
        return {
            "original": self.original.to_dict(),
            "changed": self.changed.to_dict(),
            "difference": self.difference,
        }


def embedding_invariance_harness(
    f: Automorphism,
    change: TraceMap,
    change_inverse: TraceMap,
    n_max: int = EALG_N_MAX,
    term_budget: int = TERM_BUDGET,
) -> EmbeddingReport:
    """Compare degree growth of the induced map in two affine embeddings.

    Arguments
    ---------
    f : Automorphism
        An automorphism of F2.
    change : TraceMap
        A polynomial automorphism C of affine 3-space.
    change_inverse : TraceMap
        Its inverse.
    n_max : positive int
        The largest iterate to compute.
    term_budget : positive int
        The number of stored monomials after which iteration stops.

    Returns
    -------
    EmbeddingReport
        Degree sequences of F and of C^-1 o F o C.

    Raises
    ------
    InverseMapError
        If `change_inverse` is not the inverse of `change`.
    """
    identity = TraceMap.identity()
    if (
        compose_trace_map(change_inverse, change) != identity
        or compose_trace_map(change, change_inverse) != identity
    ):
        raise InverseMapError(
            "%s is not the inverse of %s." % (change_inverse, change)
        )
    F = induced_trace_map(f)
    G = compose_trace_map(change_inverse, compose_trace_map(F, change))
    report = EmbeddingReport(
        trace_map_degrees(F, n_max, term_budget),
        trace_map_degrees(G, n_max, term_budget),
    )
    logger.info(
        "e_alg estimates %.4f and %.4f in the two embeddings.",
        report.original.ealg_estimate,
        report.changed.ealg_estimate,
    )
    return report
