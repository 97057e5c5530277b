"""Spectral radius of an automorphism from cyclically reduced word growth."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd

from .automorphism import Automorphism, iterate_image
from .constants import GROWTH_N_MAX, MATRIX_TOLERANCE, WORD_BUDGET
from .logger import logger
from .util import trailing_rate, window_tolerance
from .words import ALPHABET, Word, cyclic_length, cyclic_reduce
from .workflows.core import workflow


class TrivialSeedError(ValueError):
    """Raised when a seed word is conjugate to the identity."""


class ConvergenceError(ArithmeticError):
    """Raised when the spectral radius of a matrix can not be computed."""


@dataclass(frozen=True)
class IntMatrix:
    """A square matrix with arbitrary precision integer entries."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("integer matrices must be square.")
        object.__setattr__(self, "rows", rows)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dimension))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)


@dataclass
class GrowthEstimate:
    """Estimated spectral radius of an automorphism.

    Attributes
    ----------
    per_seed_rates : dict
        Maps each seed word to its estimated growth rate in nats/iteration.
    rho_estimate : float
        The maximal rate over all seeds.
    iterations_used : int
        The largest number of iterations any seed reached.
    budget_hit : bool
        Whether the word budget stopped the iteration of some seed.
    lower_bound_abelian : float
        Log of the spectral radius of the action on homology.
    tolerance : float
        Change of the maximal rate when the last iterate is dropped.
    lengths : dict
        The cyclically reduced length sequence of each seed.
    """

    per_seed_rates: Dict[str, float]
    rho_estimate: float
    iterations_used: int
    budget_hit: bool
    lower_bound_abelian: float
    tolerance: float = 0.0
    lengths: Dict[str, List[int]] = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict:
        return {
            "seeds": dict(self.per_seed_rates),
            "rho": self.rho_estimate,
            "n_used": self.iterations_used,
            "budget_hit": self.budget_hit,
            "abelian_lower_bound": self.lower_bound_abelian,
            "tolerance": self.tolerance,
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per seed with its rate and final length."""
        return pd.DataFrame(
            {
                "seed": list(self.per_seed_rates),
                "rate": list(self.per_seed_rates.values()),
                "n_used": [len(self.lengths[s]) - 1 for s in self.per_seed_rates],
                "final_length": [self.lengths[s][-1] for s in self.per_seed_rates],
            }
        )


def growth_sequence(
    f: Automorphism, seed: Word, n_max: int = GROWTH_N_MAX, budget: int = WORD_BUDGET
) -> List[int]:
    """Cyclically reduced lengths along the orbit of a seed word.

    Parameters
    ----------
    f : Automorphism
        The automorphism to iterate.
    seed : Word
        The starting word. Only its conjugacy class matters.
    n_max : int
        The maximal number of iterations.
    budget : int
        The largest reduced word length to keep (see `iterate_image`).

    Returns
    -------
    list of int
        L_k = |f^k(seed)|_red for k = 0...m with m <= n_max.

    Raises
    ------
    TrivialSeedError
        If the seed is conjugate to the identity.
    """
    core, length = cyclic_reduce(seed)
    if length == 0:
        raise TrivialSeedError("trivial seed `%s`." % seed)
    orbit = iterate_image(f, core, n_max, budget)
    return [cyclic_length(w) for w in orbit]


def rate_from_lengths(lengths: Sequence[int]) -> float:
    """Growth rate of a length sequence over the trailing window (see `trailing_rate`)."""
    return trailing_rate(lengths)


def _seed_lengths(args):
    f, seed, n_max, budget = args
    return growth_sequence(f, seed, n_max, budget)


def abelianization(f: Automorphism) -> IntMatrix:
    """The action of an automorphism on the abelianization Z^rank.

    Column i holds the exponent sums of the image of generator i.
    """
    cols = []
    for w in f.images:
        cols.append(
            [w.letters.count(c) - w.letters.count(c.upper()) for c in ALPHABET[: f.rank]]
        )
    return IntMatrix(tuple(zip(*cols)))


def spectral_radius_matrix(M: IntMatrix, tol: float = MATRIX_TOLERANCE) -> float:
    """Spectral radius of an integer matrix.

    Note
    ----
    Eigenvalues are computed with `numpy.linalg.eigvals`. Defective matrices
    such as Dehn twists only get their double eigenvalue up to roughly the
    square root of machine precision, so radii within `tol` of 1 are
    returned as exactly 1.0.

    Arguments
    ---------
    M : IntMatrix
        The matrix.
    tol : positive float
        Tolerance for snapping the radius to 1.

    Returns
    -------
    float
        The largest absolute value of an eigenvalue.
    """
    if tol <= 0:
        raise ValueError("`tol` must be positive.")
    try:
        eig = np.linalg.eigvals(M.to_numpy())
    except np.linalg.LinAlgError as error:
        raise ConvergenceError("eigenvalues did not converge: %s" % error) from error
    radius = float(np.max(np.abs(eig)))
    if not np.isfinite(radius):
        raise ConvergenceError("eigenvalue computation returned %s." % radius)
    if abs(radius - 1.0) <= tol:
        radius = 1.0
    return radius


def estimate_rho(
    f: Automorphism,
    seeds: Sequence[Word] = None,
    n_max: int = GROWTH_N_MAX,
    budget: int = WORD_BUDGET,
    threads: int = 1,
    progress: bool = True,
) -> GrowthEstimate:
    """Estimate the spectral radius of an automorphism.

    Note
    ----
    Rates are estimated per seed and the estimate is their maximum. Seeds
    conjugate to the identity are skipped. Nothing certifies that the seeds
    attain the supremum over the whole group.

    Arguments
    ---------
    f : Automorphism
        The automorphism.
    seeds : list of Word
        The seed words. Defaults to the generators.
    n_max : int
        The maximal number of iterations per seed.
    budget : int
        The largest reduced word length kept while iterating.
    threads : int
        How many seeds to iterate in parallel.
    progress : bool
        Whether to show a progress bar over the seeds.

    Returns
    -------
    GrowthEstimate
        Per-seed rates and their maximum.
    """
    if seeds is None:
        seeds = [Word.generator(i, f.rank) for i in range(1, f.rank + 1)]
    valid = []
    for s in seeds:
        if cyclic_length(s) == 0:
            logger.warning("skipping seed `%s` which is conjugate to the identity.", s)
        else:
            valid.append(s)
    if not valid:
        raise TrivialSeedError("all seeds are conjugate to the identity.")
    results = workflow(
        _seed_lengths,
        [(f, s, n_max, budget) for s in valid],
        threads=threads,
        description="Iterating seeds",
        progress=progress,
    )
    lengths = {str(s): ls for s, ls in zip(valid, results)}
    rates = {s: rate_from_lengths(ls) for s, ls in lengths.items()}
    best = max(rates, key=rates.get)
    radius = spectral_radius_matrix(abelianization(f))
    estimate = GrowthEstimate(
        per_seed_rates=rates,
        rho_estimate=rates[best],
        iterations_used=max(len(ls) - 1 for ls in lengths.values()),
        budget_hit=any(len(ls) - 1 < n_max for ls in lengths.values()),
        lower_bound_abelian=log(radius),
        tolerance=window_tolerance(lengths[best]),
        lengths=lengths,
    )
    logger.info(
        "estimated rho = %.4f from %d seeds (%d iterations).",
        estimate.rho_estimate,
        len(valid),
        estimate.iterations_used,
    )
    return estimate
