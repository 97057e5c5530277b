"""Holds utility functions for other modules."""

from math import ceil, log, log1p
from typing import Sequence

import numpy as np

from .constants import POLY_EPSILON, SEED


def get_rng(seed=SEED):
    """Get the numpy random generator all randomized checks draw from."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def trailing_window(m: int) -> int:
    """Length k = ceil(m / 3) of the trailing window used for rates."""
    return max(1, ceil(m / 3))


def trailing_rate(values: Sequence[float], poly_epsilon: float = POLY_EPSILON) -> float:
    """Estimate an exponential growth rate from a positive sequence.

    The rate is the slope log(v_m / v_(m-k)) / k over the trailing window
    k = ceil(m / 3). Windows that grow by less than a factor of
    1 + `poly_epsilon` * k are treated as polynomial growth with rate 0.

    Parameters
    ----------
    values : sequence of positive numbers
        The sequence v_0, ..., v_m. Arbitrary precision integers are fine.
    poly_epsilon : float
        Per-iteration growth below which the window counts as sub-exponential.

    Returns
    -------
    float
        The estimated rate in nats per iteration, 0.0 for sequences with a
        single entry.
    """
    m = len(values) - 1
    if m < 1:
        return 0.0
    k = trailing_window(m)
    if values[m] <= 0 or values[m - k] <= 0:
        raise ValueError("growth rates need a positive sequence.")
    gain = log(values[m]) - log(values[m - k])
    if gain < log1p(poly_epsilon * k):
        return 0.0
    return gain / k


def window_tolerance(values: Sequence[float], poly_epsilon: float = POLY_EPSILON) -> float:
    """Change of the trailing rate when the last entry is dropped.

    Used as a convergence indicator reported next to rate estimates.
    """
    if len(values) < 3:
        return 0.0
    return abs(trailing_rate(values, poly_epsilon) - trailing_rate(values[:-1], poly_epsilon))


def within_tolerance(a: float, b: float, atol: float, rtol: float) -> bool:
    """Check |a - b| <= max(atol, rtol * max(|a|, |b|))."""
    return abs(a - b) <= max(atol, rtol * max(abs(a), abs(b)))
