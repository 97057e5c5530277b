"""Compare word growth, degree growth and the p-adic lower bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence, Union

from ..automorphism import Automorphism
from ..certificate import LowerBoundReport, build_representation, lower_bound_rate
from ..constants import (
    COMPARE_ATOL,
    COMPARE_RTOL,
    DEFAULT_PRIME,
    DEFAULT_S,
    EALG_N_MAX,
    GROWTH_N_MAX,
    TERM_BUDGET,
    WORD_BUDGET,
)
from ..dynamics import DegreeSequence, degree_sequence
from ..growth import GrowthEstimate, estimate_rho
from ..logger import logger
from ..padic import ValuationSpec
from ..util import within_tolerance
from .results import Report


@dataclass
class ComparisonReport:
    """The three entropy estimates of an automorphism and their agreement.

    Attributes
    ----------
    name : str
        The name of the automorphism.
    growth : GrowthEstimate
        Spectral radius from word growth.
    degrees : DegreeSequence
        Algebraic entropy from the degrees of the induced trace map.
    lower_bound : LowerBoundReport
        Certified lower bound from the p-adic representation.
    atol, rtol : float
        The tolerance max(atol, rtol * max(|a|, |b|)) for agreement.
    """

    name: str
    growth: GrowthEstimate
    degrees: DegreeSequence
    lower_bound: LowerBoundReport
    atol: float = COMPARE_ATOL
    rtol: float = COMPARE_RTOL
    checks: Dict[str, bool] = field(init=False, default_factory=dict)

    def __post_init__(self):
        rho, ealg, low = self.rates.values()
        self.checks = {
            "rho_vs_ealg": within_tolerance(rho, ealg, self.atol, self.rtol),
            "rho_vs_lower_bound": within_tolerance(rho, low, self.atol, self.rtol),
            "lower_bound_below_ealg": low <= ealg + self.atol,
        }

    @property
    def rates(self) -> Dict[str, float]:
        return {
            "rho": self.growth.rho_estimate,
            "ealg": self.degrees.ealg_estimate,
            "lower_bound": self.lower_bound.rate,
        }

    @property
    def gaps(self) -> Dict[str, float]:
        rho, ealg, low = self.rates.values()
        return {
            "rho_ealg": abs(rho - ealg),
            "rho_lower_bound": abs(rho - low),
            "ealg_lower_bound": abs(ealg - low),
        }

    @property
    def verdict(self) -> str:
        return "pass" if all(self.checks.values()) else "fail"

    def to_report(self) -> Report:
        data = {
            "automorphism": self.name,
            "rates": self.rates,
            "gaps": self.gaps,
            "checks": self.checks,
            "tolerance": {"atol": self.atol, "rtol": self.rtol},
            "rho": self.growth.to_dict(),
            "ealg": self.degrees.to_dict(),
            "lower_bound": self.lower_bound.to_dict(),
        }
        return Report("compare", data, self.verdict)

    def save(self, path: str):
        """Save the comparison as a JSON report."""
        self.to_report().save(path)


def compare(
    f: Automorphism,
    n_max: int = GROWTH_N_MAX,
    budget: int = WORD_BUDGET,
    ealg_n_max: int = EALG_N_MAX,
    term_budget: int = TERM_BUDGET,
    prime: Union[int, ValuationSpec] = DEFAULT_PRIME,
    S: Sequence = DEFAULT_S,
    atol: float = COMPARE_ATOL,
    rtol: float = COMPARE_RTOL,
    threads: int = 1,
    progress: bool = True,
) -> ComparisonReport:
    """Run all three estimators on an automorphism of F2.

    Arguments
    ---------
    f : Automorphism
        A rank 2 automorphism.
    n_max : int
        Iterations for word growth and the lower bound.
    budget : int
        The largest reduced word length kept while iterating.
    ealg_n_max : int
        Iterates of the induced trace map.
    term_budget : int
        Stored monomials after which symbolic iteration stops.
    prime : int or ValuationSpec
        The prime of the p-adic representation.
    S : nested list
        The conjugating matrix of the representation.
    atol, rtol : float
        Absolute and relative tolerance for agreement.
    threads : int
        How many seeds to iterate in parallel.
    progress : bool
        Whether to show a progress bar while iterating seeds.

    Returns
    -------
    ComparisonReport
        The estimates, their gaps and the verdict.
    """
    if f.rank != 2:
        raise ValueError("character dynamics implemented for rank 2 only.")
    if atol <= 0 or not 0 < rtol < 1:
        raise ValueError("need atol > 0 and rtol in (0, 1).")
    growth = estimate_rho(
        f, n_max=n_max, budget=budget, threads=threads, progress=progress
    )
    degrees = degree_sequence(f, ealg_n_max, term_budget)
    rep = build_representation(f.rank, prime, S)
    lower = lower_bound_rate(f, rep, n_max, budget)
    report = ComparisonReport(
        f.name or str(f), growth, degrees, lower, atol=atol, rtol=rtol
    )
    logger.info(
        "rho = %.4f, e_alg = %.4f, lower bound = %.4f: %s.",
        growth.rho_estimate,
        degrees.ealg_estimate,
        lower.rate,
        report.verdict,
    )
    return report
