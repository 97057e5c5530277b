"""Command line interface for tracedyn.

Reports go to stdout and logs to stderr. The exit code is 0 when a report
passes, 1 when a check fails and 2 for invalid input.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
import sys
from typing import Callable, Dict, Optional, Sequence, Tuple

from . import __version__
from .automorphism import Automorphism, load_automorphism
from .certificate import (
    build_representation,
    certify_length_formula,
    lower_bound_rate,
)
from .constants import (
    COMPARE_ATOL,
    COMPARE_RTOL,
    DEFAULT_PRIME,
    EALG_N_MAX,
    GROWTH_N_MAX,
    SEED,
    TERM_BUDGET,
    WORD_BUDGET,
)
from .data import FIXTURES, load_fixture
from .dynamics import (
    TraceMap,
    degree_sequence,
    embedding_invariance_harness,
    induced_trace_map,
    semiconjugacy_check,
)
from .growth import estimate_rho
from .logger import logger, set_verbosity
from .padic import ValuationSpec
from .traces import trace_polynomial
from .util import get_rng, within_tolerance
from .words import cyclic_words, parse_word, random_word
from .workflows.compare import compare
from .workflows.results import FORMATS, Report

EXIT_PASS, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    """Validated settings of a single invocation.

    Budgets and iteration counts left as None fall back to the defaults of
    the respective command.
    """

    command: str
    aut: Optional[str] = None
    fixture: Optional[str] = None
    word: Optional[str] = None
    n_max: Optional[int] = None
    budget: int = WORD_BUDGET
    term_budget: int = TERM_BUDGET
    prime: int = DEFAULT_PRIME
    gaussian: bool = False
    seed: int = SEED
    tol: float = COMPARE_RTOL
    atol: float = COMPARE_ATOL
    format: str = "json"
    threads: int = 1
    max_length: int = 5
    samples: int = 50
    sample_length: int = 8
    trials: int = 100
    change: Tuple[str, ...] = ("x", "y", "z + x^2")
    inverse: Tuple[str, ...] = ("x", "y", "z - x^2")
    verbose: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.n_max is not None and self.n_max < 1:
            raise ValueError("--n-max must be positive.")
        for name in ("budget", "term_budget", "threads", "max_length", "trials"):
            if getattr(self, name) < 1:
                raise ValueError("--%s must be positive." % name.replace("_", "-"))
        if self.samples < 0 or self.sample_length < 1:
            raise ValueError("need --samples >= 0 and a positive --sample-length.")
        if not 0 < self.tol < 1:
            raise ValueError("--tol must be in (0, 1), got %g." % self.tol)
        if self.atol <= 0:
            raise ValueError("--atol must be positive.")
        if self.format not in FORMATS:
            raise ValueError("unknown format `%s`." % self.format)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        values = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__}
        for key in ("change", "inverse"):
            if values.get(key) is not None:
                values[key] = tuple(values[key])
        return cls(**{k: v for k, v in values.items() if v is not None})

    def automorphism(self) -> Automorphism:
        if self.aut and self.fixture:
            raise ValueError("use either --aut or --fixture, not both.")
        if self.aut:
            return load_automorphism(self.aut)
        if self.fixture:
            return load_fixture(self.fixture)
        raise ValueError("need an automorphism, use --aut FILE or --fixture NAME.")

    def valuation(self) -> ValuationSpec:
        if self.gaussian:
            return ValuationSpec.gaussian(self.prime)
        return ValuationSpec.rational(self.prime)


def cmd_rho(config: RunConfig) -> Report:
    f = config.automorphism()
    est = estimate_rho(
        f,
        n_max=config.n_max or GROWTH_N_MAX,
        budget=config.budget,
        threads=config.threads,
        progress=False,
    )
    return Report("rho", est.to_dict(), table=est.to_frame())


def cmd_ealg(config: RunConfig) -> Report:
    f = config.automorphism()
    seq = degree_sequence(f, config.n_max or EALG_N_MAX, config.term_budget)
    return Report("ealg", seq.to_dict(), table=seq.to_frame())


def cmd_trace(config: RunConfig) -> Report:
    if config.word is None:
        raise ValueError("the trace command needs a word.")
    w = parse_word(config.word, 2)
    poly = trace_polynomial(w)
    data = {"word": str(w), "polynomial": str(poly), "terms": poly.to_json()}
    return Report("trace", data, text=str(poly))


def cmd_induce(config: RunConfig) -> Report:
    f = config.automorphism()
    F = induced_trace_map(f)
    check = semiconjugacy_check(f, config.trials, get_rng(config.seed))
    data = {
        "automorphism": f.name or str(f),
        "map": [str(c) for c in F.components],
        "terms": F.to_json(),
        "semiconjugacy": check.to_dict(),
    }
    return Report("induce", data, "pass" if check.ok else "fail", text=str(F))


def cmd_certify(config: RunConfig) -> Report:
    rank = config.automorphism().rank if (config.aut or config.fixture) else 2
    rep = build_representation(rank, config.valuation())
    rng = get_rng(config.seed)
    words = cyclic_words(rank, config.max_length)
    for _ in range(config.samples):
        length = int(rng.integers(1, config.sample_length + 1))
        words.append(random_word(rng, rank, length))
    report = certify_length_formula(
        rep, words, threads=config.threads, progress=False
    )
    data = dict(rep.to_dict(), **report.to_dict())
    return Report("certify", data, "pass" if report.ok else "fail")


def cmd_lower_bound(config: RunConfig) -> Report:
    f = config.automorphism()
    rep = build_representation(f.rank, config.valuation())
    bound = lower_bound_rate(f, rep, config.n_max or GROWTH_N_MAX, config.budget)
    data = dict(bound.to_dict(), lengths=bound.lengths)
    return Report("lower-bound", data)


def cmd_compare(config: RunConfig) -> Report:
    f = config.automorphism()
    result = compare(
        f,
        n_max=config.n_max or GROWTH_N_MAX,
        budget=config.budget,
        term_budget=config.term_budget,
        prime=config.valuation(),
        atol=config.atol,
        rtol=config.tol,
        threads=config.threads,
        progress=False,
    )
    return result.to_report()


def cmd_embed(config: RunConfig) -> Report:
    f = config.automorphism()
    change = TraceMap.from_text(config.change)
    inverse = TraceMap.from_text(config.inverse)
    report = embedding_invariance_harness(
        f, change, inverse, config.n_max or EALG_N_MAX, config.term_budget
    )
    a, b = report.original.ealg_estimate, report.changed.ealg_estimate
    ok = within_tolerance(a, b, config.atol, config.tol)
    data = dict(report.to_dict(), change=str(change), inverse=str(inverse))
    return Report("embed", data, "pass" if ok else "fail")


COMMANDS: Dict[str, Callable[[RunConfig], Report]] = {
    "rho": cmd_rho,
    "ealg": cmd_ealg,
    "trace": cmd_trace,
    "induce": cmd_induce,
    "certify": cmd_certify,
    "lower-bound": cmd_lower_bound,
    "compare": cmd_compare,
    "embed": cmd_embed,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracedyn",
        description="Word growth and trace map dynamics of free group automorphisms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--aut", help="JSON file defining the automorphism")
    common.add_argument(
        "--fixture", choices=FIXTURES, help="use a packaged automorphism instead"
    )
    common.add_argument("--n-max", dest="n_max", type=int, help="maximal iterations")
    common.add_argument(
        "--budget", type=int, help="largest reduced word length (default %d)" % WORD_BUDGET
    )
    common.add_argument(
        "--term-budget",
        dest="term_budget",
        type=int,
        help="stored monomials before symbolic iteration stops (default %d)" % TERM_BUDGET,
    )
    common.add_argument(
        "--prime", type=int, help="prime of the valuation (default %d)" % DEFAULT_PRIME
    )
    common.add_argument(
        "--gaussian",
        action="store_true",
        default=None,
        help="use a split Gaussian prime over Q(i)",
    )
    common.add_argument("--seed", type=int, help="seed for all random draws")
    common.add_argument(
        "--tol", type=float, help="relative tolerance (default %g)" % COMPARE_RTOL
    )
    common.add_argument(
        "--atol", type=float, help="absolute tolerance (default %g)" % COMPARE_ATOL
    )
    common.add_argument("--format", choices=FORMATS, help="report format")
    common.add_argument("--threads", type=int, help="parallel workers")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log progress to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("rho", parents=[common], help="spectral radius from word growth")
    sub.add_parser("ealg", parents=[common], help="algebraic entropy from degree growth")
    trace = sub.add_parser("trace", parents=[common], help="trace polynomial of a word")
    trace.add_argument("word", help="word in letters a, b, A, B")
    induce = sub.add_parser("induce", parents=[common], help="induced trace map")
    induce.add_argument("--trials", type=int, help="random representations to check")
    certify = sub.add_parser(
        "certify", parents=[common], help="check the p-adic length formula"
    )
    certify.add_argument("--max-length", dest="max_length", type=int)
    certify.add_argument("--samples", type=int)
    certify.add_argument("--sample-length", dest="sample_length", type=int)
    sub.add_parser("lower-bound", parents=[common], help="certified lower bound")
    sub.add_parser("compare", parents=[common], help="compare all three estimates")
    embed = sub.add_parser(
        "embed", parents=[common], help="degree growth under a change of coordinates"
    )
    embed.add_argument("--change", nargs=3, metavar="POLY")
    embed.add_argument("--inverse", nargs=3, metavar="POLY")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return the exit code."""
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose)
    try:
        config = RunConfig.from_args(args)
        report = COMMANDS[config.command](config)
        output = report.render(config.format)
    except (ValueError, ArithmeticError, OSError) as error:
        logger.error("%s", error)
        return EXIT_INVALID
    sys.stdout.write(output.rstrip("\n") + "\n")
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
