"""Simple init file for tracedyn."""

__version__ = "0.1.0"

from tracedyn.logger import logger
from tracedyn.words import Word, parse_word, reduce, cyclic_reduce
from tracedyn.automorphism import Automorphism, apply, compose, iterate_image
from tracedyn.growth import estimate_rho, growth_sequence
from tracedyn.polynomial import IntPolynomial
from tracedyn.traces import trace_polynomial
from tracedyn.dynamics import TraceMap, degree_sequence, induced_trace_map
from tracedyn.certificate import build_representation, lower_bound_rate
from tracedyn.data import load_fixture
from tracedyn import (
    certificate,
    data,
    dynamics,
    growth,
    padic,
    util,
    workflows,
)
from tracedyn.workflows.compare import compare


__all__ = (
    "Automorphism",
    "IntPolynomial",
    "TraceMap",
    "Word",
    "apply",
    "build_representation",
    "certificate",
    "compare",
    "compose",
    "cyclic_reduce",
    "data",
    "degree_sequence",
    "dynamics",
    "estimate_rho",
    "growth",
    "growth_sequence",
    "induced_trace_map",
    "iterate_image",
    "load_fixture",
    "logger",
    "lower_bound_rate",
    "padic",
    "parse_word",
    "reduce",
    "trace_polynomial",
    "util",
    "workflows",
)
