"""Constants and default budgets used across the code base."""

VARIABLES = ("x", "y", "z")
"""Fricke coordinates (tr X, tr Y, tr XY) of the SL2 character variety of F2."""

GROWTH_N_MAX = 50
WORD_BUDGET = 10**7
"""Largest reduced word length kept while iterating an automorphism."""

EALG_N_MAX = 30
TERM_BUDGET = 5_000
"""Stored monomials after which symbolic iteration of a trace map stops."""

POLY_EPSILON = 0.01
"""Per-iteration growth below which a trailing window counts as polynomial."""

MATRIX_TOLERANCE = 1e-6

DEFAULT_PRIME = 101
DEFAULT_S = ((2, 1), (1, 1))
GAUSSIAN_PRIME = (5, 2, 1)
CERTIFY_MAX_LENGTH = 512
"""Longest orbit word whose trace valuation is checked by exact products."""

ORACLE_BOUND = 5
"""Entries of random integer SL2 matrices are drawn from [-ORACLE_BOUND, ORACLE_BOUND]."""

COMPARE_ATOL = 0.05
COMPARE_RTOL = 0.10
SEED = 42
SCHEMA_VERSION = 1
