"""Sparse multivariate polynomials with arbitrary precision integer coefficients.

Exponent vectors are packed into a single integer with a fixed number of bits
per variable. Multiplying monomials then becomes an integer addition which
keeps the quadratic inner loops of multiplication and substitution fast.
"""

from __future__ import annotations

from math import inf
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import symengine

from .constants import VARIABLES

SHIFT = 32
MASK = (1 << SHIFT) - 1

Exponents = Tuple[int, ...]


def _pack(exponents: Exponents) -> int:
    key = 0
    for e in exponents:
        if e < 0 or e > MASK:
            raise ValueError("exponents must be in [0, 2^%d)." % SHIFT)
        key = (key << SHIFT) | e
    return key


def _unpack(key: int, n: int) -> Exponents:
    return tuple((key >> (SHIFT * (n - 1 - i))) & MASK for i in range(n))


def _mul_terms(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    if len(a) > len(b):
        a, b = b, a
    out: Dict[int, int] = {}
    get = out.get
    items = list(b.items())
    for ka, ca in a.items():
        for kb, cb in items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _add_terms(a: Dict[int, int], b: Dict[int, int], sign: int = 1) -> Dict[int, int]:
    out = dict(a)
    get = out.get
    for k, c in b.items():
        out[k] = get(k, 0) + sign * c
    return {k: c for k, c in out.items() if c}


def _order_key(exponents: Exponents):
    """Largest single exponent, then total degree, then the exponent vector."""
    return (max(exponents, default=0), sum(exponents), exponents)


class IntPolynomial:
    """A sparse polynomial with integer coefficients.

    Instances are treated as immutable values. No zero coefficients are
    stored, and the zero polynomial has an empty term map and degree -inf.

    Attributes
    ----------
    variables : tuple of str
        The ordered variable names.
    terms : dict
        Maps exponent vectors to their (nonzero) coefficients.
    """

    __slots__ = ("variables", "_terms", "_degree")

    def __init__(
        self,
        terms: Optional[Mapping[Exponents, int]] = None,
        variables: Sequence[str] = VARIABLES,
    ):
        self.variables = tuple(variables)
        n = len(self.variables)
        packed: Dict[int, int] = {}
        for exps, coef in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(
                    "exponent vector %s does not match variables %s."
                    % (exps, self.variables)
                )
            if coef:
                key = _pack(exps)
                packed[key] = packed.get(key, 0) + int(coef)
        self._terms = {k: c for k, c in packed.items() if c}
        self._degree = None

    @classmethod
    def _from_packed(cls, packed: Dict[int, int], variables: Tuple[str, ...]):
        poly = cls.__new__(cls)
        poly.variables = variables
        poly._terms = packed
        poly._degree = None
        return poly

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = VARIABLES) -> IntPolynomial:
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = VARIABLES) -> IntPolynomial:
        """The polynomial consisting of a single variable."""
        variables = tuple(variables)
        if name not in variables:
            raise ValueError("`%s` is not one of %s." % (name, variables))
        exps = tuple(int(v == name) for v in variables)
        return cls({exps: 1}, variables)

    @classmethod
    def generators(cls, variables: Sequence[str] = VARIABLES) -> List[IntPolynomial]:
        return [cls.variable(v, variables) for v in variables]

    @property
    def terms(self) -> Dict[Exponents, int]:
        n = len(self.variables)
        return {_unpack(k, n): c for k, c in self._terms.items()}

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        """Maximal total degree of a term, -inf for the zero polynomial."""
        if self._degree is None:
            n = len(self.variables)
            self._degree = max(
                (sum(_unpack(k, n)) for k in self._terms), default=-inf
            )
        return self._degree

    def sorted_terms(self) -> List[Tuple[Exponents, int]]:
        """Terms in the deterministic serialization order."""
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def _check(self, other: IntPolynomial):
        if self.variables != other.variables:
            raise ValueError(
                "incompatible variables %s and %s." % (self.variables, other.variables)
            )

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial._from_packed(
            _add_terms(self._terms, other._terms), self.variables
        )

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial._from_packed(
            _add_terms(self._terms, other._terms, -1), self.variables
        )

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial._from_packed(
            {k: -c for k, c in self._terms.items()}, self.variables
        )

    def __mul__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial._from_packed(
            _mul_terms(self._terms, other._terms), self.variables
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("polynomials only have nonnegative powers.")
        result = IntPolynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.variables)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __repr__(self):
        return "<IntPolynomial %s>" % self

    def __str__(self):
        return to_text(self)

    def substitute(
        self, values: Sequence[IntPolynomial], cache: Optional[dict] = None
    ) -> IntPolynomial:
        """Substitute polynomials for the variables.

        Parameters
        ----------
        values : list of IntPolynomial
            One polynomial per variable, all over the same variables.
        cache : dict, optional
            Powers of `values` computed so far. Pass the same dict when
            substituting the same values into several polynomials.

        Returns
        -------
        IntPolynomial
            The composed polynomial over the variables of `values`.
        """
        if len(values) != len(self.variables):
            raise ValueError(
                "need %d values, got %d." % (len(self.variables), len(values))
            )
        target = values[0].variables
        for v in values:
            if v.variables != target:
                raise ValueError("substituted values need common variables.")
        if cache is None:
            cache = {}
        n = len(self.variables)

        def power(i: int, e: int) -> Dict[int, int]:
            if (i, e) not in cache:
                if e == 1:
                    cache[(i, e)] = values[i]._terms
                else:
                    # reuse the largest cached lower power
                    lower = max(
                        (k for (j, k) in cache if j == i and k < e), default=0
                    )
                    base = power(i, lower) if lower else {_pack((0,) * len(target)): 1}
                    for _ in range(e - lower):
                        base = _mul_terms(base, values[i]._terms)
                    cache[(i, e)] = base
            return cache[(i, e)]

        total: Dict[int, int] = {}
        one = {_pack((0,) * len(target)): 1}
        for key, coef in self._terms.items():
            exps = _unpack(key, n)
            factors = [power(i, e) for i, e in enumerate(exps) if e]
            factors.sort(key=len)
            prod = one
            for fac in factors:
                prod = _mul_terms(prod, fac)
            get = total.get
            for k, c in prod.items():
                total[k] = get(k, 0) + coef * c
        return IntPolynomial._from_packed(
            {k: c for k, c in total.items() if c}, tuple(target)
        )

    def evaluate(self, point: Sequence):
        """Evaluate exactly at a point.

        Parameters
        ----------
        point : sequence of exact numbers
            One value per variable (int, fractions.Fraction or any other
            exact number type supporting + and *).

        Returns
        -------
        The value in the arithmetic of the point entries, 0 for the zero
        polynomial.
        """
        if len(point) != len(self.variables):
            raise ValueError(
                "point has %d entries for %d variables."
                % (len(point), len(self.variables))
            )
        n = len(self.variables)
        powers: Dict[Tuple[int, int], object] = {}
        total = 0
        for key, coef in self._terms.items():
            value = coef
            for i, e in enumerate(_unpack(key, n)):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = point[i] ** e
                    value = value * powers[(i, e)]
            total = total + value
        return total

    def to_json(self) -> List[list]:
        """Term list form [[exponents, coefficient], ...] in serialization order."""
        return [[list(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(
        cls, data: Iterable, variables: Sequence[str] = VARIABLES
    ) -> IntPolynomial:
        return cls({tuple(e): int(c) for e, c in data}, variables)

    def to_symengine(self):
        """Convert to a symengine expression."""
        syms = [symengine.Symbol(v) for v in self.variables]
        expr = symengine.Integer(0)
        for exps, coef in self.terms.items():
            term = symengine.Integer(coef)
            for s, e in zip(syms, exps):
                if e:
                    term = term * s**e
            expr = expr + term
        return expr

    @classmethod
    def from_symengine(cls, expr, variables: Sequence[str] = VARIABLES) -> IntPolynomial:
        """Read an integer polynomial from a symengine expression."""
        variables = tuple(variables)
        expr = symengine.expand(expr)
        terms: Dict[Exponents, int] = {}
        parts = expr.args if isinstance(expr, symengine.Add) else (expr,)
        for part in parts:
            coef = 1
            exps = [0] * len(variables)
            factors = part.args if isinstance(part, symengine.Mul) else (part,)
            for factor in factors:
                if isinstance(factor, symengine.Integer):
                    coef *= int(factor)
                elif isinstance(factor, symengine.Symbol):
                    exps[_index(str(factor), variables)] += 1
                elif isinstance(factor, symengine.Pow):
                    base, e = factor.args
                    if not isinstance(base, symengine.Symbol) or not (
                        isinstance(e, symengine.Integer) and int(e) >= 0
                    ):
                        raise ValueError("`%s` is not a polynomial term." % factor)
                    exps[_index(str(base), variables)] += int(e)
                else:
                    raise ValueError(
                        "`%s` is not an integer polynomial term." % factor
                    )
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coef
        return cls(terms, variables)

    @classmethod
    def from_text(cls, text: str, variables: Sequence[str] = VARIABLES) -> IntPolynomial:
        """Parse polynomial text such as "x^2*z - x*y - z"."""
        try:
            expr = symengine.sympify(text.replace("^", "**"))
        except Exception as error:
            raise ValueError("could not parse `%s`: %s" % (text, error)) from error
        return cls.from_symengine(expr, variables)


def _index(name: str, variables: Tuple[str, ...]) -> int:
    if name not in variables:
        raise ValueError("unknown variable `%s`, expected one of %s." % (name, variables))
    return variables.index(name)


def _monomial(exps: Exponents, variables: Tuple[str, ...]) -> str:
    return "*".join(
        v if e == 1 else "%s^%d" % (v, e) for v, e in zip(variables, exps) if e
    )


def to_text(p: IntPolynomial) -> str:
    """Human readable form with sorted monomials, e.g. "x^2*z - x*y - z"."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    out = []
    for i, (exps, coef) in enumerate(terms):
        mono = _monomial(exps, p.variables)
        size = abs(coef)
        if not mono:
            body = str(size)
        elif size == 1:
            body = mono
        else:
            body = "%d*%s" % (size, mono)
        if i == 0:
            out.append(("-" if coef < 0 else "") + body)
        else:
            out.append(("- " if coef < 0 else "+ ") + body)
    return " ".join(out)


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_degree(p: IntPolynomial):
    """Total degree, -inf for the zero polynomial."""
    return p.degree()


def evaluate(p: IntPolynomial, point: Sequence):
    """Evaluate a polynomial exactly at a point."""
    return p.evaluate(point)
