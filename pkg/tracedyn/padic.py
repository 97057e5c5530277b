"""Exact scalars over Q and Q(i) and their p-adic valuations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf, isqrt
from numbers import Rational
from typing import Tuple, Union

from sympy import isprime, multiplicity, nextprime
from sympy.ntheory import sqrt_mod

INFINITY = inf
"""Valuation of zero."""


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("`%r` is not an exact rational number." % (value,))


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i) with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _fraction(self.re))
        object.__setattr__(self, "im", _fraction(self.im))

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating point complex numbers are not exact.")
        return cls(_fraction(value), Fraction(0))

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i).")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self**-k
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return "%s%s%si" % (self.re, "+" if self.im >= 0 else "-", abs(self.im))


ExactScalar = Union[Fraction, GaussianRational]


def is_prime(n: int) -> bool:
    """Check whether n is a prime number."""
    return bool(isprime(n))


def next_prime(p: int) -> int:
    """The smallest prime larger than p."""
    return int(nextprime(p))


def two_squares(p: int) -> Tuple[int, int]:
    """Find a > b >= 1 with a^2 + b^2 = p for a prime p = 1 mod 4.

    Runs the Euclidean algorithm on p and a square root of -1 mod p and
    stops at the first remainder below sqrt(p).
    """
    if not is_prime(p) or p % 4 != 1:
        raise ValueError("%d is not a prime that splits in Z[i]." % p)
    r, s = p, int(sqrt_mod(-1, p))
    while s * s > p:
        r, s = s, r % s
    t = isqrt(p - s * s)
    return max(s, t), min(s, t)


def _int_valuation(n: int, p: int) -> int:
    return int(multiplicity(p, abs(n)))


def vp(q, p: int):
    """The p-adic valuation of a rational number.

    Arguments
    ---------
    q : int or fractions.Fraction
        The rational number.
    p : int
        A prime.

    Returns
    -------
    int or float
        The exponent of p in q, `INFINITY` for q = 0.
    """
    if not is_prime(p):
        raise ValueError("%d is not a prime." % p)
    q = _fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


@dataclass(frozen=True)
class ValuationSpec:
    """A p-adic valuation on Q or a split prime valuation on Q(i).

    Attributes
    ----------
    kind : str
        "rational-prime" or "gaussian-split-prime".
    p : int
        The rational prime.
    a, b : int
        For the Gaussian kind, the prime element a + b*i with a^2 + b^2 = p.
    """

    kind: str
    p: int
    a: int = 0
    b: int = 0

    RATIONAL = "rational-prime"
    GAUSSIAN = "gaussian-split-prime"

    def __post_init__(self):
        if self.kind not in (self.RATIONAL, self.GAUSSIAN):
            raise ValueError("unknown valuation kind `%s`." % self.kind)
        if not is_prime(self.p):
            raise ValueError("%d is not a prime." % self.p)
        if self.kind == self.GAUSSIAN and self.a**2 + self.b**2 != self.p:
            raise ValueError(
                "(%d, %d) does not satisfy a^2 + b^2 = %d." % (self.a, self.b, self.p)
            )

    @classmethod
    def rational(cls, p: int) -> ValuationSpec:
        return cls(cls.RATIONAL, p)

    @classmethod
    def gaussian(cls, p: int, a: int = None, b: int = None) -> ValuationSpec:
        if a is None or b is None:
            a, b = two_squares(p)
        return cls(cls.GAUSSIAN, p, a, b)

    @property
    def is_gaussian(self) -> bool:
        return self.kind == self.GAUSSIAN

    @property
    def prime_element(self) -> GaussianRational:
        return GaussianRational(self.a, self.b)

    def valuation(self, value):
        """Valuation of an exact scalar."""
        if self.is_gaussian:
            return gaussian_valuation(GaussianRational.coerce(value), self)
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise ValueError("the p-adic valuation on Q needs a rational number.")
            value = value.re
        return vp(value, self.p)

    def describe(self) -> str:
        if self.is_gaussian:
            return "(%d%+di)" % (self.a, self.b)
        return str(self.p)


def gaussian_valuation(z: GaussianRational, spec: ValuationSpec):
    """The valuation of an element of Q(i) at the prime (a + b*i).

    Denominators are cleared first. Since p splits, every factor p of the
    (rational) denominator contributes exactly one factor a + b*i. The
    Gaussian integer numerator is then divided by a + b*i as long as the
    division is exact.

    Returns
    -------
    int or float
        The exponent of (a + b*i) in z, `INFINITY` for z = 0.
    """
    if not spec.is_gaussian:
        raise ValueError("need a Gaussian valuation spec.")
    z = GaussianRational.coerce(z)
    if not z:
        return INFINITY
    p, a, b = spec.p, spec.a, spec.b
    d = z.re.denominator * z.im.denominator // gcd(z.re.denominator, z.im.denominator)
    x = int(z.re * d)
    y = int(z.im * d)
    k = 0
    # (x + y*i) / (a + b*i) = (x + y*i)(a - b*i) / p
    while True:
        u, v = x * a + y * b, y * a - x * b
        if u % p or v % p:
            break
        x, y = u // p, v // p
        k += 1
    return k - _int_valuation(d, p)
