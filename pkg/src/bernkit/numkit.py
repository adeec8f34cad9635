"""Exact scalar and polynomial algebra over arbitrary-precision rationals.

The scalar type everywhere is :class:`fractions.Fraction`, aliased as
``Rational``: every value is kept in canonical reduced form (positive
denominator, gcd(|numerator|, denominator) = 1), so equality is structural
and "exactly zero" means exactly zero.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

# Anything accepted where a Rational is expected.  Floats are deliberately
# not accepted: see as_rational().
Scalar = Union[int, Fraction, str]

__all__ = [
    "Polynomial",
    "Rational",
    "as_rational",
    "binomial",
    "format_rational",
    "parse_rational",
]


def as_rational(value: Scalar) -> Fraction:
    """Coerce to an exact Fraction; floats are refused to preserve exactness."""
    if isinstance(value, float):
        raise TypeError(
            "refusing float %r: build an exact Fraction instead" % (value,)
        )
    return Fraction(value)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 outside 0 <= k <= n.

    Computed by the multiplicative formula; each intermediate division is
    exact because out*(n-i) is a product of i+1 consecutive integers.
    """
    if n < 0:
        raise ValueError("binomial requires n >= 0, got n=%d" % n)
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def format_rational(value: Scalar, *, always_fraction: bool = False) -> str:
    """Render a rational as a reduced ``p/q`` string.

    Integer values render bare unless ``always_fraction`` forces ``p/1``.
    """
    value = as_rational(value)
    if value.denominator == 1 and not always_fraction:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


_RATIONAL_RE = re.compile(r"^(-?\d+)/(\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse a strict canonical ``p/q`` string (reduced, q >= 1).

    Rejects anything that does not round-trip byte-for-byte, e.g. ``2/4``,
    ``-0/1``, ``01/2`` or ``1/0``.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError("not a p/q rational: %r" % (text,))
    numerator, denominator = int(match.group(1)), int(match.group(2))
    if denominator == 0:
        raise ValueError("zero denominator: %r" % (text,))
    value = Fraction(numerator, denominator)
    if format_rational(value, always_fraction=True) != text:
        raise ValueError("rational not in canonical reduced form: %r" % (text,))
    return value


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` holds the coefficient of the i-th power.  Trailing zeros
    are stripped on construction, so the zero polynomial has an empty
    coefficient tuple and every nonzero polynomial ends in a nonzero
    coefficient.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        """Coefficient of the i-th power (0 beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Polynomial(%r)" % (list(self.coeffs),)

    def __str__(self) -> str:
        # Ascending-power sparse form, zero terms omitted: "1/6 - 1/2*x + 1*x^2".
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            magnitude = format_rational(abs(c))
            if i == 0:
                term = magnitude
            elif i == 1:
                term = "%s*x" % magnitude
            else:
                term = "%s*x^%d" % (magnitude, i)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self, order: int = 1) -> "Polynomial":
        """Formal derivative, iterated ``order`` times (order 0 is identity)."""
        if order < 0:
            raise ValueError("derivative order must be >= 0, got %d" % order)
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(cs[i] * i for i in range(1, len(cs)))
        return Polynomial(cs)

    def compose_affine(self, a: Scalar, b: Scalar) -> "Polynomial":
        """The polynomial p(a*x + b), computed exactly by Horner steps."""
        a = as_rational(a)
        b = as_rational(b)
        res: list[Fraction] = []
        for c in reversed(self.coeffs):
            # res <- res*(a*x + b) + c
            nxt = [Fraction(0)] * (len(res) + 1)
            for i, r in enumerate(res):
                if r:
                    nxt[i + 1] += r * a
                    nxt[i] += r * b
            nxt[0] += c
            res = nxt
        return Polynomial(res)

    def __call__(self, x: Scalar) -> Fraction:
        """Exact value at x (Horner evaluation)."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rebase(self, c: Scalar) -> "Polynomial":
        """Coefficients d with p(x) = sum_i d_i (x + c)^i.

        Substituting t = x + c gives p(t - c), so this is exactly
        ``compose_affine(1, -c)``; index parity in the result tells whether
        p is even/odd in (x + c).
        """
        return self.compose_affine(Fraction(1), -as_rational(c))
