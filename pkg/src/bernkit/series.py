"""Truncated formal power series with exact rational coefficients.

The generating series z*e^{zx}/(e^z - 1) of the Bernoulli polynomials is
computed here as e^{zx} divided by the unit series (e^z - 1)/z, which keeps
division total on series with a nonzero constant term; it serves as an
independent oracle for Bernoulli values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .numkit import Scalar, as_rational

__all__ = ["TruncatedSeries", "bernoulli_series_at", "series_exp"]


class TruncatedSeries:
    """Formal power series kept to an explicit truncation order.

    ``coeffs`` always has length ``order + 1``: trailing zeros are retained,
    the truncation order is part of the value.  Binary operations require
    operands of equal order; there is no silent re-truncation.  Instances
    are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "TruncatedSeries(%r)" % (list(self.coeffs),)

    def _check_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                "series order mismatch: %d != %d" % (self.order, other.order)
            )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, truncated at the shared order."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Quotient c with c*other = self up to the truncation order.

        The divisor must be a unit (nonzero constant term); the quotient is
        found by forward substitution, which is exact.
        """
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_order(other)
        if not other.coeffs[0]:
            raise ZeroDivisionError("division by a series with zero constant term")
        b0 = other.coeffs[0]
        out: list[Fraction] = []
        for k in range(self.order + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                c = out[k - j]
                if c and other.coeffs[j]:
                    acc -= other.coeffs[j] * c
            out.append(acc / b0)
        return TruncatedSeries(out)

    def negate_argument(self) -> "TruncatedSeries":
        """The series of s(-z): flips the sign of every odd coefficient."""
        return TruncatedSeries(
            -c if i % 2 else c for i, c in enumerate(self.coeffs)
        )


def series_exp(a: Scalar, order: int) -> TruncatedSeries:
    """e^{a*z} to the given order: coefficient i is a^i / i!."""
    if order < 0:
        raise ValueError("truncation order must be >= 0, got %d" % order)
    a = as_rational(a)
    out = [Fraction(1)]
    for i in range(1, order + 1):
        out.append(out[-1] * a / i)
    return TruncatedSeries(out)


def _exp_minus_one_over_z(order: int) -> TruncatedSeries:
    # (e^z - 1)/z = sum_i z^i/(i+1)!, a unit series with constant term 1.
    factorial = 1
    out = []
    for i in range(order + 1):
        factorial *= i + 1
        out.append(Fraction(1, factorial))
    return TruncatedSeries(out)


def bernoulli_series_at(x: Scalar, order: int) -> TruncatedSeries:
    """Exponential generating series of Bernoulli polynomial values at x.

    Coefficient n is B_n(x)/n!; at x = 0 this yields the Bernoulli numbers
    (so B_1 = -1/2), and at x = 1/2 the series is even in z.
    """
    if order < 0:
        raise ValueError("truncation order must be >= 0, got %d" % order)
    return series_exp(x, order) / _exp_minus_one_over_z(order)
