"""Umbral proof engine for the generalized symmetric Bernoulli identity.

The engine works with the linear functional sending x^k to B_k.  That
functional annihilates every polynomial that is odd in (x + 1/2), because
B_{2k+1}(1/2) = 0.  For parameters (m, n, q) a witness polynomial is built
whose reflection antisymmetry about -1/2 survives q-fold differentiation;
applying the functional to the q-th derivative therefore yields an exact
zero, and expanding the same derivative in monomials yields the identity's
double-binomial sums.  replay_proof records every intermediate object so
callers and tests can check each step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .bernoulli import BernoulliCache
from .numkit import Polynomial, Rational, binomial

__all__ = [
    "IdentityParams",
    "ProofTrace",
    "antisymmetry_residual",
    "bernoulli_functional",
    "closed_form_expansion",
    "replay_proof",
    "witness_polynomial",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdentityParams:
    """Parameter triple (m, n, q) of the generalized identity; all >= 0."""

    m: int
    n: int
    q: int

    def __post_init__(self) -> None:
        for name in ("m", "n", "q"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    "%s must be a nonnegative integer, got %r" % (name, value)
                )


@dataclass(frozen=True)
class ProofTrace:
    """Every intermediate object of one proof replay.

    For valid parameters both residual polynomials are zero, the derivative
    is odd in (x + 1/2), the closed-form expansion matches, and the
    functional value is 0.  The trace records; it never asserts.
    """

    params: IdentityParams
    witness: Polynomial
    witness_residual: Polynomial
    witness_derivative: Polynomial
    derivative_residual: Polynomial
    odd_in_shifted: bool
    expansion_match: bool
    functional_value: Rational

    @property
    def holds(self) -> bool:
        """True when every recorded check certifies the identity."""
        return (
            not self.witness_residual
            and not self.derivative_residual
            and self.odd_in_shifted
            and self.expansion_match
            and self.functional_value == 0
        )


def bernoulli_functional(p: Polynomial, cache: BernoulliCache) -> Rational:
    """Apply the linear functional x^k -> B_k: returns sum_i coeff_i * B_i.

    Raises CacheTooShortError when the cache does not reach deg(p).
    """
    cache.require(p.degree)
    total = Fraction(0)
    for i, c in enumerate(p.coeffs):
        if c:
            total += c * cache[i]
    return total


def _shifted_binomial_power(shift: int, exponent: int) -> Polynomial:
    # x^shift * (1+x)^exponent, assembled directly from binomial coefficients.
    coeffs = [0] * shift + [binomial(exponent, k) for k in range(exponent + 1)]
    return Polynomial(coeffs)


def witness_polynomial(params: IdentityParams) -> Polynomial:
    """The antisymmetric witness for parameters (m, n, q):

        (-1)^(m+q) x^(n+q) (1+x)^(m+q) - (-1)^n x^(m+q) (1+x)^(n+q)

    Degree at most m+n+2q; identically zero when m = n and q is even,
    because the two terms then coincide.
    """
    m, n, q = params.m, params.n, params.q
    first = _shifted_binomial_power(n + q, m + q)
    second = _shifted_binomial_power(m + q, n + q)
    return (-1) ** (m + q) * first - (-1) ** n * second


def antisymmetry_residual(
    p: Polynomial, q_parity: Literal["even", "odd"]
) -> Polynomial:
    """The residual p(-1/2 + x) + (-1)^q p(-1/2 - x) for q of the given parity.

    Zero exactly when p is antisymmetric (even parity: symmetric up to sign
    flip of the argument) under reflection about -1/2.
    """
    if q_parity not in ("even", "odd"):
        raise ValueError("q_parity must be 'even' or 'odd', got %r" % (q_parity,))
    left = p.compose_affine(1, -_HALF)  # p(-1/2 + x)
    right = p.compose_affine(-1, -_HALF)  # p(-1/2 - x)
    return left + right if q_parity == "even" else left - right


def closed_form_expansion(params: IdentityParams) -> Polynomial:
    """Monomial expansion of the differentiated witness, up to sign and q!:

        (-1)^m  sum_{k=0}^{m+q} C(m+q,k) C(n+q+k,q) x^(n+k)
      - (-1)^(n+q) sum_{k=0}^{n+q} C(n+q,k) C(m+q+k,q) x^(m+k)

    Equals (-1)^q/q! times the q-th derivative of the witness polynomial;
    applying the Bernoulli functional to it gives the generalized residual
    verbatim.
    """
    m, n, q = params.m, params.n, params.q
    coeffs = [Fraction(0)] * (m + n + q + 1)
    sign_first = (-1) ** m
    for k in range(m + q + 1):
        coeffs[n + k] += sign_first * binomial(m + q, k) * binomial(n + q + k, q)
    sign_second = (-1) ** (n + q)
    for k in range(n + q + 1):
        coeffs[m + k] -= sign_second * binomial(n + q, k) * binomial(m + q + k, q)
    return Polynomial(coeffs)


def replay_proof(params: IdentityParams, cache: BernoulliCache) -> ProofTrace:
    """Replay the proof for one parameter triple, recording every step.

    The cache must reach deg of the differentiated witness (m+n+q suffices);
    a shorter cache raises CacheTooShortError.  No assertions are made here:
    callers and tests judge the recorded trace.
    """
    q = params.q
    witness = witness_polynomial(params)
    witness_residual = antisymmetry_residual(
        witness, "even" if q % 2 == 0 else "odd"
    )
    derivative = witness.derivative(q)
    # Differentiating the antisymmetry relation q times flips the reflection
    # sign q times, so the derivative satisfies the even-parity relation.
    derivative_residual = antisymmetry_residual(derivative, "even")
    shifted = derivative.rebase(_HALF)
    odd_in_shifted = all(
        not shifted.coeffs[i] for i in range(0, len(shifted.coeffs), 2)
    )
    expansion_match = (
        math.factorial(q) * closed_form_expansion(params)
        == (-1) ** q * derivative
    )
    functional_value = bernoulli_functional(derivative, cache)
    return ProofTrace(
        params=params,
        witness=witness,
        witness_residual=witness_residual,
        witness_derivative=derivative,
        derivative_residual=derivative_residual,
        odd_in_shifted=odd_in_shifted,
        expansion_match=expansion_match,
        functional_value=functional_value,
    )
