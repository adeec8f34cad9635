"""The umbral functional, the witness polynomial, and proof replay."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bernkit.bernoulli import BernoulliCache, CacheTooShortError, bernoulli_polynomial
from bernkit.numkit import Polynomial
from bernkit.umbral import (
    IdentityParams,
    antisymmetry_residual,
    bernoulli_functional,
    closed_form_expansion,
    replay_proof,
    witness_polynomial,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=8)
polynomials = st.lists(rationals, max_size=21).map(Polynomial)

HALF = F(1, 2)
X_PLUS_HALF = Polynomial([HALF, 1])


@pytest.fixture(scope="module")
def cache():
    return BernoulliCache().extend(120)


def witness_oracle(m, n, q):
    """Direct expansion of the witness with math.comb on {power: coeff} dicts."""
    out = {}
    for k in range(m + q + 1):
        i = n + q + k
        out[i] = out.get(i, 0) + (-1) ** (m + q) * math.comb(m + q, k)
    for k in range(n + q + 1):
        i = m + q + k
        out[i] = out.get(i, 0) - (-1) ** n * math.comb(n + q, k)
    coeffs = [F(0)] * (m + n + 2 * q + 1)
    for i, c in out.items():
        coeffs[i] = F(c)
    return Polynomial(coeffs)


# -------------------------------------------------------------- functional


def test_functional_examples(cache):
    assert bernoulli_functional(Polynomial([1]), cache) == 1
    assert bernoulli_functional(Polynomial([0, 1]), cache) == F(-1, 2)
    assert bernoulli_functional(X_PLUS_HALF**3, cache) == 0


def test_functional_on_zero_polynomial():
    empty = BernoulliCache()
    assert bernoulli_functional(Polynomial(), empty) == 0


def test_functional_cache_too_short():
    cache4 = BernoulliCache().extend(4)
    with pytest.raises(CacheTooShortError):
        bernoulli_functional(Polynomial([0] * 5 + [1]), cache4)


@given(polynomials, polynomials, rationals, rationals)
def test_functional_linearity(p, r, a, b):
    cache = test_functional_linearity.cache
    lhs = bernoulli_functional(a * p + b * r, cache)
    rhs = a * bernoulli_functional(p, cache) + b * bernoulli_functional(r, cache)
    assert lhs == rhs


test_functional_linearity.cache = BernoulliCache().extend(20)


def test_functional_kills_odd_half_shifts(cache):
    for k in range(26):
        assert bernoulli_functional(X_PLUS_HALF ** (2 * k + 1), cache) == 0


def test_functional_of_shift_powers_is_midpoint_value(cache):
    # L((x+1/2)^j) equals B_j evaluated at 1/2, for every j, odd or even.
    for j in range(31):
        lhs = bernoulli_functional(X_PLUS_HALF**j, cache)
        rhs = bernoulli_polynomial(j, cache)(HALF)
        assert lhs == rhs


# ----------------------------------------------------------------- params


def test_identity_params_validation():
    IdentityParams(0, 0, 0)
    with pytest.raises(ValueError):
        IdentityParams(-1, 0, 0)
    with pytest.raises(ValueError):
        IdentityParams(0, 0, -3)


# ---------------------------------------------------------------- witness


def test_witness_examples():
    assert witness_polynomial(IdentityParams(0, 0, 0)) == Polynomial()
    assert witness_polynomial(IdentityParams(1, 0, 0)) == Polynomial([-1, -2])
    assert witness_polynomial(IdentityParams(0, 0, 1)) == Polynomial([0, -2, -2])


def test_witness_matches_direct_expansion():
    for m in range(5):
        for n in range(5):
            for q in range(4):
                assert witness_polynomial(IdentityParams(m, n, q)) == witness_oracle(
                    m, n, q
                )


def test_witness_degree_bound_and_degenerate_cases():
    for m in range(6):
        for n in range(6):
            for q in range(5):
                p = witness_polynomial(IdentityParams(m, n, q))
                assert p.degree <= m + n + 2 * q
                if m == n and q % 2 == 0:
                    assert p == Polynomial()


# ----------------------------------------------------------- antisymmetry


def test_antisymmetry_residual_examples():
    assert antisymmetry_residual(Polynomial(), "even") == Polynomial()
    assert antisymmetry_residual(Polynomial(), "odd") == Polynomial()
    # x^2 with odd parity: (x-1/2)^2 - (x+1/2)^2 = -2x
    assert antisymmetry_residual(Polynomial([0, 0, 1]), "odd") == Polynomial([0, -2])


def test_antisymmetry_residual_rejects_bad_parity():
    with pytest.raises(ValueError):
        antisymmetry_residual(Polynomial([1]), "both")


def test_witness_satisfies_antisymmetry():
    for m in range(6):
        for n in range(6):
            for q in range(5):
                p = witness_polynomial(IdentityParams(m, n, q))
                parity = "even" if q % 2 == 0 else "odd"
                assert antisymmetry_residual(p, parity) == Polynomial()


# ------------------------------------------------------------ closed form


def test_closed_form_examples():
    assert closed_form_expansion(IdentityParams(0, 0, 0)) == Polynomial()
    assert closed_form_expansion(IdentityParams(1, 0, 0)) == witness_polynomial(
        IdentityParams(1, 0, 0)
    )
    params = IdentityParams(1, 1, 1)
    lhs = closed_form_expansion(params)
    rhs = -1 * witness_polynomial(params).derivative(1)
    assert lhs == rhs


def test_closed_form_matches_scaled_derivative():
    for m in range(6):
        for n in range(6):
            for q in range(5):
                params = IdentityParams(m, n, q)
                lhs = math.factorial(q) * closed_form_expansion(params)
                rhs = (-1) ** q * witness_polynomial(params).derivative(q)
                assert lhs == rhs


# ----------------------------------------------------------------- replay


def test_replay_degenerate_case(cache):
    trace = replay_proof(IdentityParams(0, 0, 0), cache)
    assert trace.witness == Polynomial()
    assert trace.witness_residual == Polynomial()
    assert trace.derivative_residual == Polynomial()
    assert trace.functional_value == 0
    assert trace.holds


def test_replay_named_examples(cache):
    trace = replay_proof(IdentityParams(2, 1, 0), cache)
    assert trace.functional_value == 0
    assert trace.holds

    trace = replay_proof(IdentityParams(2, 1, 3), cache)
    assert trace.functional_value == 0
    assert trace.odd_in_shifted
    assert trace.holds


def test_replay_cache_too_short():
    # (4,3,2) has a nonzero derivative of degree 4+3+2 = 9, beyond the cache.
    with pytest.raises(CacheTooShortError):
        replay_proof(IdentityParams(4, 3, 2), BernoulliCache().extend(3))


def test_replay_small_grid_certifies_everything(cache):
    for m in range(7):
        for n in range(7):
            for q in range(4):
                trace = replay_proof(IdentityParams(m, n, q), cache)
                assert trace.witness_residual == Polynomial()
                assert trace.derivative_residual == Polynomial()
                assert trace.odd_in_shifted
                assert trace.expansion_match
                assert trace.functional_value == 0
                assert trace.holds


@settings(max_examples=40, deadline=None)
@given(polynomials)
def test_functional_annihilates_odd_rebased_polynomials(p):
    # Build an odd-in-(x+1/2) polynomial from p's coefficients, then check
    # that the functional kills it (the engine's key lemma).
    cache = test_functional_annihilates_odd_rebased_polynomials.cache
    odd = Polynomial()
    for i, c in enumerate(p.coeffs):
        odd = odd + Polynomial([c]) * X_PLUS_HALF ** (2 * i + 1)
    assert bernoulli_functional(odd, cache) == 0


test_functional_annihilates_odd_rebased_polynomials.cache = BernoulliCache().extend(
    50
)
