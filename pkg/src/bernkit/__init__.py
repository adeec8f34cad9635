"""Exact-arithmetic toolkit for Bernoulli numbers and polynomials, with an
umbral proof-replay engine and grid certification of symmetric Bernoulli
identities.  All arithmetic is over arbitrary-precision rationals; every
verified identity is an exact zero, never a small float.
"""

from .bernoulli import (
    METHODS,
    BernoulliCache,
    CacheFormatError,
    CacheTooShortError,
    bernoulli_number,
    bernoulli_polynomial,
    bernoulli_sequence,
)
from .identities import (
    IDENTITY_NAMES,
    SPECIAL_CASE_NAMES,
    IdentityReport,
    bind_special_case,
    carlitz_residual,
    generalized_parts,
    generalized_residual,
    special_case,
    verify_grid,
)
from .numkit import Polynomial, Rational, binomial, format_rational, parse_rational
from .series import TruncatedSeries, bernoulli_series_at, series_exp
from .umbral import (
    IdentityParams,
    ProofTrace,
    antisymmetry_residual,
    bernoulli_functional,
    closed_form_expansion,
    replay_proof,
    witness_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "METHODS",
    "IDENTITY_NAMES",
    "SPECIAL_CASE_NAMES",
    "BernoulliCache",
    "CacheFormatError",
    "CacheTooShortError",
    "IdentityParams",
    "IdentityReport",
    "Polynomial",
    "ProofTrace",
    "Rational",
    "TruncatedSeries",
    "antisymmetry_residual",
    "bernoulli_functional",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_sequence",
    "bernoulli_series_at",
    "bind_special_case",
    "binomial",
    "carlitz_residual",
    "closed_form_expansion",
    "format_rational",
    "generalized_parts",
    "generalized_residual",
    "parse_rational",
    "replay_proof",
    "series_exp",
    "special_case",
    "verify_grid",
    "witness_polynomial",
]
