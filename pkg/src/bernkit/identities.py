"""Direct evaluation of the symmetric Bernoulli identities and grid reports.

Residuals here are computed by direct summation with exact arithmetic,
never through the umbral proof engine: the two pipelines are independent
implementations of the same zero, which is the core of the test strategy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import BernoulliCache
from .numkit import Rational, binomial
from .umbral import IdentityParams

__all__ = [
    "IDENTITY_NAMES",
    "SPECIAL_CASE_NAMES",
    "IdentityReport",
    "bind_special_case",
    "carlitz_residual",
    "generalized_parts",
    "generalized_residual",
    "special_case",
    "verify_grid",
]

SPECIAL_CASE_NAMES = (
    "carlitz",
    "momiyama",
    "kaneko_seidel",
    "chen_sun",
    "zekiri_bencherif",
)

IDENTITY_NAMES = ("carlitz", "generalized") + SPECIAL_CASE_NAMES[1:]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of verifying one identity over a parameter grid."""

    identity_name: str
    grid: str
    checked: int
    failures: tuple[tuple[IdentityParams, Rational], ...]
    all_zero: bool


def carlitz_residual(m: int, n: int, cache: BernoulliCache) -> Rational:
    """Residual of the symmetric binomial identity

        (-1)^m sum_{k=0}^{m} C(m,k) B_{n+k} - (-1)^n sum_{k=0}^{n} C(n,k) B_{m+k}

    which is 0 for all m, n >= 0.  Requires the cache to reach m+n.
    """
    if m < 0 or n < 0:
        raise ValueError("parameters must be >= 0, got m=%d, n=%d" % (m, n))
    cache.require(m + n)
    first = Fraction(0)
    for k in range(m + 1):
        b = cache[n + k]
        if b:
            first += binomial(m, k) * b
    second = Fraction(0)
    for k in range(n + 1):
        b = cache[m + k]
        if b:
            second += binomial(n, k) * b
    return (-1) ** m * first - (-1) ** n * second


def generalized_parts(
    params: IdentityParams, cache: BernoulliCache
) -> tuple[Rational, Rational]:
    """The two signed partial sums whose difference is the generalized residual:

        (-1)^m     sum_{k=0}^{m+q} C(m+q,k) C(n+q+k,q) B_{n+k}
        (-1)^(n+q) sum_{k=0}^{n+q} C(n+q,k) C(m+q+k,q) B_{m+k}

    Requires the cache to reach m+n+q.
    """
    m, n, q = params.m, params.n, params.q
    cache.require(m + n + q)
    first = Fraction(0)
    for k in range(m + q + 1):
        b = cache[n + k]
        if b:
            first += binomial(m + q, k) * binomial(n + q + k, q) * b
    second = Fraction(0)
    for k in range(n + q + 1):
        b = cache[m + k]
        if b:
            second += binomial(n + q, k) * binomial(m + q + k, q) * b
    return ((-1) ** m * first, (-1) ** (n + q) * second)


def generalized_residual(params: IdentityParams, cache: BernoulliCache) -> Rational:
    """Residual of the generalized identity: 0 for all m, n, q >= 0.

    Coincides with carlitz_residual(m, n) when q = 0.
    """
    first, second = generalized_parts(params, cache)
    return first - second


def _require_params(name: str, given: dict[str, int | None], wanted: tuple[str, ...]):
    for key in wanted:
        if given[key] is None:
            raise ValueError("special case %r requires parameter %s" % (name, key))
    for key, value in given.items():
        if key not in wanted and value is not None:
            raise ValueError(
                "special case %r does not take parameter %s" % (name, key)
            )


def bind_special_case(
    name: str, *, m: int | None = None, n: int | None = None, q: int | None = None
) -> IdentityParams:
    """Map a named special case and its free parameters to a full (m, n, q)."""
    given = {"m": m, "n": n, "q": q}
    if name == "carlitz":
        _require_params(name, given, ("m", "n"))
        return IdentityParams(m, n, 0)
    if name == "momiyama":
        _require_params(name, given, ("m", "n"))
        return IdentityParams(m, n, 1)
    if name == "kaneko_seidel":
        _require_params(name, given, ("n",))
        return IdentityParams(n, n, 1)
    if name == "chen_sun":
        _require_params(name, given, ("n",))
        return IdentityParams(n, n, 3)
    if name == "zekiri_bencherif":
        _require_params(name, given, ("n", "q"))
        if q % 2 == 0:
            raise ValueError("zekiri_bencherif requires odd q, got q=%d" % q)
        return IdentityParams(n, n, q)
    raise ValueError(
        "unknown special case %r; expected one of: %s"
        % (name, ", ".join(SPECIAL_CASE_NAMES))
    )


def special_case(
    name: str,
    cache: BernoulliCache,
    *,
    m: int | None = None,
    n: int | None = None,
    q: int | None = None,
) -> Rational:
    """Evaluate a named historical identity as a binding of the generalized one."""
    return generalized_residual(bind_special_case(name, m=m, n=n, q=q), cache)


def verify_grid(
    identity_name: str,
    m_max: int,
    n_max: int,
    q_max: int,
    cache: BernoulliCache,
) -> IdentityReport:
    """Evaluate the named residual at every grid point, lexicographically.

    The cache is pre-extended to the grid's maximum index before evaluation,
    so the call never fails on a short cache; failures are reported in
    discovery order.
    """
    if m_max < 0 or n_max < 0 or q_max < 0:
        raise ValueError(
            "grid bounds must be >= 0, got m_max=%d, n_max=%d, q_max=%d"
            % (m_max, n_max, q_max)
        )
    if identity_name == "carlitz":
        grid = "m=0..%d, n=0..%d" % (m_max, n_max)
        cache.extend(m_max + n_max)
        points = [
            (IdentityParams(m, n, 0), None)
            for m in range(m_max + 1)
            for n in range(n_max + 1)
        ]
        evaluate = lambda p: carlitz_residual(p.m, p.n, cache)
    elif identity_name == "generalized":
        grid = "m=0..%d, n=0..%d, q=0..%d" % (m_max, n_max, q_max)
        cache.extend(m_max + n_max + q_max)
        points = [
            (IdentityParams(m, n, q), None)
            for m in range(m_max + 1)
            for n in range(n_max + 1)
            for q in range(q_max + 1)
        ]
        evaluate = lambda p: generalized_residual(p, cache)
    elif identity_name == "momiyama":
        grid = "m=0..%d, n=0..%d" % (m_max, n_max)
        cache.extend(m_max + n_max + 1)
        points = [
            (IdentityParams(m, n, 1), {"m": m, "n": n})
            for m in range(m_max + 1)
            for n in range(n_max + 1)
        ]
        evaluate = None
    elif identity_name == "kaneko_seidel":
        grid = "n=0..%d" % n_max
        cache.extend(2 * n_max + 1)
        points = [(IdentityParams(n, n, 1), {"n": n}) for n in range(n_max + 1)]
        evaluate = None
    elif identity_name == "chen_sun":
        grid = "n=0..%d" % n_max
        cache.extend(2 * n_max + 3)
        points = [(IdentityParams(n, n, 3), {"n": n}) for n in range(n_max + 1)]
        evaluate = None
    elif identity_name == "zekiri_bencherif":
        grid = "n=0..%d, q odd in 1..%d" % (n_max, q_max)
        cache.extend(2 * n_max + q_max)
        points = [
            (IdentityParams(n, n, q), {"n": n, "q": q})
            for n in range(n_max + 1)
            for q in range(1, q_max + 1, 2)
        ]
        evaluate = None
    else:
        raise ValueError(
            "unknown identity %r; expected one of: %s"
            % (identity_name, ", ".join(IDENTITY_NAMES))
        )

    failures: list[tuple[IdentityParams, Rational]] = []
    for params, binding in points:
        if evaluate is not None:
            residual = evaluate(params)
        else:
            residual = special_case(identity_name, cache, **binding)
        if residual != 0:
            failures.append((params, residual))
    return IdentityReport(
        identity_name=identity_name,
        grid=grid,
        checked=len(points),
        failures=tuple(failures),
        all_zero=not failures,
    )
