"""Bernoulli numbers and polynomials over exact rationals.

Three structurally independent algorithms produce the number sequence: the
defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, coefficient extraction
from the generating series z/(e^z - 1), and the Akiyama-Tanigawa triangle.
The sign convention is fixed by the generating series, so B_1 = -1/2.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable

from .numkit import Polynomial, Scalar, as_rational, binomial, format_rational, parse_rational
from .series import bernoulli_series_at

__all__ = [
    "METHODS",
    "BernoulliCache",
    "CacheFormatError",
    "CacheTooShortError",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_sequence",
]


class CacheTooShortError(ValueError):
    """A Bernoulli value beyond the populated cache range was requested."""


class CacheFormatError(ValueError):
    """A persisted cache file violates the line format or the cache invariants."""


def _recurrence_step(values: list[Fraction]) -> Fraction:
    """B_n from B_0..B_{n-1} via sum_{k=0}^{n} C(n+1,k) B_k = 0, n = len(values)."""
    n = len(values)
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    c = 1  # running C(n+1, k)
    for k in range(n):
        if values[k]:
            acc += c * values[k]
        c = c * (n + 1 - k) // (k + 1)
    return -acc / (n + 1)


def _recurrence_sequence(n_max: int) -> list[Fraction]:
    """B_0..B_n_max by the defining recurrence (the canonical method)."""
    values: list[Fraction] = []
    for _ in range(n_max + 1):
        values.append(_recurrence_step(values))
    return values


def _series_sequence(n_max: int) -> list[Fraction]:
    """B_0..B_n_max as n! times the coefficients of z/(e^z - 1)."""
    series = bernoulli_series_at(Fraction(0), n_max)
    values = []
    factorial = 1
    for i, c in enumerate(series.coeffs):
        values.append(c * factorial)
        factorial *= i + 1
    return values


def _akiyama_tanigawa_sequence(n_max: int) -> list[Fraction]:
    """B_0..B_n_max from the Akiyama-Tanigawa triangle.

    The triangle transform of 1/(m+1) yields the B_1 = +1/2 convention;
    negating the odd-index entries converts to B_1 = -1/2 (only the n = 1
    entry is nonzero among odd indices).
    """
    row: list[Fraction] = []
    heads: list[Fraction] = []
    for m in range(n_max + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        heads.append(row[0])
    return [-b if i % 2 else b for i, b in enumerate(heads)]


_SEQUENCE_METHODS = {
    "recurrence": _recurrence_sequence,
    "series": _series_sequence,
    "akiyama_tanigawa": _akiyama_tanigawa_sequence,
}

METHODS = tuple(_SEQUENCE_METHODS)


def bernoulli_sequence(n_max: int, method: str = "recurrence") -> list[Fraction]:
    """B_0..B_n_max by the named method; all methods return identical values."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0, got %d" % n_max)
    try:
        compute = _SEQUENCE_METHODS[method]
    except KeyError:
        raise ValueError(
            "unknown method %r; expected one of: %s" % (method, ", ".join(METHODS))
        ) from None
    return compute(n_max)


def bernoulli_number(n: int, method: str = "recurrence") -> Fraction:
    """B_n.  Computes the whole prefix; use a BernoulliCache for tables."""
    return bernoulli_sequence(n, method)[n]


def _check_invariants(values: list[Fraction]) -> None:
    if values and values[0] != 1:
        raise CacheFormatError("entry 0 must be 1, got %s" % format_rational(values[0]))
    if len(values) > 1 and values[1] != Fraction(-1, 2):
        raise CacheFormatError(
            "entry 1 must be -1/2, got %s" % format_rational(values[1])
        )
    for n in range(3, len(values), 2):
        if values[n]:
            raise CacheFormatError(
                "entry %d must be 0, got %s" % (n, format_rational(values[n]))
            )


class BernoulliCache:
    """Append-only table of B_0..B_max, grown by the defining recurrence.

    Populate with :meth:`extend` in a single-writer phase, then share the
    cache read-only; once computed an entry never changes.
    """

    def __init__(self, values: Iterable[Scalar] = ()):
        self._values = [as_rational(v) for v in values]
        _check_invariants(self._values)

    @property
    def max_index(self) -> int:
        """Largest populated index; -1 for an empty cache."""
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("Bernoulli index must be >= 0, got %d" % n)
        if n >= len(self._values):
            raise CacheTooShortError(
                "cache holds B_0..B_%d but B_%d was requested" % (self.max_index, n)
            )
        return self._values[n]

    def require(self, n: int) -> None:
        """Raise CacheTooShortError unless the cache reaches index n."""
        if n > self.max_index:
            raise CacheTooShortError(
                "cache holds B_0..B_%d but B_%d is needed" % (self.max_index, n)
            )

    def extend(self, new_max: int) -> "BernoulliCache":
        """Populate entries up to new_max; existing entries are untouched."""
        for _ in range(len(self._values), new_max + 1):
            self._values.append(_recurrence_step(self._values))
        return self

    def save(self, path: str | os.PathLike) -> None:
        """Write one ``n<TAB>p/q`` record per entry, ascending n, LF-terminated."""
        lines = [
            "%d\t%s\n" % (n, format_rational(v, always_fraction=True))
            for n, v in enumerate(self._values)
        ]
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.writelines(lines)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "BernoulliCache":
        """Read and validate a persisted cache.

        Raises CacheFormatError on malformed lines, gaps, out-of-order
        indices, non-canonical rationals, or invariant violations.
        """
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
        return cls(_parse_cache_text(text))


def _parse_cache_text(text: str) -> list[Fraction]:
    if not text.strip():
        raise CacheFormatError("cache file is empty")
    values: list[Fraction] = []
    for lineno, line in enumerate(text.splitlines()):
        parts = line.split("\t")
        if len(parts) != 2:
            raise CacheFormatError(
                "line %d: expected 'n<TAB>p/q', got %r" % (lineno + 1, line)
            )
        index_text, value_text = parts
        if index_text != str(lineno):
            raise CacheFormatError(
                "line %d: expected index %d, got %r (gap or disorder)"
                % (lineno + 1, lineno, index_text)
            )
        try:
            value = parse_rational(value_text)
        except ValueError as exc:
            raise CacheFormatError("line %d: %s" % (lineno + 1, exc)) from None
        values.append(value)
    return values


def bernoulli_polynomial(n: int, cache: BernoulliCache) -> Polynomial:
    """B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}: degree n, leading coefficient 1.

    Extends the cache to index n if needed (single-writer phase only).
    """
    if n < 0:
        raise ValueError("polynomial index must be >= 0, got %d" % n)
    cache.extend(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        b = cache[k]
        if b:
            coeffs[n - k] = binomial(n, k) * b
    return Polynomial(coeffs)
