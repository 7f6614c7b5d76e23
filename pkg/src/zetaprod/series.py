"""Series summation with the package-wide truncation policy.

Every infinite series in the package is summed by :func:`sum_series`:
terms are accumulated until three consecutive terms satisfy
``|term| <= tol * max(1, |partial|)``, with a hard cap on the number of
terms.  The error estimate is twice the magnitude of the first omitted
term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_TOL = 1e-13
MAX_TERMS = 100_000
# Distance below which a parameter counts as an integer (routing decisions).
DEGENERACY_TOL = 1e-8


@dataclass(frozen=True)
class SeriesValue:
    """Result of summing a series.

    Attributes
    ----------
    value : complex
        The (partial) sum.
    abs_error_estimate : float
        Heuristic bound on ``|value - exact|``.
    terms_used : int
        Number of terms that went into ``value``.
    converged : bool
        False when the term cap was hit or the terms stopped decreasing.
    """

    value: complex
    abs_error_estimate: float
    terms_used: int
    converged: bool

    def __add__(self, other: "SeriesValue | complex | float") -> "SeriesValue":
        if isinstance(other, SeriesValue):
            return SeriesValue(
                self.value + other.value,
                self.abs_error_estimate + other.abs_error_estimate,
                self.terms_used + other.terms_used,
                self.converged and other.converged,
            )
        return SeriesValue(self.value + other, self.abs_error_estimate,
                           self.terms_used, self.converged)

    __radd__ = __add__

    def __neg__(self) -> "SeriesValue":
        return SeriesValue(-self.value, self.abs_error_estimate,
                           self.terms_used, self.converged)

    def __sub__(self, other: "SeriesValue | complex | float") -> "SeriesValue":
        return self + (-other)

    def __rsub__(self, other: complex | float) -> "SeriesValue":
        return (-self) + other

    def scaled(self, factor: complex) -> "SeriesValue":
        return SeriesValue(self.value * factor,
                           self.abs_error_estimate * abs(factor),
                           self.terms_used, self.converged)

    @property
    def real(self) -> float:
        return self.value.real


def sum_series(terms: Iterable[complex], tol: float = DEFAULT_TOL,
               max_terms: int = MAX_TERMS) -> SeriesValue:
    """Sum ``terms`` under the package truncation policy.

    A finite iterable that runs out is an exact sum (error estimate 0).
    Non-finite terms stop the summation with ``converged=False``.
    """
    it: Iterator[complex] = iter(terms)
    total = 0j
    # Kahan-style compensation keeps long slowly-decaying sums honest.
    comp = 0j
    small_run = 0
    n = 0
    for term in it:
        term = complex(term)
        if not cmath.isfinite(term):
            return SeriesValue(total, math.inf, n, False)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        n += 1
        scale = max(1.0, abs(total))
        if abs(term) <= tol * scale:
            small_run += 1
        else:
            small_run = 0
        if small_run >= 3:
            nxt = next(it, None)
            if nxt is None:
                return SeriesValue(total, 0.0, n, True)
            err = 2.0 * abs(complex(nxt))
            if err <= tol * scale:
                return SeriesValue(total, err, n, True)
            # the peeked term is not small: fold it in and keep going
            total += complex(nxt)
            n += 1
            small_run = 0
        if n >= max_terms:
            return SeriesValue(total, 2.0 * abs(term), n, False)
    return SeriesValue(total, 0.0, n, True)


def near_integer(z: complex, tol: float = DEGENERACY_TOL) -> bool:
    z = complex(z)
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def nearest_int(z: complex) -> int:
    return int(round(complex(z).real))


def is_nonpositive_integer(z: complex, tol: float = 0.0) -> bool:
    """Exact test by default; pass ``tol`` for the routing threshold."""
    z = complex(z)
    if tol == 0.0:
        return z.imag == 0.0 and z.real <= 0 and z.real == math.floor(z.real)
    return near_integer(z, tol) and round(z.real) <= 0
