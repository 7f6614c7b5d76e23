"""Hurwitz zeta, the auxiliary function zeta_1, and the Wilton expansions."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Iterator

import numpy as np

from ._euler_maclaurin import em_sum
from .errors import DomainError, PoleError
from .series import DEFAULT_TOL, MAX_TERMS, SeriesValue, is_nonpositive_integer, sum_series
from .special import gamma, riemann_zeta, zeta_regular_part

__all__ = [
    "hurwitz_zeta", "zeta1", "zeta_minus_one", "wilton_zeta_shift",
    "zeta_one_minus", "poch_hurwitz_seq",
]

# For Re a < 0 Euler-Maclaurin loses digits to cancellation in the direct
# sum when x is small.  Below _FOURIER_BELOW the Fourier expansion is used;
# in between, a Taylor series about x = 1 with Riemann zeta coefficients.
_FOURIER_BELOW = -4.0
_TAYLOR_TERMS = 64
_TAYLOR_XMAX = 4.0


def _fourier_unit(a: complex, x: np.ndarray) -> np.ndarray:
    """zeta(a, x) for Re a < 0 and x in (0, 1] via the Hurwitz Fourier series."""
    s = 1.0 - a
    sigma = s.real
    n_terms = int(min(20_000, math.ceil((1e17 / (sigma - 1.0)) ** (1.0 / (sigma - 1.0)))))
    n = np.arange(1, n_terms + 1, dtype=float)
    amp = np.exp(-s * np.log(n))                       # n^-s
    half = 0.5 * math.pi * s
    # cos(pi s/2 - 2 pi n x) = Re-part-free complex form via exponentials
    phase = 2.0 * math.pi * np.outer(x, n)
    cos_terms = 0.5 * (np.exp(1j * (half - phase)) + np.exp(-1j * (half - phase)))
    total = cos_terms @ amp
    pref = 2.0 * gamma(s) * cmath.exp(-s * math.log(2.0 * math.pi))
    return pref * total


def _hurwitz_fourier(a: complex, x: np.ndarray) -> np.ndarray:
    m = np.ceil(x) - 1.0                               # x = f + m, f in (0, 1]
    f = x - m
    out = _fourier_unit(a, f)
    for i in np.nonzero(m > 0)[0]:
        k = np.arange(int(m[i]), dtype=float) + f[i]
        out[i] -= np.exp(-a * np.log(k)).sum()
    return out


@lru_cache(maxsize=256)
def _taylor_coeffs(a: complex) -> np.ndarray:
    # zeta(a, 1 - y) = sum_k (a)_k / k! zeta(a + k) y^k
    coef = np.empty(_TAYLOR_TERMS, dtype=complex)
    fact = 1.0
    for k, pz in zip(range(_TAYLOR_TERMS), poch_hurwitz_seq(a)):
        if k:
            fact *= k
        coef[k] = pz / fact
    return coef


def _hurwitz_taylor(a: complex, x: np.ndarray) -> np.ndarray:
    coef = _taylor_coeffs(a)
    # shift x into [0.5, 1.5) with zeta(a, x) = x^-a + zeta(a, x + 1)
    m = np.floor(x - 0.5)
    f = x - m
    y = 1.0 - f
    out = np.zeros(x.shape, dtype=complex)
    for c in coef[::-1]:
        out = out * y + c
    for i in np.nonzero(m != 0)[0]:
        if m[i] < 0:
            out[i] += np.exp(-a * np.log(x[i]))
        else:
            k = np.arange(int(m[i]), dtype=float) + f[i]
            out[i] -= np.exp(-a * np.log(k)).sum()
    return out


def hurwitz_zeta(a: complex, x):
    """Hurwitz zeta(a, x) for complex a != 1 and real x > 0.

    ``x`` may be a scalar or an array; the result has the same shape.

    >>> abs(hurwitz_zeta(2, 1) - math.pi**2 / 6) < 1e-15
    True
    """
    a = complex(a)
    if a == 1:
        raise PoleError("hurwitz_zeta has a pole at a = 1")
    xa = np.asarray(x, dtype=float)
    scalar = xa.ndim == 0
    xa = np.atleast_1d(xa)
    if xa.size and not np.all(xa > 0):
        raise DomainError("hurwitz_zeta needs x > 0")
    if a.real >= 0 or is_nonpositive_integer(a):
        out = em_sum(a, xa)
    elif a.real <= _FOURIER_BELOW:
        out = _hurwitz_fourier(a, xa)
    else:
        out = np.empty(xa.shape, dtype=complex)
        near = xa < _TAYLOR_XMAX
        if near.any():
            out[near] = _hurwitz_taylor(a, xa[near])
        if (~near).any():
            out[~near] = em_sum(a, xa[~near])
    out = np.asarray(out, dtype=complex)
    return complex(out[0]) if scalar else out


def zeta1(a: complex, x):
    """zeta_1(a, x) = zeta(a, x) - x^(-a) = zeta(a, x + 1), finite at x = 0."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0):
        raise DomainError("zeta1 needs x >= 0")
    return hurwitz_zeta(a, xa + 1.0)


def zeta_minus_one(s: complex) -> complex:
    """zeta(s) - 1 without cancellation for large Re s."""
    return hurwitz_zeta(s, 2.0)


def poch_hurwitz_seq(c: complex, x: float = 1.0) -> Iterator[complex]:
    """Yield (c)_i * zeta(c + i, x) for i = 0, 1, 2, ...

    Where c + i sits on the pole the product is replaced by its limit
    (c)_{i-1}, so for c = -m the term i = m + 1 is (-1)^m m!.  Near the
    pole the zero of (c)_i and the pole of zeta are combined analytically.
    Pass ``x=2`` to get (c)_i * (zeta(c + i) - 1).
    """
    c = complex(c)
    poch = 1.0 + 0j            # (c)_i
    poch_prev = 0j             # (c)_{i-1}
    i = 0
    while True:
        s = c + i
        eps = s - 1.0
        if i > 0 and abs(eps) < 0.5:
            # (c)_{i-1} * eps * zeta(1 + eps, x)
            yield poch_prev * (1.0 + eps * zeta_regular_part(eps, x))
        elif s == 1:
            raise PoleError("zeta(c, x) has a pole at c = 1")
        elif poch == 0:
            yield 0j
        elif x == 1.0:
            yield poch * riemann_zeta(s)
        else:
            yield poch * hurwitz_zeta(s, x)
        poch_prev = poch
        poch = poch * s
        i += 1


def wilton_zeta_shift(a: complex, b: float, x: complex, tol: float = DEFAULT_TOL,
                      max_terms: int = MAX_TERMS) -> SeriesValue:
    """sum_k (a)_k / k! * zeta(a + k, b) * x^k, the expansion of zeta(a, b - x).

    ``b`` is a positive real shift.  The series needs |x| < b; outside that
    disc the partial sum is returned with ``converged=False``.
    """
    b = float(b)
    if b <= 0:
        raise DomainError("wilton_zeta_shift needs b > 0")
    x = complex(x)
    inside = abs(x) < b
    cap = max_terms if inside else min(max_terms, 200)

    def terms():
        xk = 1.0 + 0j
        fact = 1.0
        for k, pz in enumerate(poch_hurwitz_seq(a, b)):
            if k:
                xk *= x
                fact *= k
            yield pz * xk / fact

    res = sum_series(terms(), tol, cap)
    if not inside:
        return SeriesValue(res.value, math.inf,
                           res.terms_used, False)
    return res


def zeta_one_minus(a: complex, x: complex, tol: float = DEFAULT_TOL,
                   max_terms: int = MAX_TERMS) -> SeriesValue:
    """Taylor expansion of zeta(a, 1 - x) about x = 0, valid for |x| < 1."""
    return wilton_zeta_shift(a, 1.0, x, tol, max_terms)
