"""Pochhammer symbols, the beta function and the Gauss function 2F1.

Also hosts two numerical identity checks built on 2F1: the first-order
expansions of the regularised terms as eps -> 0, and a closed-form sum of
two 2F1 series at argument 1/2.
"""

from __future__ import annotations

import cmath
import math
from typing import Iterator

from .errors import ConvergenceError, DegenerateParameterError, DomainError, PoleError
from .series import (DEFAULT_TOL, DEGENERACY_TOL, MAX_TERMS, SeriesValue,
                     is_nonpositive_integer, near_integer, nearest_int, sum_series)
from .special import digamma, gamma, loggamma, rgamma

__all__ = [
    "pochhammer", "beta_fn", "beta_rgamma", "gauss_2f1", "h_mu", "appendixA_limit_check",
    "appendixA_residuals", "lemmaB1_residual",
]

# |z| up to which the defining series is summed directly
_SERIES_RADIUS = 0.7
# c - a - b closer than this to an integer (but not equal) makes the
# connection formula cancel badly; the direct series is used instead
_CONNECTION_GUARD = 1e-3


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    a = complex(a)
    out = 1.0 + 0j
    for i in range(n):
        out *= a + i
    return out


def beta_fn(x: complex, y: complex) -> complex:
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)."""
    x, y = complex(x), complex(y)
    for arg in (x, y, x + y):
        if is_nonpositive_integer(arg):
            raise PoleError(f"beta_fn: Gamma({arg}) is singular")
    if max(abs(x), abs(y), abs(x + y)) < 150:
        return gamma(x) * gamma(y) / gamma(x + y)
    return cmath.exp(loggamma(x) + loggamma(y) - loggamma(x + y))


def beta_rgamma(x: complex, y: complex) -> complex:
    """Gamma(x) Gamma(y) / Gamma(x + y), taken as 0 when x + y is a pole."""
    x, y = complex(x), complex(y)
    if is_nonpositive_integer(x + y):
        for arg in (x, y):
            if is_nonpositive_integer(arg):
                raise PoleError(f"beta_rgamma: Gamma({arg}) is singular")
        return 0j
    return beta_fn(x, y)


def _exact_gap(gap: complex, scale: float) -> bool:
    # integer up to rounding in forming c - a - b
    m = nearest_int(gap)
    return abs(gap - m) <= 1e-14 * max(1.0, scale)


def _hyp_terms(a: complex, b: complex, c: complex, z: complex) -> Iterator[complex]:
    term = 1.0 + 0j
    n = 0
    while True:
        yield term
        num = (a + n) * (b + n)
        if num == 0:
            return
        term *= num / ((c + n) * (n + 1)) * z
        n += 1


def _series(a, b, c, z, tol, max_terms) -> SeriesValue:
    if is_nonpositive_integer(c) and not (
            (is_nonpositive_integer(a) and a.real > c.real)
            or (is_nonpositive_integer(b) and b.real > c.real)):
        raise DomainError("gauss_2f1: c is a non-positive integer")
    if z == 0:
        return SeriesValue(1.0 + 0j, 0.0, 1, True)
    return sum_series(_hyp_terms(a, b, c, z), tol, max_terms)


def _pfaff(a, b, c, z, tol, max_terms) -> SeriesValue:
    # 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))
    w = z / (z - 1.0)
    inner = _series(a, c - b, c, w, tol, max_terms)
    return inner.scaled(cmath.exp(-a * cmath.log(1.0 - z)))


def _connection_generic(a, b, c, z, tol, max_terms) -> SeriesValue:
    w = 1.0 - z
    s = c - a - b
    f1 = _series(a, b, 1.0 - s, w, tol, max_terms)
    f2 = _series(c - a, c - b, 1.0 + s, w, tol, max_terms)
    g1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b)
    g2 = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b) * cmath.exp(s * cmath.log(w))
    return f1.scaled(g1) + f2.scaled(g2)


def _log_tail(p, q, m, w, pre, psi_p, psi_q, tol, max_terms) -> SeriesValue:
    """pre * sum_n (p)_n (q)_n / (n! (n+m)!) w^n [log w - psi(n+1) - psi(n+m+1)
    + psi(p+n) + psi(q+n)], the logarithmic part of the integer-gap cases."""
    if pre == 0:
        return SeriesValue(0j, 0.0, 0, True)
    lw = cmath.log(w)

    def terms():
        coef = 1.0 / math.factorial(m) + 0j
        h1 = 0.0                      # harmonic numbers: psi(n+1) + gamma_E
        hm = sum(1.0 / i for i in range(1, m + 1))
        dp, dq = psi_p, psi_q
        n = 0
        while True:
            yield coef * (lw - h1 - hm + dp + dq)
            # psi(n+1) + psi(n+m+1) carries -2 gamma_E, folded into psi_p/psi_q
            num = (p + n) * (q + n)
            if num == 0:
                return
            dp += 1.0 / (p + n)
            dq += 1.0 / (q + n)
            coef *= num / ((n + 1) * (n + 1 + m)) * w
            n += 1
            h1 += 1.0 / n
            hm += 1.0 / (n + m)

    return sum_series(terms(), tol, max_terms).scaled(pre)


def _psi_plus_euler(x: complex) -> complex:
    # psi(x) + gamma_E; only called where x is off the poles
    return digamma(x) + 0.5772156649015329


def _connection_log(a, b, c, z, tol, max_terms) -> SeriesValue:
    """1 - z connection when c - a - b = m is an integer."""
    w = 1.0 - z
    m = nearest_int(c - a - b)
    if m >= 0:
        finite = 0j
        if m > 0:
            coef = gamma(m) * gamma(c) * rgamma(a + m) * rgamma(b + m)
            t = 1.0 + 0j
            for n in range(m):
                finite += t
                if n < m - 1:
                    t *= (a + n) * (b + n) / ((n + 1) * (1 - m + n)) * w
            finite *= coef
        pre = -((-w) ** m) * gamma(c) * rgamma(a) * rgamma(b)
        p, q = a + m, b + m
    else:
        k = -m
        finite = 0j
        coef = gamma(k) * gamma(c) * rgamma(a) * rgamma(b)
        if coef != 0:
            t = 1.0 + 0j
            for n in range(k):
                finite += t
                if n < k - 1:
                    t *= (a - k + n) * (b - k + n) / ((n + 1) * (1 - k + n)) * w
            finite *= coef * w ** (-k)
        pre = -((-1) ** k) * gamma(c) * rgamma(a - k) * rgamma(b - k)
        p, q, m = a, b, k
    psi_p = _psi_plus_euler(p) if pre != 0 else 0j
    psi_q = _psi_plus_euler(q) if pre != 0 else 0j
    tail = _log_tail(p, q, m, w, pre, psi_p, psi_q, tol, max_terms)
    return tail + finite


def gauss_2f1(a: complex, b: complex, c: complex, z: complex,
              tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS,
              method: str = "auto") -> SeriesValue:
    """Gauss hypergeometric function 2F1(a, b; c; z).

    ``method`` is one of ``"auto"``, ``"series"``, ``"pfaff"`` (the
    z -> z/(z-1) map) or ``"connection"`` (the z -> 1-z map).  Auto uses the
    series for |z| <= 0.7, the Pfaff map when it lands in that disc, and
    the connection formula otherwise, with logarithmic forms when c - a - b
    is an integer.

    >>> round(gauss_2f1(1, 1, 2, 0.5).value.real, 12) == round(2 * math.log(2), 12)
    True
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if method == "series":
        return _series(a, b, c, z, tol, max_terms)
    if method == "pfaff":
        if z == 1:
            raise DomainError("gauss_2f1: Pfaff map undefined at z = 1")
        return _pfaff(a, b, c, z, tol, max_terms)
    if method == "connection":
        gap = c - a - b
        if near_integer(gap):
            if not _exact_gap(gap, abs(a) + abs(b) + abs(c)):
                raise DegenerateParameterError(
                    "gauss_2f1: c-a-b is within 1e-8 of an integer; the 1-z map "
                    "is degenerate (use method='pfaff' or 'auto')")
            return _connection_log(a, b, c, z, tol, max_terms)
        return _connection_generic(a, b, c, z, tol, max_terms)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    polynomial = is_nonpositive_integer(a) or is_nonpositive_integer(b)
    if abs(z) > 1 and not polynomial:
        raise DomainError("gauss_2f1 is only implemented on the closed unit disc")
    if polynomial or abs(z) <= _SERIES_RADIUS:
        if is_nonpositive_integer(c) and abs(z) > _SERIES_RADIUS:
            raise DomainError("gauss_2f1: c is a non-positive integer")
        return _series(a, b, c, z, tol, max_terms)
    if z != 1 and abs(z / (z - 1.0)) <= _SERIES_RADIUS:
        return _pfaff(a, b, c, z, tol, max_terms)
    if abs(1.0 - z) <= _SERIES_RADIUS:
        gap = c - a - b
        if _exact_gap(gap, abs(a) + abs(b) + abs(c)):
            return _connection_log(a, b, c, z, tol, max_terms)
        if not near_integer(gap, _CONNECTION_GUARD):
            return _connection_generic(a, b, c, z, tol, max_terms)
    if abs(z) < 1:
        res = _series(a, b, c, z, tol, max_terms)
        if res.converged:
            return res
        raise ConvergenceError("gauss_2f1: series did not converge")
    raise DomainError("gauss_2f1: no convergent route on the unit circle here")


def h_mu(gamma_: complex, mu: complex, xi: float, tol: float = DEFAULT_TOL,
         max_terms: int = MAX_TERMS) -> SeriesValue:
    """h_mu(xi) = sum_{n>=1} (gamma)_n xi^n / ((mu)_n n)."""
    gamma_, mu = complex(gamma_), complex(mu)
    if is_nonpositive_integer(mu):
        raise DomainError("h_mu: mu is a non-positive integer")
    if not 0 <= xi < 1:
        raise DomainError("h_mu needs 0 <= xi < 1")

    def terms():
        r = 1.0 + 0j                  # (gamma)_n xi^n / (mu)_n
        n = 0
        while True:
            r *= (gamma_ + n) / (mu + n) * xi
            n += 1
            yield r / n
            if r == 0:
                return

    return sum_series(terms(), tol, max_terms)


def appendixA_residuals(a: complex, b: complex, xi: float, eps: float,
                        tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Scaled remainders |lhs(eps) - 1 - eps * bracket| / eps^2 of both expansions.

    The first entry is nan when xi = 0, where only the second expansion is
    defined.
    """
    a, b = complex(a), complex(b)
    g = a + b - 1.0
    if not 0 <= xi < 1 or not 0 < eps <= 1e-3:
        raise DomainError("appendixA_residuals needs 0 <= xi < 1 and 0 < eps <= 1e-3")
    for v in (a, b, 1.0 - b, 2.0 - b, b - 1.0):
        if near_integer(v) and nearest_int(v) <= 0:
            raise DegenerateParameterError("appendixA_residuals needs generic a, b")

    one_mb = 1.0 - b
    lhs2 = (1.0 - xi) ** (one_mb - eps) * gauss_2f1(a, one_mb, a + eps, xi, tol).value
    r2 = abs(lhs2 - 1.0 - eps * h_mu(g, a, xi, tol).value) / eps**2
    if xi == 0:
        return math.nan, r2

    lhs1 = xi ** (one_mb - eps) * gauss_2f1(a, one_mb, a + eps, 1.0 - xi, tol).value
    bracket = (digamma(a) - digamma(one_mb)
               + xi ** one_mb * beta_fn(a, b - 1.0) * gauss_2f1(a, one_mb, 2.0 - b, xi, tol).value
               + h_mu(g, b, xi, tol).value)
    r1 = abs(lhs1 - 1.0 - eps * bracket) / eps**2
    return r1, r2


def appendixA_limit_check(a: complex, b: complex, xi: float, eps: float,
                          tol: float = DEFAULT_TOL) -> float:
    """Largest scaled remainder over both first-order expansions.

    A value bounded as eps shrinks confirms an O(eps^2) remainder.
    """
    r1, r2 = appendixA_residuals(a, b, xi, eps, tol)
    return r2 if math.isnan(r1) else max(r1, r2)


def lemmaB1_residual(a: complex, b: complex, tol: float = DEFAULT_TOL) -> float:
    """|2^-a S(a,b) + 2^-b S(b,a) - 2^-gamma B(1-a, 1-b)| with
    S(a,b) = sum_n (a)_n 2^-n / (n! (n+1-b))."""
    a, b = complex(a), complex(b)
    for v in (1.0 - a, 1.0 - b):
        if is_nonpositive_integer(v, DEGENERACY_TOL):
            raise DegenerateParameterError("lemmaB1_residual needs a, b off 1, 2, 3, ...")

    def half_sum(p, q):
        def terms():
            r = 1.0 + 0j              # (p)_n / n! 2^-n
            n = 0
            while True:
                yield r / (n + 1.0 - q)
                if r == 0:
                    return
                r *= (p + n) / (n + 1) * 0.5
                n += 1
        return sum_series(terms(), tol)

    lhs = (cmath.exp(-a * math.log(2.0)) * half_sum(a, b).value
           + cmath.exp(-b * math.log(2.0)) * half_sum(b, a).value)
    rhs = cmath.exp(-(a + b - 1.0) * math.log(2.0)) * beta_rgamma(1.0 - a, 1.0 - b)
    return abs(lhs - rhs)
