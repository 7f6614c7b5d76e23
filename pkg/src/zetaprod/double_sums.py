"""The double zeta sums S1 and S2: closed forms, integer limits and direct sums.

    S1(a, b) = sum_{j>=0, k>=1} (a)_j (b)_k / (j+k+1)!          zeta(a+j) zeta(b+k)
    S2(a, b) = sum_{j>=0, k>=0} (a)_j (b)_k / (j! k! (j+k+1))   zeta(a+j) zeta(b+k)

A product (c)_i zeta(c+i) with c a nonpositive integer and c + i = 1 is
read as its limit (-1)^(i-1) (i-1)!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal

import numpy as np

from .errors import DegenerateParameterError, DomainError
from .hurwitz import poch_hurwitz_seq
from .hyp2f1 import beta_fn, pochhammer
from .series import DEGENERACY_TOL, SeriesValue, is_nonpositive_integer, near_integer, nearest_int
from .special import (cospi, gamma, rgamma, riemann_zeta, sinpi, zeta_deriv_neg_even,
                      zeta_nonpositive_int)

__all__ = [
    "DoubleSumTerm", "S1_closed", "S1_finite", "S2_closed", "S2_integer_sum",
    "S1_direct", "S2_direct", "exact_terms",
]

DEFAULT_BOX = 400
# (c)_i / i! * zeta(c + i, 2) is computed through (c)_i, which overflows
# near i = 170; by then the terms are far below double precision.
_SEQ_CAP = 160


@dataclass(frozen=True)
class DoubleSumTerm:
    j: int
    k: int
    value: Fraction
    is_limit_term: bool = False


def _check_half_plane(a: complex, b: complex, need_sum: bool) -> None:
    if a.real >= 1 or b.real >= 1:
        raise DomainError("double sums need Re a < 1 and Re b < 1")
    if need_sum and (a + b).real >= 1:
        raise DomainError("S2 needs Re(a + b) < 1")


def S1_closed(a: complex, b: complex) -> complex:
    """B(1-a, 1-b) zeta(a+b-1)."""
    a, b = complex(a), complex(b)
    _check_half_plane(a, b, need_sum=False)
    return beta_fn(1.0 - a, 1.0 - b) * riemann_zeta(a + b - 1.0)


def S1_finite(m: int, n: int) -> float:
    """S1(-m, -n) = m! n! / (m+n+1)! zeta(-m-n-1); exactly 0 when m, n differ in parity."""
    if m < 0 or n < 0:
        raise DomainError("S1_finite needs m, n >= 0")
    weight = Fraction(factorial(m) * factorial(n), factorial(m + n + 1))
    val = weight * zeta_nonpositive_int(m + n + 1)
    return float(val)


def S2_closed(a: complex, b: complex) -> complex:
    """Gamma(g) zeta(g) {Gamma(1-a)/Gamma(b) + Gamma(1-b)/Gamma(a)} with g = a+b-1.

    This is the reflection-formula rewrite of the sine form; it stays finite
    when a or b alone is a nonpositive integer.
    """
    a, b = complex(a), complex(b)
    _check_half_plane(a, b, need_sum=True)
    g = a + b - 1.0
    if near_integer(g, DEGENERACY_TOL):
        raise DegenerateParameterError(
            f"S2_closed: a + b = {nearest_int(a + b)} is an integer; use S2_integer_sum")
    bracket = gamma(1.0 - a) * rgamma(b) + gamma(1.0 - b) * rgamma(a)
    return gamma(g) * riemann_zeta(g) * bracket


def S2_closed_sine_form(a: complex, b: complex) -> complex:
    """pi Gamma(g) zeta(g) / (Gamma(a) Gamma(b)) * (sin pi a + sin pi b) / (sin pi a sin pi b)."""
    a, b = complex(a), complex(b)
    _check_half_plane(a, b, need_sum=True)
    sa, sb = sinpi(a), sinpi(b)
    if near_integer(a, DEGENERACY_TOL) or near_integer(b, DEGENERACY_TOL):
        raise DegenerateParameterError("sine form needs non-integer a and b")
    g = a + b - 1.0
    if near_integer(g, DEGENERACY_TOL):
        raise DegenerateParameterError("sine form needs non-integer a + b")
    return (math.pi * gamma(g) * riemann_zeta(g) * rgamma(a) * rgamma(b)
            * (sa + sb) / (sa * sb))


def S2_integer_sum(a: complex, total: int) -> complex:
    """S2(a, total - a) for total = 0, -1, -2, ..."""
    if int(total) != total or total > 0:
        raise DomainError("total must be a nonpositive integer")
    total = int(total)
    a = complex(a)
    if total % 2 == 0:
        m = -total // 2
        if not (-2 * m - 1 < a.real < 1):
            raise DomainError(f"S2_integer_sum(total={total}) needs {-2 * m - 1} < Re a < 1")
        z = float(zeta_nonpositive_int(2 * m + 1))
        return (-gamma(1.0 - a) * gamma(2 * m + 1 + a) / factorial(2 * m + 1)
                * cospi(a) * z)
    m = (-total - 1) // 2
    if not (-2 * m - 2 < a.real < 1):
        raise DomainError(f"S2_integer_sum(total={total}) needs {-2 * m - 2} < Re a < 1")
    return 2.0 * pochhammer(a, 2 * m + 2) / factorial(2 * m + 2) * zeta_deriv_neg_even(m + 1)


# ---------------------------------------------------------------- direct sums

def _integer_factors(m: int) -> list[tuple[Fraction, bool]]:
    """(-m)_j zeta(-m+j) for j = 0..m+1 as exact rationals, flagging the limit term."""
    out = []
    poch = Fraction(1)
    for j in range(m + 1):
        out.append((poch * zeta_nonpositive_int(m - j), False))
        poch *= -m + j
    out.append((Fraction((-1) ** m * factorial(m)), True))
    return out


def exact_terms(m: int, n: int, kind: Literal["S1", "S2"]) -> list[DoubleSumTerm]:
    """Every nonzero term of S1(-m, -n) or S2(-m, -n)."""
    if m < 0 or n < 0:
        raise DomainError("exact_terms needs m, n >= 0")
    A, B = _integer_factors(m), _integer_factors(n)
    terms = []
    for j, (aj, lj) in enumerate(A):
        for k, (bk, lk) in enumerate(B):
            if kind == "S1":
                if k == 0:
                    continue
                w = Fraction(1, factorial(j + k + 1))
            else:
                w = Fraction(1, factorial(j) * factorial(k) * (j + k + 1))
            val = aj * bk * w
            if val:
                terms.append(DoubleSumTerm(j, k, val, lj or lk))
    return terms


def _scaled_tail_factors(c: complex, n_max: int) -> tuple[np.ndarray, bool]:
    """u_i = (c)_i / i! * (zeta(c+i) - 1) for i < n_max, stopping once negligible."""
    out = []
    fact = 1.0
    small = 0
    limit = min(n_max, _SEQ_CAP)
    scale = 0.0
    for i, pz in enumerate(poch_hurwitz_seq(c, 2.0)):
        if i >= limit:
            return np.array(out), False
        if i:
            fact *= i
        u = pz / fact
        out.append(u)
        scale = max(scale, abs(u))
        small = small + 1 if abs(u) <= 1e-18 * max(1.0, scale) else 0
        if small >= 3 and i > 4:
            return np.array(out), True


def _box(u: np.ndarray, v: np.ndarray, weight) -> complex:
    j = np.arange(u.size)[:, None]
    k = np.arange(v.size)[None, :]
    return complex(np.sum(u[:, None] * v[None, :] * weight(j, k)))


def _tail_error(u: np.ndarray, v: np.ndarray) -> float:
    bound = 1.0 + np.abs(u).sum() + np.abs(v).sum()
    return 2.0 * (abs(u[-1]) + abs(v[-1])) * bound


def _direct_result(total: complex, u, v, ok_u: bool, ok_v: bool) -> SeriesValue:
    ok = ok_u and ok_v
    err = _tail_error(u, v) if ok else math.inf
    return SeriesValue(complex(total), err, int(u.size * v.size), ok)


def _both_integers(a: complex, b: complex) -> bool:
    return is_nonpositive_integer(a) and is_nonpositive_integer(b)


def S1_direct(a: complex, b: complex, j_max: int = DEFAULT_BOX,
              k_max: int = DEFAULT_BOX) -> SeriesValue:
    """Direct double summation of S1 (exact when a, b are both nonpositive integers).

    With zeta = 1 + (zeta - 1), the parts carrying only Pochhammer factors
    reduce to Gauss sums; the remaining box u_j v_k decays geometrically.
    """
    a, b = complex(a), complex(b)
    _check_half_plane(a, b, need_sum=False)
    if _both_integers(a, b):
        val = sum((t.value for t in exact_terms(-nearest_int(a), -nearest_int(b), "S1")),
                  Fraction(0))
        return SeriesValue(complex(float(val)), 0.0, 0, True)
    u, ok_u = _scaled_tail_factors(a, j_max)       # (a)_j/j! (zeta(a+j) - 1)
    v, ok_v = _scaled_tail_factors(b, k_max + 1)
    j = np.arange(u.size)
    k = np.arange(v.size)
    # sum_{j>=0} (a)_j / (j+k+1)! = 1 / (k! (k+1-a))
    p1 = beta_fn(1.0 - a, 1.0 - b) - 1.0 / (1.0 - a)
    # j! sum_{k>=1} (b)_k / (j+k+1)! = 1/(j+1-b) - 1/(j+1)
    p2 = complex(np.sum(u * (1.0 / (j + 1.0 - b) - 1.0 / (j + 1.0))))
    p3 = complex(np.sum((v / (k + 1.0 - a))[1:]))
    lg = np.vectorize(math.lgamma)

    def weight(jj, kk):
        w = np.exp(lg(jj + 1.0) + lg(kk + 1.0) - lg(jj + kk + 2.0))   # j! k! / (j+k+1)!
        return np.where(kk >= 1, w, 0.0)

    p4 = _box(u, v, weight)
    return _direct_result(p1 + p2 + p3 + p4, u, v, ok_u, ok_v)


def S2_direct(a: complex, b: complex, j_max: int = DEFAULT_BOX,
              k_max: int = DEFAULT_BOX) -> SeriesValue:
    """Direct double summation of S2, split like S1_direct.

    The pure Pochhammer part is int_0^1 (1-x)^(-a-b) dx and the mixed parts
    are beta integrals against x^j.
    """
    a, b = complex(a), complex(b)
    _check_half_plane(a, b, need_sum=True)
    if _both_integers(a, b):
        val = sum((t.value for t in exact_terms(-nearest_int(a), -nearest_int(b), "S2")),
                  Fraction(0))
        return SeriesValue(complex(float(val)), 0.0, 0, True)
    u, ok_u = _scaled_tail_factors(a, j_max)
    v, ok_v = _scaled_tail_factors(b, k_max)
    q1 = 1.0 / (1.0 - a - b)
    q2 = complex(np.sum(u * _beta_column(u.size, b)))    # B(j+1, 1-b)
    q3 = complex(np.sum(v * _beta_column(v.size, a)))
    q4 = _box(u, v, lambda jj, kk: 1.0 / (jj + kk + 1.0))
    return _direct_result(q1 + q2 + q3 + q4, u, v, ok_u, ok_v)


def _beta_column(n: int, c: complex) -> np.ndarray:
    out = np.empty(n, dtype=complex)
    val = 1.0 / (1.0 - c)
    for j in range(n):
        out[j] = val
        val *= (j + 1.0) / (j + 2.0 - c)
    return out
