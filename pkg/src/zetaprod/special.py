"""Gamma, digamma and Riemann zeta on complex arguments.

All routines work in double precision.  Gamma uses the g=7, n=9 Lanczos
approximation in the right half-plane and reflection elsewhere; zeta
uses Euler-Maclaurin for Re s > -1/2 and the functional equation below.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from ._euler_maclaurin import em_sum
from .bernoulli import BERNOULLI, BernoulliTable
from .errors import DomainError, PoleError

__all__ = [
    "BERNOULLI", "BernoulliTable", "CONSTANTS", "Constants",
    "sinpi", "cospi", "gamma", "loggamma", "rgamma", "digamma",
    "riemann_zeta", "riemann_zeta_near_one", "zeta_regular_part", "zeta_deriv",
    "zeta_deriv_neg_even", "zeta_nonpositive_int",
]


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = 0.577215664901532860606512090082
    log_two_pi: float = 1.83787706640934548356065947281
    log_glaisher: float = 0.248754477033784262547252993576
    zeta3: float = 1.20205690315959428539973816151
    pi: float = math.pi


CONSTANTS = Constants()
_LOG_SQRT_2PI = 0.5 * CONSTANTS.log_two_pi

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0 and z.real == math.floor(z.real)


def _reduce2(x: float) -> float:
    """x mod 2 into [-1, 1], exact for moderate x."""
    return x - 2.0 * round(0.5 * x)


def _sinpi_real(r: float) -> float:
    r = _reduce2(r)
    sign = 1.0
    if r < 0:
        r, sign = -r, -1.0
    if r > 0.5:
        r = 1.0 - r
    return sign * math.sin(math.pi * r)


def _cospi_real(r: float) -> float:
    r = abs(_reduce2(r))
    if r > 0.5:
        return -_sinpi_real(r - 0.5)
    return _sinpi_real(0.5 - r)


def sinpi(z: complex) -> complex:
    """sin(pi z) with exact zeros at the integers."""
    z = complex(z)
    if z.imag == 0.0:
        return complex(_sinpi_real(z.real))
    y = math.pi * z.imag
    return complex(_sinpi_real(z.real) * math.cosh(y),
                   _cospi_real(z.real) * math.sinh(y))


def cospi(z: complex) -> complex:
    """cos(pi z) with exact zeros at the half-integers."""
    z = complex(z)
    if z.imag == 0.0:
        return complex(_cospi_real(z.real))
    y = math.pi * z.imag
    return complex(_cospi_real(z.real) * math.cosh(y),
                   -_sinpi_real(z.real) * math.sinh(y))


def _lanczos_parts(z: complex) -> tuple[complex, complex]:
    # Gamma(z+1) = sqrt(2 pi) t^(z+1/2) e^-t A(z), t = z + g + 1/2
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    return z + _LANCZOS_G + 0.5, acc


def gamma(z: complex) -> complex:
    """Gamma function; raises :class:`PoleError` at 0, -1, -2, ..."""
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return math.pi / (sinpi(z) * gamma(1.0 - z))
    t, acc = _lanczos_parts(z - 1.0)
    return math.sqrt(2 * math.pi) * cmath.exp((z - 0.5) * cmath.log(t) - t) * acc


def loggamma(z: complex) -> complex:
    """A logarithm of Gamma(z).

    The imaginary part is only defined modulo 2*pi; use the result through
    ``exp`` or in differences of matching branches.
    """
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return (math.log(math.pi) - cmath.log(sinpi(z))
                - loggamma(1.0 - z))
    t, acc = _lanczos_parts(z - 1.0)
    return _LOG_SQRT_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def rgamma(z: complex) -> complex:
    """1/Gamma(z), zero at the poles of Gamma."""
    z = complex(z)
    if _is_pole(z):
        return 0j
    return 1.0 / gamma(z)


_PSI_COEF = [float(BERNOULLI[2 * k]) / (2 * k) for k in range(1, 11)]


def digamma(z: complex) -> complex:
    """Logarithmic derivative of Gamma."""
    z = complex(z)
    if _is_pole(z):
        raise PoleError(f"digamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi * cospi(z) / sinpi(z)
    acc = 0j
    while abs(z) < 15.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0j
    p = inv2
    for c in _PSI_COEF:
        series += c * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


def _chi(s: complex) -> tuple[complex, complex]:
    """chi(s) and chi'(s) for zeta(s) = chi(s) zeta(1-s)."""
    pref = cmath.exp(s * math.log(2.0) + (s - 1.0) * math.log(math.pi)) * gamma(1.0 - s)
    sp, cp = sinpi(0.5 * s), cospi(0.5 * s)
    chi = pref * sp
    dchi = pref * (sp * (CONSTANTS.log_two_pi - digamma(1.0 - s)) + 0.5 * math.pi * cp)
    return chi, dchi


def riemann_zeta(s: complex) -> complex:
    """Riemann zeta function for complex s != 1.

    Examples
    --------
    >>> riemann_zeta(0)
    (-0.5+0j)
    >>> abs(riemann_zeta(2) - math.pi**2 / 6) < 1e-15
    True
    """
    s = complex(s)
    if s == 1:
        raise PoleError("riemann_zeta has a pole at s = 1")
    if s.real > -0.5:
        return complex(em_sum(s, np.array([1.0]))[0])
    chi, _ = _chi(s)
    if chi == 0:
        return 0j
    return chi * riemann_zeta(1.0 - s)


def riemann_zeta_near_one(eps: complex) -> complex:
    """zeta(1 + eps), with the 1/eps pole split off analytically.

    The finite part is computed without cancellation, so
    ``eps * riemann_zeta_near_one(eps) - 1`` keeps full relative accuracy
    for tiny ``eps``.
    """
    eps = complex(eps)
    if eps == 0:
        raise PoleError("riemann_zeta_near_one needs eps != 0")
    if abs(eps) >= 1.5:
        return riemann_zeta(1.0 + eps)
    return 1.0 / eps + zeta_regular_part(eps)


def zeta_regular_part(eps: complex, x: float = 1.0) -> complex:
    """zeta(1 + eps, x) - 1/eps, finite at eps = 0 (where it is -digamma(x))."""
    return complex(em_sum(1.0 + complex(eps), np.array([float(x)]), drop_pole=True)[0])


def zeta_deriv(s: complex) -> complex:
    """zeta'(s), by differentiating Euler-Maclaurin or the functional equation."""
    s = complex(s)
    if s == 1:
        raise PoleError("zeta_deriv has a pole at s = 1")
    if s.real > -0.5:
        _, d = em_sum(s, np.array([1.0]), deriv=True)
        return complex(d[0])
    chi, dchi = _chi(s)
    return dchi * riemann_zeta(1.0 - s) - chi * zeta_deriv(1.0 - s)


def zeta_deriv_neg_even(n: int) -> float:
    """zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2^(2n+1) pi^(2n))."""
    if int(n) != n or n < 1:
        raise DomainError("zeta_deriv_neg_even needs an integer n >= 1")
    n = int(n)
    mag = factorial(2 * n) / (2.0 ** (2 * n + 1) * math.pi ** (2 * n))
    return (-1) ** n * mag * riemann_zeta(2 * n + 1).real


def zeta_nonpositive_int(k: int) -> Fraction:
    """Exact zeta(-k) for integer k >= 0: -B_{k+1}/(k+1), and zeta(0) = -1/2."""
    if k < 0:
        raise DomainError("zeta_nonpositive_int needs k >= 0")
    if k == 0:
        return Fraction(-1, 2)
    return -BERNOULLI[k + 1] / (k + 1)
