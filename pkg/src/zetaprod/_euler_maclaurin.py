"""Euler-Maclaurin kernel for sum_{k>=0} (k + x)^(-s), vectorised over x.

The direct part runs over k < N; the remainder is the integral term, the
half term, and Bernoulli corrections.  For Re s >= 0 the shift follows
N = 16 + ceil(|Im s|); for Re s < 0 the shift is kept as small as the
tail allows, since the direct terms grow like (k + x)^(-Re s) and cancel.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .bernoulli import BERNOULLI

# B_{2j} / (2j)!  for j = 1..40
_BCOEF = np.array([float(BERNOULLI[2 * j] / Fraction(math.factorial(2 * j)))
                   for j in range(1, 41)])
_MAX_CORR = len(_BCOEF)
_REL_STOP = 1e-18


def _shift(s: complex, xmin: float, deriv: bool) -> int:
    # smallest w = N + x for which the asymptotic tail reaches ~1e-16
    w_min = (37.0 + abs(s)) / (2.0 * math.pi)
    if (not deriv and s.imag == 0.0 and s.real <= 0
            and s.real == math.floor(s.real)):
        # tail terminates exactly: Bernoulli polynomial
        return 0
    base = 16 + math.ceil(abs(s.imag)) if s.real >= 0 else 0
    return max(base, math.ceil(w_min - xmin), 0)


def em_sum(s: complex, x: np.ndarray, deriv: bool = False,
           drop_pole: bool = False):
    """Return sum_{k>=0} (k+x)^(-s) (continued analytically), optionally d/ds.

    Parameters
    ----------
    s : complex
        Exponent, s != 1 unless ``drop_pole`` is set.
    x : ndarray of float
        Positive shifts.
    deriv : bool
        Also return the derivative with respect to ``s``.
    drop_pole : bool
        Subtract 1/(s-1) analytically (stable near s = 1).
    """
    s = complex(s)
    x = np.asarray(x, dtype=float)
    n_shift = _shift(s, float(x.min()), deriv)

    if n_shift:
        k = np.arange(n_shift, dtype=float)[:, None]
        logs = np.log(k + x[None, :])
        pw = np.exp(-s * logs)
        direct = pw.sum(axis=0)
        ddirect = -(logs * pw).sum(axis=0) if deriv else None
    else:
        direct = np.zeros(x.shape, dtype=complex)
        ddirect = np.zeros(x.shape, dtype=complex) if deriv else None

    w = x + n_shift
    lw = np.log(w)
    ws = np.exp(-s * lw)                       # w^(-s)
    sm1 = s - 1.0
    if drop_pole:
        # w^(1-s)/(s-1) - 1/(s-1) = expm1(-(s-1) log w)/(s-1)
        if sm1 == 0:
            integral = -lw + 0j
        else:
            integral = np.expm1(-sm1 * lw) / sm1
    else:
        integral = w * ws / sm1
    total = direct + integral + 0.5 * ws
    if deriv:
        if drop_pole:
            raise ValueError("deriv and drop_pole are not combined")
        dtotal = ddirect - lw * w * ws / sm1 - w * ws / sm1**2 - 0.5 * lw * ws

    poch = s                 # (s)_{2j-1}
    dpoch = 1.0 + 0j
    wpow = ws / w            # w^(-s-2j+1)
    prev = np.inf
    terminating = n_shift == 0 and s.imag == 0.0 and s.real == math.floor(s.real) and s.real <= 0
    for j in range(1, _MAX_CORR + 1):
        term = _BCOEF[j - 1] * poch * wpow
        size = np.abs(term)
        if deriv:
            dterm = _BCOEF[j - 1] * (dpoch - lw * poch) * wpow
            size = np.maximum(size, np.abs(dterm))
        big = float(np.max(size))
        if big > prev and not terminating:
            break            # asymptotic series started to diverge
        prev = big
        total = total + term
        if deriv:
            dtotal = dtotal + dterm
        if poch == 0 and not deriv:
            break
        ref = np.abs(total)
        if deriv:
            ref = np.minimum(ref, np.abs(dtotal))
        if np.all(size <= _REL_STOP * np.maximum(ref, 1e-300)):
            break
        q = (s + 2 * j - 1) * (s + 2 * j)
        dq = 2 * s + 4 * j - 1
        dpoch = dpoch * q + poch * dq
        poch = poch * q
        wpow = wpow / (w * w)
    if deriv:
        return total, dtotal
    return total
