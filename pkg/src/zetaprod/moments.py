"""Moments H_n(a) = int_0^1 x^n zeta(a, x) dx and related identities."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .bernoulli import BERNOULLI
from .errors import DegenerateParameterError, DomainError, PoleError
from .hurwitz import poch_hurwitz_seq
from .series import DEFAULT_TOL, MAX_TERMS, SeriesValue, near_integer, nearest_int, sum_series
from .special import (CONSTANTS, gamma, riemann_zeta, zeta_deriv, zeta_deriv_neg_even,
                      zeta_nonpositive_int)

__all__ = [
    "MomentSpec", "H_series", "H_finite", "H_negative_integer", "H_integer",
    "summation_identity_residual", "wilton_null_sum", "bernoulli_binomial_identity",
]


@dataclass(frozen=True)
class MomentSpec:
    """Moment order ``n`` and exponent ``a``; ``m`` is set when a is an integer."""

    n: int
    a: complex
    m: int | None = None
    N: int | None = field(init=False, default=None)

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError("moment order n must be a nonnegative integer")
        object.__setattr__(self, "a", complex(self.a))
        if self.m is None and self.a.imag == 0 and self.a.real == round(self.a.real):
            object.__setattr__(self, "m", int(round(self.a.real)))
        if self.m is not None:
            if complex(self.m) != self.a:
                raise DomainError("m must equal a")
            if 2 <= self.m <= self.n:
                object.__setattr__(self, "N", self.n - self.m + 1)

    def check(self) -> None:
        if self.a == 1:
            raise PoleError("H_n(a) has a pole at a = 1")
        if self.a.real >= self.n + 1:
            raise DomainError(f"H_n(a) needs Re a < n + 1 = {self.n + 1}")


def _spec(spec_or_n, a=None) -> MomentSpec:
    if isinstance(spec_or_n, MomentSpec):
        return spec_or_n
    return MomentSpec(int(spec_or_n), a)


def H_series(spec, a=None, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesValue:
    """n! sum_k (a)_k zeta(a+k) / (n+k+1)!, summed as

        1/(n+1-a) + n! sum_k (a)_k {zeta(a+k) - 1} / (n+k+1)!

    since sum_k (a)_k / (n+k+1)! = 1/(n! (n+1-a)).  Accepts
    ``H_series(MomentSpec(n, a))`` or ``H_series(n, a)``.
    """
    spec = _spec(spec, a)
    spec.check()
    n, a = spec.n, spec.a
    if n == 0:
        return SeriesValue(0j, 0.0, 0, True)

    def terms():
        d = 1.0 / (n + 1)                 # n! / (n+k+1)!
        for k, pz in enumerate(poch_hurwitz_seq(a, 2.0)):
            yield d * pz
            d /= n + k + 2

    return 1.0 / (n + 1.0 - a) + sum_series(terms(), tol, max_terms)


def H_finite(spec, a=None, tol: float = DEFAULT_TOL) -> complex:
    """-(n!/Gamma(a)) sum_{k=1}^n Gamma(a-k) zeta(a-k) / (n-k+1)!."""
    spec = _spec(spec, a)
    spec.check()
    n, a = spec.n, spec.a
    if n < 1:
        raise DomainError("H_finite needs n >= 1")
    if near_integer(a) and 1 <= nearest_int(a) <= n:
        raise DegenerateParameterError(
            f"H_finite: a = {nearest_int(a)} lies in [1, n]; use H_integer")
    if min(abs(a - k - 1) for k in range(1, n + 1)) < 1e-6:
        raise DegenerateParameterError("H_finite: a - k is too close to 1 for some k")
    total = 0j
    ratio = 1.0 + 0j                     # Gamma(a-k)/Gamma(a)
    for k in range(1, n + 1):
        ratio /= a - k
        total += ratio * riemann_zeta(a - k) / factorial(n - k + 1)
    return -factorial(n) * total


def H_negative_integer(n: int, m: int) -> float:
    """H_n(-m) = m! n! sum_{k=1}^n (-1)^(k-1) zeta(-m-k) / ((m+k)! (n-k+1)!), exactly."""
    if n < 1 or m < 0:
        raise DomainError("H_negative_integer needs n >= 1 and m >= 0")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += (-1) ** (k - 1) * zeta_nonpositive_int(m + k) / (
            factorial(m + k) * factorial(n - k + 1))
    return float(factorial(m) * factorial(n) * total)


def _zeta_prime_neg(k: int) -> float:
    if k % 2 == 0:
        return zeta_deriv_neg_even(k // 2)
    return zeta_deriv(-k).real


def H_integer(n: int, m: int) -> float:
    """H_n(m) for integers 2 <= m <= n, in closed form."""
    if not (isinstance(n, int) and isinstance(m, int) and 2 <= m <= n):
        raise DomainError("H_integer needs integers 2 <= m <= n")
    N = n - m + 1
    gE = CONSTANTS.euler_gamma
    binom_part = 0.0
    harmonic = 0.0
    for k in range(1, N):
        harmonic += 1.0 / k
        psi = -gE + harmonic                        # psi(k+1)
        z = float(zeta_nonpositive_int(k))
        binom_part += (-1) ** (k - 1) * comb(N, k) * (psi * z + _zeta_prime_neg(k))
    head = 0.0
    for k in range(1, m - 1):
        head += math.gamma(m - k) * riemann_zeta(m - k).real / factorial(n - k + 1)
    inner = (binom_part / factorial(N) + (CONSTANTS.log_two_pi - gE) / (2 * factorial(N))
             - head)
    return factorial(n) / math.gamma(m) * inner


def summation_identity_residual(n: int, a: complex, tol: float = DEFAULT_TOL) -> float:
    """|sum_{k>=0} Gamma(a+k) zeta(a+k)/(n+k+1)! + sum_{k=1}^n Gamma(a-k) zeta(a-k)/(n-k+1)!|.

    The infinite sum is taken as Gamma(a) / n! times the accelerated moment
    series, which avoids summing its algebraically decaying terms.
    """
    a = complex(a)
    if n < 1 or a.real >= n + 1:
        raise DomainError("summation_identity_residual needs n >= 1 and Re a < n + 1")
    if near_integer(a) and nearest_int(a) <= n:
        raise DegenerateParameterError("summation_identity_residual: a is an integer <= n")
    infinite = gamma(a) / factorial(n) * H_series(n, a, tol=tol).value
    finite = 0j
    for k in range(1, n + 1):
        finite += gamma(a - k) * riemann_zeta(a - k) / factorial(n - k + 1)
    return abs(infinite + finite)


def wilton_null_sum(alpha: complex, tol: float = DEFAULT_TOL) -> SeriesValue:
    """sum_{k>=1} (-alpha)_k / k! zeta(k - alpha) for Re alpha > 0 (expected 0).

    Evaluated as -1 + sum_{k>=1} (-alpha)_k / k! {zeta(k - alpha) - 1}, using
    sum_{k>=1} (-alpha)_k / k! = -1.
    """
    alpha = complex(alpha)
    if alpha.real <= 0:
        raise DomainError("wilton_null_sum needs Re alpha > 0")

    def terms():
        fact = 1.0
        seq = poch_hurwitz_seq(-alpha, 2.0)
        next(seq)
        for k, pz in enumerate(seq, start=1):
            fact *= k
            yield pz / fact

    return sum_series(terms(), tol) - 1.0


def bernoulli_binomial_identity(N: int) -> tuple[Fraction, Fraction]:
    """(sum_{k=2}^N C(N, k-1) B_k / k, (N-1) / (2(N+1))) as exact rationals."""
    if N < 2:
        raise DomainError("bernoulli_binomial_identity needs N >= 2")
    if N > BERNOULLI.max_index:
        raise DomainError(f"N exceeds the Bernoulli table ({BERNOULLI.max_index})")
    lhs = sum((comb(N, k - 1) * BERNOULLI[k] / k for k in range(2, N + 1)), Fraction(0))
    return lhs, Fraction(N - 1, 2 * (N + 1))
