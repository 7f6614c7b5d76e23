import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from zetaprod.errors import DegenerateParameterError, DomainError, PoleError
from zetaprod.moments import (H_finite, H_integer, H_negative_integer, H_series, MomentSpec,
                              bernoulli_binomial_identity, summation_identity_residual,
                              wilton_null_sum)
from zetaprod.quadrature import oracle_moment

from conftest import close

EG = float(mpmath.euler)
LN2PI = math.log(2 * math.pi)
LNA = float(mpmath.log(mpmath.glaisher))
H32 = 1.5 * LN2PI - EG - 6 * LNA
H43 = 3 * LN2PI - 2 * EG - 12 * LNA - math.pi**2 / 12


def mp_moment(n, a):
    return complex(mpmath.quad(lambda x: x**n * mpmath.zeta(a, x), [0, 1]))


def test_moment_spec():
    s = MomentSpec(5, 3)
    assert (s.m, s.N) == (3, 3)
    assert MomentSpec(5, 2.5).m is None
    assert MomentSpec(3, -2).N is None
    with pytest.raises(DomainError):
        MomentSpec(-1, 0.5)
    with pytest.raises(PoleError):
        MomentSpec(3, 1).check()
    with pytest.raises(DomainError):
        MomentSpec(2, 3.5).check()


def test_series_examples():
    assert H_series(0, 0.5).value == 0
    assert close(H_series(1, 0).value, -1 / 12, 1e-14)
    assert close(H_series(3, 2).value, H32, 1e-12)
    assert close(H_series(MomentSpec(4, 3)).value, H43, 1e-12)


def test_finite_examples():
    assert close(H_finite(1, 0), -1 / 12, 1e-14)
    assert close(H_finite(3, 0.5), H_series(3, 0.5).value, 1e-11)
    assert close(H_finite(2, -0.5), oracle_moment(2, -0.5).value, 1e-9)
    with pytest.raises(DegenerateParameterError):
        H_finite(4, 3)
    with pytest.raises(DegenerateParameterError):
        H_finite(4, 3 + 1e-7j)
    with pytest.raises(PoleError):
        H_finite(3, 1)


def test_negative_integer():
    assert H_negative_integer(1, 0) == -1 / 12
    assert close(H_negative_integer(2, 1), -1 / 360, 1e-15)
    for n in range(1, 6):
        for m in range(0, 5):
            ref = float(mpmath.quad(lambda x: x**n * mpmath.bernpoly(m + 1, x), [0, 1])) / -(m + 1)
            assert close(H_negative_integer(n, m), ref, 1e-12)
            assert close(oracle_moment(n, -m).value, ref, 1e-12)


def test_integer_examples():
    assert close(H_integer(3, 2), H32, 1e-12)
    assert close(H_integer(4, 3), H43, 1e-12)
    assert close(H_integer(2, 2), oracle_moment(2, 2).value, 1e-9)
    assert close(H_integer(2, 2), mp_moment(2, 2), 1e-12)
    for bad in ((3, 1), (3, 4), (2, 0)):
        with pytest.raises(DomainError):
            H_integer(*bad)


@pytest.mark.parametrize("n", range(2, 9))
def test_integer_matches_series(n):
    for m in range(2, n + 1):
        assert abs(H_integer(n, m) - H_series(n, m).value) <= 1e-9


def test_summation_identity_examples():
    assert summation_identity_residual(3, 0.5) <= 1e-10
    assert summation_identity_residual(2, -0.3) <= 1e-10
    assert summation_identity_residual(1, 0.9) <= 1e-9
    with pytest.raises(DegenerateParameterError):
        summation_identity_residual(3, 2)


def test_wilton_null_examples():
    assert abs(wilton_null_sum(2.5).value) <= 1e-10
    assert abs(wilton_null_sum(1 + 1j).value) <= 1e-10
    assert abs(wilton_null_sum(0.1).value) <= 1e-8
    with pytest.raises(DomainError):
        wilton_null_sum(-0.5)


def test_bernoulli_binomial():
    assert bernoulli_binomial_identity(2) == (Fraction(1, 6), Fraction(1, 6))
    assert bernoulli_binomial_identity(3) == (Fraction(1, 4), Fraction(1, 4))
    for N in range(2, 61):
        lhs, rhs = bernoulli_binomial_identity(N)
        assert lhs == rhs
    with pytest.raises(DomainError):
        bernoulli_binomial_identity(1)


moment_args = st.tuples(st.integers(1, 6), st.floats(-3.0, 6.5), st.floats(-1.0, 1.0)).map(
    lambda t: (t[0], complex(t[1], t[2]))).filter(
    lambda na: na[1].real < na[0] + 0.9 and min(abs(na[1] - k) for k in range(-4, 8)) > 1e-2)


@given(moment_args)
def test_regime_agreement(na):
    n, a = na
    s = H_series(n, a).value
    assert abs(H_finite(n, a) - s) <= 1e-10 * max(1, abs(s))
    q = oracle_moment(n, a).value
    assert abs(q - s) <= 1e-8 * max(1, abs(s))


@given(moment_args)
def test_summation_identity_property(na):
    assert summation_identity_residual(*na) <= 1e-9


@given(st.floats(0.2, 5.0), st.floats(-2.0, 2.0))
def test_wilton_null_property(re, im):
    assert abs(wilton_null_sum(complex(re, im)).value) <= 1e-8
