import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from zetaprod.errors import DomainError, PoleError
from zetaprod.hurwitz import (hurwitz_zeta, poch_hurwitz_seq, wilton_zeta_shift, zeta1,
                              zeta_minus_one, zeta_one_minus)
from zetaprod.special import riemann_zeta

from conftest import close


def test_examples():
    assert close(hurwitz_zeta(2, 1), math.pi**2 / 6, 1e-15)
    assert close(hurwitz_zeta(3, 0.5) - hurwitz_zeta(3, 1.5), 8.0, 1e-13)
    x = 0.25
    assert close(hurwitz_zeta(-1, x), -(x * x - x + 1 / 6) / 2, 1e-15)


def test_errors():
    with pytest.raises(PoleError):
        hurwitz_zeta(1, 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0.0)
    with pytest.raises(DomainError):
        zeta1(2, -0.1)


def test_array_input_keeps_shape():
    x = np.linspace(0.1, 3, 7)
    v = hurwitz_zeta(2.5, x)
    assert v.shape == (7,)
    assert close(v[3], hurwitz_zeta(2.5, float(x[3])), 1e-15)


@pytest.mark.parametrize("a", [2.5, -0.5, -3.7 + 2j, -12.25, 0.3 + 20j, 40.0, -2.0, -9.0,
                               1 + 1e-7j])
@pytest.mark.parametrize("x", [0.01, 0.37, 1.0, 2.5, 9.9])
def test_against_mpmath(a, x):
    ref = complex(mpmath.zeta(mpmath.mpmathify(a), x))
    val = hurwitz_zeta(a, x)
    assert close(val, ref, 1e-12) or abs(val - ref) <= 1e-12 * abs(ref)


def test_zeta1():
    assert close(zeta1(2.5, 0), riemann_zeta(2.5), 1e-15)
    assert close(zeta1(3, 1), riemann_zeta(3) - 1, 1e-14)
    assert zeta1(2 + 1j, 0.37) == hurwitz_zeta(2 + 1j, 1.37)
    assert close(zeta_minus_one(30), 2.0**-30, 1e-12, rel=False)


@given(st.floats(-3, 5), st.floats(-3, 3), st.floats(0.01, 2))
def test_recurrence(re, im, x):
    a = complex(re, im)
    if abs(a - 1) < 1e-3:
        return
    lhs = hurwitz_zeta(a, x)
    rhs = x ** (-a) + hurwitz_zeta(a, x + 1)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


@given(st.floats(2, 6))
def test_zeta1_monotone_and_lipschitz(a):
    x = np.linspace(0, 1, 41)
    v = zeta1(a, x).real
    assert np.all(np.diff(v) < 0)
    slope = np.abs(np.diff(v)) / np.diff(x)
    # the derivative of zeta_1(a, x) on [0, 1] is -a zeta(a+1, x+1), bounded by a zeta(a+1)
    assert slope.max() <= a * riemann_zeta(a + 1).real + 1e-9


def test_wilton_examples():
    r = wilton_zeta_shift(2, 1, 0)
    assert close(r.value, riemann_zeta(2), 1e-15)
    assert close(wilton_zeta_shift(3, 2, 0.5).value, hurwitz_zeta(3, 1.5), 1e-12)
    # at b = 2, x = 1 the series is zeta(2, 1) = pi^2 / 6
    assert close(wilton_zeta_shift(2, 2, 1).value, math.pi**2 / 6, 1e-12)


@given(st.floats(-2.5, 4), st.floats(-1, 1), st.floats(0.5, 3), st.floats(-0.8, 0.8))
def test_wilton_consistency(re, im, b, frac):
    a = complex(re, im)
    if abs(a - 1) < 1e-2:
        return
    x = frac * b
    r = wilton_zeta_shift(a, b, x)
    ref = hurwitz_zeta(a, b - x)
    assert r.converged
    assert abs(r.value - ref) <= 1e-10 * max(1.0, abs(ref))


def test_wilton_outside_disc_flags():
    r = wilton_zeta_shift(2, 1, 1.5)
    assert not r.converged and math.isinf(r.abs_error_estimate)


def test_zeta_one_minus():
    assert close(zeta_one_minus(3.3, 0).value, riemann_zeta(3.3), 1e-15)
    assert close(zeta_one_minus(2.5, 0.5).value, hurwitz_zeta(2.5, 0.5), 1e-12)
    x = 0.3
    # zeta(-2, 1 - x) = -B_3(1 - x) / 3
    y = 1 - x
    assert close(zeta_one_minus(-2, x).value, -(y**3 - 1.5 * y**2 + 0.5 * y) / 3, 1e-13)


def test_pole_term_convention():
    for m in range(6):
        seq = poch_hurwitz_seq(-m)
        terms = [next(seq) for _ in range(m + 3)]
        assert terms[m + 1] == pytest.approx((-1) ** m * math.factorial(m), rel=1e-14)
        assert terms[m + 2] == 0


def test_pole_term_is_continuous():
    c = -2 + 1e-9
    seq = poch_hurwitz_seq(c)
    t3 = [next(seq) for _ in range(4)][3]
    assert abs(t3 - 2.0) < 1e-7
