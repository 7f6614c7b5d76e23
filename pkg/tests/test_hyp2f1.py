import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from zetaprod.errors import DegenerateParameterError, DomainError, PoleError
from zetaprod.hyp2f1 import (appendixA_limit_check, appendixA_residuals, beta_fn, beta_rgamma,
                             gauss_2f1, h_mu, lemmaB1_residual, pochhammer)
from zetaprod.special import gamma

from conftest import close


def mp2f1(a, b, c, z):
    f = mpmath.mpmathify
    return complex(mpmath.hyp2f1(f(a), f(b), f(c), f(z)))


def test_pochhammer():
    assert pochhammer(0, 0) == 1
    assert pochhammer(3, 2) == 12
    for m in range(6):
        assert pochhammer(-m, m + 1) == 0


@given(st.complex_numbers(max_magnitude=5), st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_multiplicative(a, m, n):
    lhs = pochhammer(a, m + n)
    rhs = pochhammer(a, m) * pochhammer(a + m, n)
    assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))


def test_beta():
    assert close(beta_fn(1, 1), 1, 1e-15)
    assert close(beta_fn(2, 1), 0.5, 1e-15)
    assert close(beta_fn(0.75, 0.75), gamma(0.75) ** 2 / gamma(1.5), 1e-14)
    assert close(beta_fn(2.5 + 1j, -0.3), beta_fn(-0.3, 2.5 + 1j), 1e-15)
    assert close(beta_fn(300.5, 2.25), complex(mpmath.beta(300.5, 2.25)), 1e-12)
    with pytest.raises(PoleError):
        beta_fn(-1, 0.5)
    assert beta_rgamma(-1.5, -1.5) == 0


@pytest.mark.parametrize("z", [0.0, 0.3, -0.6, 0.69, 0.75, 0.95, 0.999, -0.999, 0.5 + 0.5j])
@pytest.mark.parametrize("abc", [(0.5, 1.5, 2.25), (2.3, 4.0, 5.0), (1 + 1j, -0.5, 3.3),
                                 (2.3, 1.7, 4.0), (1.0, 1.0, 2.0), (2.5, 3.5, 1.0)])
def test_against_mpmath(abc, z):
    a, b, c = abc
    ref = mp2f1(a, b, c, z)
    assert close(gauss_2f1(a, b, c, z).value, ref, 5e-12)


def test_examples():
    assert gauss_2f1(1.3, 2.2, 0.7, 0).value == 1
    z = 0.5
    assert close(gauss_2f1(1, 1, 2, z, tol=1e-16).value, -math.log(1 - z) / z, 1e-14)


def test_section_two_transformation():
    # 2F1(a, g; g+1; k/(k+1)) against the connection form used for the tail
    a, b, k = 2.3, 3.7, 5
    g = a + b - 1
    z = k / (k + 1)
    lhs = gauss_2f1(a, g, g + 1, z).value
    rhs = complex(mpmath.hyp2f1(a, g, g + 1, z))
    assert close(lhs, rhs, 1e-12)


def test_method_selection_and_degeneracy():
    a, b, c, z = 0.5, 1.5, 3.0, 0.9            # c - a - b = 1
    v = gauss_2f1(a, b, c, z).value
    assert close(v, mp2f1(a, b, c, z), 1e-12)
    with pytest.raises(DegenerateParameterError):
        gauss_2f1(0.5, 1.5, 3.0 + 1e-10, z, method="connection")
    with pytest.raises(DomainError):
        gauss_2f1(1, 1, 2, 1.5)


@given(st.floats(0.05, 0.49), st.floats(-2, 3), st.floats(-2, 3), st.floats(0.3, 4))
def test_transformation_consistency(z, a, b, c):
    s = gauss_2f1(a, b, c, z, method="series").value
    p = gauss_2f1(a, b, c, z, method="pfaff").value
    assert abs(s - p) <= 1e-11 * max(1.0, abs(s))


@given(st.floats(0.05, 0.6), st.floats(-2, 3), st.floats(-2, 3), st.floats(0.3, 4))
def test_contiguous_relation(z, a, b, c):
    f = lambda *args: gauss_2f1(*args, z).value
    r = c * f(a, b, c) - c * f(a + 1, b, c) + b * z * f(a + 1, b + 1, c + 1)
    assert abs(r) <= 1e-10 * max(1.0, abs(c * f(a + 1, b, c)))


def test_h_mu():
    xi = 1e-8
    assert abs(h_mu(2, 3, xi).value / xi - 2 / 3) <= 1e-6
    assert close(h_mu(1, 1, 0.5, tol=1e-16).value, math.log(2), 1e-14)
    with pytest.raises(DomainError):
        h_mu(1, -2, 0.5)


def test_first_order_limits():
    assert appendixA_limit_check(2.3, 3.7, 0.25, 1e-4) <= 1e3
    r1, r2 = appendixA_residuals(2.3, 3.7, 0.0, 1e-4)
    assert math.isnan(r1) and r2 == 0.0
    # fitted remainder exponent from two eps values is 2
    a, b, xi = 2.3, 3.7, 0.5
    e1, e2 = 1e-3, 1e-4
    q1 = appendixA_limit_check(a, b, xi, e1) * e1**2
    q2 = appendixA_limit_check(a, b, xi, e2) * e2**2
    assert abs(math.log(q1 / q2) / math.log(e1 / e2) - 2) < 0.01
    with pytest.raises(DegenerateParameterError):
        appendixA_limit_check(2.3, 3.0, 0.5, 1e-4)
    with pytest.raises(DomainError):
        appendixA_limit_check(2.3, 3.7, 0.5, 1e-2)


def test_second_limit_identity_at_half():
    a, b, xi, eps = 2.3, 3.7, 0.5, 1e-5
    _, r2 = appendixA_residuals(a, b, xi, eps)
    assert r2 * eps**2 <= 1e-8


def test_two_series_beta_identity():
    assert lemmaB1_residual(0, 0) <= 1e-14
    assert lemmaB1_residual(-1, 0) <= 1e-14
    assert lemmaB1_residual(2.5, 3.5) <= 1e-10
    with pytest.raises(DegenerateParameterError):
        lemmaB1_residual(2, 0.5)


@given(st.floats(-3, 4.5), st.floats(-1, 1), st.floats(-3, 4.5), st.floats(-1, 1))
def test_two_series_beta_identity_random(ar, ai, br, bi):
    a, b = complex(ar, ai), complex(br, bi)
    if min(abs(a - round(ar)), abs(b - round(br))) < 1e-3 and (ar > 0.5 or br > 0.5):
        return
    try:
        scale = max(1.0, abs(beta_rgamma(1 - a, 1 - b)))
        assert lemmaB1_residual(a, b) <= 1e-10 * scale
    except DegenerateParameterError:
        pass
