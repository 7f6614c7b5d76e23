import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from zetaprod.errors import ConvergenceError, DomainError, PoleError
from zetaprod.quadrature import (QuadratureConfig, integrate_unit_interval, oracle_I, oracle_Istar,
                                 oracle_J, oracle_Jstar, oracle_moment)

from conftest import close


def test_constant_and_endpoint_singularity():
    assert abs(integrate_unit_interval(lambda x: np.ones_like(x)).value - 1) <= 1e-14
    assert close(integrate_unit_interval(lambda x: x**-0.5).value, 2, 1e-12)
    r = integrate_unit_interval(lambda x, xc: xc**-0.5, complement=True)
    assert close(r.value, 2, 1e-12)


@pytest.mark.parametrize("deg", range(11))
def test_polynomials(deg):
    coeffs = np.arange(1, deg + 2, dtype=float)
    exact = sum(c / (i + 1) for i, c in enumerate(coeffs))
    r = integrate_unit_interval(lambda x: np.polyval(coeffs[::-1], x))
    assert abs(r.value - exact) <= 1e-13 * max(1, exact)


def test_log_singularity():
    r = integrate_unit_interval(lambda x, xc: np.log(x) * np.log(xc), complement=True)
    assert close(r.value, 2 - math.pi**2 / 6, 1e-12)


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(singularity_flags=(-1.0, 0.0))
    with pytest.raises(DomainError):
        QuadratureConfig(singularity_flags=(0.0, -1.5 + 2j))
    QuadratureConfig(singularity_flags=(-0.9, -0.5))


def test_nonconvergence_reported():
    cfg = QuadratureConfig(max_level=4, min_level=1, target_abs_error=1e-16)
    with pytest.raises(ConvergenceError):
        integrate_unit_interval(lambda x: np.sin(200 * x), cfg)


def test_nonfinite_integrand():
    with pytest.raises(ConvergenceError):
        integrate_unit_interval(lambda x: np.where(x > 0.5, np.inf, 1.0))


def test_evaluations_grow_with_level():
    counts = [integrate_unit_interval(lambda x: np.exp(x),
                                      QuadratureConfig(min_level=L, max_level=L,
                                                       target_abs_error=1.0)).evaluations
              for L in (1, 2, 3, 4)]
    assert counts == sorted(counts) and len(set(counts)) == 4


def test_oracles_against_mpmath():
    a, b = 2.5, 3.25
    ref_i = mpmath.quad(lambda x: mpmath.zeta(a, 1 + x) * mpmath.zeta(b, 1 + x), [0, 1])
    ref_j = mpmath.quad(lambda x: mpmath.zeta(a, 1 + x) * mpmath.zeta(b, 2 - x), [0, 1])
    assert close(oracle_I(a, b).value, float(ref_i), 1e-10)
    assert close(oracle_J(a, b).value, float(ref_j), 1e-10)
    ref_m = mpmath.quad(lambda x: x**2 * mpmath.zeta(0.5, x), [0, 1])
    assert close(oracle_moment(2, 0.5).value, float(ref_m), 1e-10)


def test_oracle_special_values():
    assert abs(oracle_moment(0, 0.5).value) <= 1e-10
    assert close(oracle_moment(1, 0).value, -1 / 12, 1e-10)
    assert close(oracle_Jstar(0, 0).value, -1 / 12, 1e-10)
    # int_0^1 (1/2 - x)^2 dx
    assert close(oracle_Istar(0, 0).value, 1 / 12, 1e-10)


def test_oracle_domains():
    with pytest.raises(PoleError):
        oracle_I(1, 2.5)
    with pytest.raises(PoleError):
        oracle_moment(3, 1)
    with pytest.raises(DomainError):
        oracle_moment(1, 2.5)
    with pytest.raises(DomainError):
        oracle_Istar(0.6, 0.6)
    with pytest.raises(DomainError):
        oracle_Jstar(1.2, 0.0)


@given(st.floats(1.2, 5.0), st.floats(1.2, 5.0))
def test_oracle_J_symmetric(a, b):
    x, y = oracle_J(a, b).value, oracle_J(b, a).value
    assert abs(x - y) <= 1e-10 * max(1, abs(x))
