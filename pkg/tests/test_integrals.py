import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from zetaprod.errors import DegenerateParameterError, DomainError, PoleError
from zetaprod.integrals import (Degeneracy, I_critical_line, I_via_2f1, I_via_zeta, J_M0,
                                J_critical_line, J_via_2f1, J_via_alt, J_via_zeta, ParameterPair,
                                RepresentationId, evaluate, integer_limit, zeta_sum_terms)
from zetaprod.quadrature import oracle_I, oracle_J
from zetaprod.special import CONSTANTS, digamma, gamma, riemann_zeta

from conftest import close

P = ParameterPair
I_REPS = (I_via_2f1, I_via_zeta)
J_REPS = (J_via_2f1, J_via_zeta, J_via_alt)
admissible = st.tuples(st.floats(1.2, 5.0), st.floats(-0.6, 0.6),
                       st.floats(1.2, 5.0), st.floats(-0.6, 0.6)).map(
    lambda v: (complex(v[0], v[1]), complex(v[2], v[3]))).filter(
    lambda ab: all(abs(z - round(z.real)) > 1e-3 for z in ab))


def test_parameter_pair_classification():
    assert P(2.3, 3.7).gamma == 5.0
    assert P(2.3, 3.6).degeneracy is Degeneracy.GENERIC
    assert P(1 + 1e-9, 3.5).degeneracy is Degeneracy.POLE_AT_ONE
    assert P(2, 3.5).degeneracy is Degeneracy.A_INTEGER
    assert P(2.5, -3).degeneracy is Degeneracy.B_INTEGER
    assert P(2.3, 3.7).degeneracy is Degeneracy.SUM_INTEGER
    assert P(2, 3).flags == {Degeneracy.A_INTEGER, Degeneracy.B_INTEGER, Degeneracy.SUM_INTEGER}
    assert P(2 + 1j, 3).swapped() == P(3, 2 + 1j)
    assert P(2 + 1j, 3 - 2j).conj() == P(2 - 1j, 3 + 2j)
    assert {r.value for r in RepresentationId} == {"I_2F1", "I_ZETA", "J_2F1", "J_ZETA", "J_ALT"}


def test_i_examples():
    assert close(I_via_2f1(P(2, 2)).value, oracle_I(2, 2).value, 1e-8)
    assert close(I_via_2f1(P(2.3, 3.7)).value, I_via_zeta(P(2.3, 3.7)).value, 1e-9)
    assert close(I_via_2f1(P(2.1, 4.2)).value, I_via_2f1(P(4.2, 2.1)).value, 1e-12)
    assert close(I_via_zeta(P(2.3, 3.7)).value, oracle_I(2.3, 3.7).value, 1e-8)
    p = P(2 + 1j, 3 - 0.5j)
    assert close(I_via_zeta(p.conj()).value, I_via_zeta(p).value.conjugate(), 1e-13)


def test_i_against_mpmath_quadrature():
    a, b = 2.5, 3.25
    ref = float(mpmath.quad(lambda x: mpmath.zeta(a, 1 + x) * mpmath.zeta(b, 1 + x), [0, 1]))
    assert close(I_via_zeta(P(a, b)).value, ref, 1e-12)


def test_i_refusals():
    with pytest.raises(DegenerateParameterError):
        I_via_zeta(P(2, 3.5))
    with pytest.raises(DegenerateParameterError, match="I_critical_line"):
        I_via_zeta(P(0.5 + 1j, 0.5 - 1j))
    with pytest.raises(PoleError):
        I_via_zeta(P(1, 2.5))
    with pytest.raises(DomainError):
        I_via_2f1(P(0.5, 2.5))


def test_i_critical_line():
    for t in (0.0, 1.0):
        s = complex(0.5, t)
        v = I_critical_line(t).value
        assert v.imag == 0
        assert close(v, oracle_I(s, s.conjugate()).value, 1e-7)
    # t = 0 from the series written out directly
    s = 0.5
    tail = sum(float(mpmath.zeta(n + s) - 1) / (n + s) for n in range(80))
    direct = CONSTANTS.euler_gamma - CONSTANTS.log_two_pi + digamma(0.5).real - 2 * tail
    assert close(I_critical_line(0).value, direct, 1e-12)


def test_j_m0():
    with pytest.raises(DegenerateParameterError):
        J_M0(P(2, 2))
    # 1/Gamma(2 - a - b) vanishes when a + b is an integer >= 2
    assert J_M0(P(2.5, 3.5)) == 0
    assert J_M0(P(2.3, 3.7)) == 0
    a, b = 2.25, 3.5
    B = gamma(1 - a) * gamma(1 - b) / gamma(2 - a - b)
    g = a + b - 1
    assert close(J_M0(P(a, b)), B * (riemann_zeta(g) - 1 - 2**-g), 1e-13)


def test_j_examples():
    assert close(J_via_zeta(P(2.3, 3.7)).value, oracle_J(2.3, 3.7).value, 1e-8)
    assert close(J_via_zeta(P(2.1, 4.2)).value, J_via_zeta(P(4.2, 2.1)).value, 1e-12)
    p = P(2.5, 2.5 + 0.5j)
    vals = [f(p).value for f in J_REPS]
    assert max(abs(x - vals[0]) for x in vals) <= 1e-9
    assert close(J_via_alt(P(2.3, 3.7)).value, J_via_zeta(P(2.3, 3.7)).value, 1e-9)
    assert close(J_via_2f1(P(2.5, 3.5)).value, J_via_zeta(P(2.5, 3.5)).value, 1e-9)
    assert close(J_via_2f1(P(2.3, 3.7)).value, oracle_J(2.3, 3.7).value, 1e-8)
    with pytest.raises(DegenerateParameterError):
        J_via_alt(P(2, 3.5))
    q = P(2.2 + 1j, 3.1 - 1j)
    assert close(J_via_alt(q.conj()).value, J_via_alt(q).value.conjugate(), 1e-13)


def test_alternating_structure():
    plain = zeta_sum_terms(2.3, 3.7, 6)
    alt = zeta_sum_terms(2.3, 3.7, 6, alternating=True)
    for n in range(6):
        assert alt[n] / plain[n] == (-1) ** n


def test_j_critical_line():
    for t in (0.5, 1.0):
        s = complex(0.5, t)
        v = J_critical_line(t).value
        assert v.imag == 0
        assert close(v, oracle_J(s, s.conjugate()).value, 1e-7)
    # at t = 10 the cosh term is negligible and the alternating sum carries the value
    s = complex(0.5, 10)
    alt = sum((-1) ** n * complex(mpmath.zeta(s + n) - 1) / (s + n) for n in range(60)).real
    assert 2.5 * math.pi / math.cosh(10 * math.pi) < 1e-12
    assert close(J_critical_line(10).value, -2 * alt, 1e-12)


def test_integer_limits():
    p = P(2, 3)
    ref = oracle_J(2, 3).value
    assert close(integer_limit(J_via_zeta, p).value, ref, 1e-10)
    assert close(evaluate(RepresentationId.J_ALT, p).value, ref, 1e-10)
    assert close(evaluate("I_ZETA", P(2, 2)).value, I_via_2f1(P(2, 2)).value, 1e-10)


@given(admissible)
def test_exchange_symmetry(ab):
    a, b = ab
    for f in I_REPS + J_REPS:
        x, y = f(P(a, b)).value, f(P(b, a)).value
        assert abs(x - y) <= 1e-11 * max(1.0, abs(x))


@given(admissible)
def test_representation_agreement(ab):
    p = P(*ab)
    i1, i2 = (f(p).value for f in I_REPS)
    assert abs(i1 - i2) <= 1e-9 * max(1.0, abs(i2))
    j = [f(p).value for f in J_REPS]
    assert max(abs(x - j[1]) for x in j) <= 1e-9 * max(1.0, abs(j[1]))


@given(admissible)
def test_oracle_agreement(ab):
    a, b = ab
    oi, oj = oracle_I(a, b).value, oracle_J(a, b).value
    assert abs(I_via_zeta(P(a, b)).value - oi) <= 1e-8 * max(1.0, abs(oi))
    assert abs(J_via_zeta(P(a, b)).value - oj) <= 1e-8 * max(1.0, abs(oj))


@given(st.floats(1.2, 5.0), st.floats(1.2, 5.0))
def test_positivity(a, b):
    assert I_via_2f1(P(a, b)).value.real > 0
    assert evaluate(RepresentationId.J_ZETA, P(a, b)).value.real > 0


@given(admissible)
def test_conjugate_symmetry(ab):
    p = P(*ab)
    for f in (I_via_zeta, J_via_zeta):
        assert abs(f(p.conj()).value - f(p).value.conjugate()) <= 1e-12 * max(1.0, abs(f(p).value))
