"""Integrals and doubly infinite sums of products of Hurwitz zeta functions."""

import sys

from .double_sums import (DoubleSumTerm, S1_closed, S1_direct, S1_finite, S2_closed,
                          S2_direct, S2_integer_sum)
from .errors import (ConvergenceError, DegenerateParameterError, DomainError, PoleError,
                     ZetaprodError)
from .hurwitz import hurwitz_zeta, wilton_zeta_shift, zeta1, zeta_one_minus
from .hyp2f1 import (appendixA_limit_check, beta_fn, gauss_2f1, h_mu, lemmaB1_residual,
                     pochhammer)
from .integrals import (I_critical_line, I_via_2f1, I_via_zeta, J_M0, J_critical_line,
                        J_via_2f1, J_via_alt, J_via_zeta, ParameterPair, RepresentationId,
                        evaluate, integer_limit)
from .moments import (H_finite, H_integer, H_negative_integer, H_series, MomentSpec,
                      bernoulli_binomial_identity, summation_identity_residual,
                      wilton_null_sum)
from .quadrature import (QuadratureConfig, QuadratureResult, integrate_unit_interval,
                         oracle_I, oracle_Istar, oracle_J, oracle_Jstar, oracle_moment)
from .series import SeriesValue
from .special import (CONSTANTS, digamma, gamma, loggamma, riemann_zeta,
                      riemann_zeta_near_one, zeta_deriv, zeta_deriv_neg_even)
from .bernoulli import BERNOULLI, BernoulliTable

__version__ = "0.1.0"

__all__ = [name for name, obj in globals().items()
           if not name.startswith("_") and not isinstance(obj, type(sys))]
