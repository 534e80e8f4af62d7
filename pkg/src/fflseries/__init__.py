"""Exact computations around twisted power sums over F_q[theta]."""

from .algebra import (APoly, FieldSpec, FqElem, RationalForm, TPoly, UPoly, ZPoly, binom_mod_p,
                      chi_eval, exact_div, field_make, rational_reduce)
from .approximation import (LinearMapSpec, WagnerData, alpha_decompose, carlitz_approx, carlitz_constant,
                            chi_power, digit_principle_holds, gen_series, p_approx, pellarin_degree_sum,
                            wagner_coeff, wagner_product, wagner_truncated_eval)
from .carlitz import e_poly, e_shift, enumerate_below, enumerate_monic, factorials, m_one
from .powersums import DigitVector, boeckle_degree, phi_degree, power_sum, sheats_test, twisted_power_sum
from .specialpolys import SpecialPoly, l_value, trivial_zero_order, z_brute, z_recursive
from .verify import VerifyReport, run_suites

__version__ = "0.1.0"
