"""Explicit formulas for summatory arithmetic functions via zeta zeros."""

from .arith import AFI, ArithmeticFunctionId, arith_table, arith_value, summatory_exact, summatory_midpoint
from .dirichlet import APApproxParams, approximate_pi_ap, c_bias, characters_mod, e_term
from .errors import ZetaExplicitError
from .formulas import approximate, descriptor, real_zero_term, rvm_pi, smooth_part, zero_term
from .gibbs import first_peak, gibbs_constant, measure_overshoot
from .perron import RectangleContour, integrate_line, integrate_rectangle, residue_vs_rectangle
from .special import dirichlet_l, exp_integral_ei, li, zeta, zeta_derivative
from .zeros import ZeroCatalog, default_l_catalog, default_zeta_catalog, load_zeros, validate

__all__ = [
    "AFI", "APApproxParams", "ArithmeticFunctionId", "RectangleContour", "ZeroCatalog", "ZetaExplicitError",
    "approximate", "approximate_pi_ap", "arith_table", "arith_value", "c_bias", "characters_mod",
    "default_l_catalog", "default_zeta_catalog", "descriptor", "dirichlet_l", "e_term", "exp_integral_ei",
    "first_peak", "gibbs_constant", "integrate_line", "integrate_rectangle", "li", "load_zeros",
    "measure_overshoot", "real_zero_term", "residue_vs_rectangle", "rvm_pi", "smooth_part",
    "summatory_exact", "summatory_midpoint", "validate", "zero_term", "zeta", "zeta_derivative",
]
