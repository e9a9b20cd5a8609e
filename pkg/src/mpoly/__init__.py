"""Exact generalized m-poly-Cauchy and m-poly-Bernoulli numbers and polynomials."""

from .exactnum import Params, PoleError, classic, fmt, make_params
from .polybernoulli import bernoulli_classic, build_h_table, h_explicit, mpb_explicit
from .polycauchy import FIRST, SECOND, CauchyKind, build_cauchy_table, mpc_number_explicit, pc_integral_oracle
from .polyfamilies import Polynomial, h_polynomial, mpb_polynomial, mpc_polynomial
from .stirling import r_stirling2, stirling1, stirling2, weighted_S, weighted_T

__all__ = [
    "CauchyKind",
    "FIRST",
    "Params",
    "PoleError",
    "Polynomial",
    "SECOND",
    "bernoulli_classic",
    "build_cauchy_table",
    "build_h_table",
    "classic",
    "fmt",
    "h_explicit",
    "h_polynomial",
    "make_params",
    "mpb_explicit",
    "mpb_polynomial",
    "mpc_number_explicit",
    "mpc_polynomial",
    "pc_integral_oracle",
    "r_stirling2",
    "stirling1",
    "stirling2",
    "weighted_S",
    "weighted_T",
]
