"""Exact Riordan-array toolkit: classical (u, v) pairs and the central {g, f} description."""

from .series import (
    DomainError, Series, SeriesError, SeriesZeroDivisionError, TruncationError,
    catalan, compose, derivative, div, eq_to_order, pow_int, pow_rat, revert,
)
from .riordan import (
    AZPair, RiordanPair, SingularTriangleError, Triangle, a_sequence, entry,
    group_inv, group_mul, halves_formula, horizontal_half, is_hitting_time,
    reversal, triangle, triangle_invert, vertical_half, z_sequence,
)
from .central import (
    CentralPair, az_from_central, central_column, central_entry,
    central_from_az, central_inv, central_is_hitting_time, central_mul,
    central_triangle, chebyshev_moments, from_standard, half_of_lifted,
    reversal_pair_triangle, standard_inverse_pair, to_standard,
    vertical_antecedent,
)
from .exponential import (
    ExpCentralPair, ExpRiordanPair, exp_central_entry, exp_entry,
    exp_group_inv, exp_triangle,
)
from .exprlang import ExprSyntaxError, evaluate, parse, unparse

__version__ = "0.1.0"
