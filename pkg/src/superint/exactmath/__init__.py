"""Exact polynomial, rational-function and Gaussian-weighted arithmetic."""
from .gaussian import GaussianRational, I
from .parse import ExpressionError, parse_rational_function
from .polynomial import Polynomial, as_fraction, fraction_to_str, poly_gcd
from .rational import RationalFunction
from .special import (
    below_ground_seed,
    determinant,
    hermite,
    log_laplacian_correction,
    oscillator_state,
    pseudo_hermite,
    wronskian,
    wronskian_matrix,
)
from .weighted import WeightedFunction, as_weighted

X = RationalFunction.x()

__all__ = [
    "ExpressionError",
    "GaussianRational",
    "I",
    "Polynomial",
    "RationalFunction",
    "WeightedFunction",
    "X",
    "as_fraction",
    "as_weighted",
    "below_ground_seed",
    "determinant",
    "fraction_to_str",
    "hermite",
    "log_laplacian_correction",
    "oscillator_state",
    "parse_rational_function",
    "poly_gcd",
    "pseudo_hermite",
    "wronskian",
    "wronskian_matrix",
]
