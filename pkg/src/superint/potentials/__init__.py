"""Potential constructors, Painleve residuals and determining-equation checks."""
from .core import (
    CallablePotential,
    Convention,
    ExtensionSpec,
    Potential1D,
    SingularExtensionError,
    deleting_equivalent,
    energy_half_from_full,
    extend_oscillator,
    extend_oscillator_via_seeds,
    extension_ladders,
    is_regular,
    oscillator,
    to_full_d2,
)
from .determining import N3Residuals, f_polynomials, n3_determining_residuals
from .painleve import DivisionByZeroSolution, is_solution, painleve_residual
from .q18 import P4_RATIONAL_EXAMPLE, NotAP4Solution, Q18Params, q18_potential, vd_potential

__all__ = [
    "CallablePotential",
    "Convention",
    "DivisionByZeroSolution",
    "ExtensionSpec",
    "N3Residuals",
    "NotAP4Solution",
    "P4_RATIONAL_EXAMPLE",
    "Potential1D",
    "Q18Params",
    "SingularExtensionError",
    "deleting_equivalent",
    "energy_half_from_full",
    "extend_oscillator",
    "extend_oscillator_via_seeds",
    "extension_ladders",
    "f_polynomials",
    "is_regular",
    "is_solution",
    "n3_determining_residuals",
    "oscillator",
    "painleve_residual",
    "q18_potential",
    "to_full_d2",
    "vd_potential",
]
