"""Symbolic differential operators, commutator algebra and Darboux-Crum chains."""
from .algebra import (
    ComplexCoefficient,
    PairKind,
    PairType,
    PHAReport,
    classify_pair,
    generic_commutator_coefficients,
    momentum_expansion,
    reduce_in_powers,
    schrodinger_commutator_coefficients,
    schrodinger_operator,
    verify_pha,
)
from .chains import (
    DarbouxChain,
    chain_shift,
    darboux_chain,
    dressed_ladder,
    ladder_from_chains,
    oscillator_ladders,
)
from .operator import DifferentialOperator, adjoint, commutator, compose, scalar_ratio

__all__ = [
    "ComplexCoefficient",
    "DarbouxChain",
    "DifferentialOperator",
    "PHAReport",
    "PairKind",
    "PairType",
    "adjoint",
    "chain_shift",
    "classify_pair",
    "commutator",
    "compose",
    "darboux_chain",
    "dressed_ladder",
    "generic_commutator_coefficients",
    "ladder_from_chains",
    "momentum_expansion",
    "oscillator_ladders",
    "reduce_in_powers",
    "scalar_ratio",
    "schrodinger_commutator_coefficients",
    "schrodinger_operator",
    "verify_pha",
]
