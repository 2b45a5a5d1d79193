"""Darboux-Crum chains and the ladder operators built from them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactmath import RationalFunction, WeightedFunction, as_weighted, log_laplacian_correction, wronskian
from .operator import DifferentialOperator, adjoint, compose


@dataclass(frozen=True)
class DarbouxChain:
    """First-order factors A_i = D + W_i generated by a list of seed functions."""

    seeds: tuple[WeightedFunction, ...]
    superpotentials: tuple[RationalFunction, ...]
    factors: tuple[DifferentialOperator, ...]
    wronskians: tuple[WeightedFunction, ...]

    @property
    def length(self) -> int:
        return len(self.seeds)

    def operator(self, hbar=1) -> DifferentialOperator:
        """The composed chain A_n ... A_1 (identity for an empty chain)."""
        out = DifferentialOperator.identity(hbar)
        for a in self.factors:
            out = compose(a, out)
        return out

    def potential_shift(self) -> tuple[RationalFunction, Fraction]:
        """-2 (log W(seeds))'' as (rational part, constant); zero for an empty chain."""
        if not self.seeds:
            return RationalFunction(), Fraction(0)
        return log_laplacian_correction(self.wronskians[-1])


def darboux_chain(seeds: Sequence) -> DarbouxChain:
    """Build the chain with W_i = -(log phi_i)', phi_i = W(seeds[:i+1]) / W(seeds[:i])."""
    seeds = tuple(as_weighted(s) for s in seeds)
    wrons: list[WeightedFunction] = []
    sups: list[RationalFunction] = []
    factors: list[DifferentialOperator] = []
    prev = WeightedFunction(1)
    for i in range(len(seeds)):
        w = wronskian(seeds[: i + 1])
        if w.is_zero():
            raise ValueError("degenerate seed set")
        phi = w / prev
        W = -phi.log_derivative()
        wrons.append(w)
        sups.append(W)
        factors.append(DifferentialOperator({1: 1, 0: W}))
        prev = w
    return DarbouxChain(seeds, tuple(sups), tuple(factors), tuple(wrons))


def chain_shift(adding: DarbouxChain, deleting: DarbouxChain) -> Fraction:
    """Constant c with V_deleting = V_adding + c; raises if the partners differ otherwise."""
    ra, ca = adding.potential_shift()
    rd, cd = deleting.potential_shift()
    diff = rd - ra
    if not diff.is_constant():
        raise ValueError("chains not equivalent")
    return diff.constant_value() + cd - ca


def ladder_from_chains(adding: DarbouxChain, deleting: DarbouxChain
                       ) -> tuple[DifferentialOperator, DifferentialOperator]:
    """c = Abar o A^+ and c^+ = A o Abar^+ for two chains reaching the same partner."""
    chain_shift(adding, deleting)
    A = adding.operator()
    Abar = deleting.operator()
    return compose(Abar, adjoint(A)), compose(A, adjoint(Abar))


def oscillator_ladders(hbar=1) -> tuple[DifferentialOperator, DifferentialOperator]:
    """b = D + x and b^+ = -D + x for H = -D^2 + x^2."""
    x = RationalFunction.x()
    return DifferentialOperator({1: 1, 0: x}, hbar), DifferentialOperator({1: -1, 0: x}, hbar)


def dressed_ladder(chain: DarbouxChain, lowering: DifferentialOperator | None = None
                   ) -> tuple[DifferentialOperator, DifferentialOperator]:
    """a = A o b o A^+ and a^+ = A o b^+ o A^+, carrying an H^(1) ladder to the partner."""
    if lowering is None:
        b, b_dag = oscillator_ladders()
    else:
        b, b_dag = lowering, adjoint(lowering)
    A = chain.operator()
    A_dag = adjoint(A)
    return compose(A, compose(b, A_dag)), compose(A, compose(b_dag, A_dag))
