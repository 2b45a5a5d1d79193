"""The fourth-Painleve superintegrable potential and the ladder-type 1D potentials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from ..exactmath import Polynomial, RationalFunction, as_fraction
from .core import CallablePotential, Convention, Potential1D, _rational_sqrt
from .painleve import painleve_residual


class NotAP4Solution(ValueError):
    pass


# The rational P4 solution with (alpha, beta) = (5, -8).
P4_RATIONAL_EXAMPLE = RationalFunction(
    Polynomial.x() * Polynomial([-1, 0, 2]) * Polynomial([3, 0, 2]) * 4,
    Polynomial([1, 0, 2]) * Polynomial([3, 0, 0, 0, 4]),
)


@dataclass(frozen=True)
class Q18Params:
    hbar: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)
    p4_solution: RationalFunction | Callable = P4_RATIONAL_EXAMPLE
    alpha: Fraction = Fraction(5)
    beta: Fraction = Fraction(-8)
    epsilon: int = 1
    offset: Fraction | None = None  # replaces hbar*omega*(epsilon - alpha)/3 when given

    def __post_init__(self):
        for name in ("hbar", "omega", "alpha", "beta"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.offset is not None:
            object.__setattr__(self, "offset", as_fraction(self.offset))
        if self.hbar <= 0 or self.omega <= 0:
            raise ValueError("hbar and omega must be positive")
        if self.epsilon not in (-1, 1):
            raise ValueError("epsilon must be +1 or -1")

    @property
    def exact(self) -> bool:
        return isinstance(self.p4_solution, (RationalFunction, Polynomial))

    def constant(self) -> Fraction:
        if self.offset is not None:
            return self.offset
        return self.hbar * self.omega * (self.epsilon - self.alpha) / 3


def _dressing(f: RationalFunction, epsilon: int) -> RationalFunction:
    """f^2/2 + z f + (epsilon/2) f' as a function of the scaled variable z."""
    z = RationalFunction.x()
    return f * f / 2 + z * f + f.derivative() * Fraction(epsilon, 2)


def _unscale(g: RationalFunction, r: Fraction) -> RationalFunction:
    """g(sqrt(r) x), exactly."""
    if g.is_even():
        return g.substitute_square(r)
    root = _rational_sqrt(r)
    if root is None:
        raise ValueError(f"P4 term is not even and sqrt({r}) is irrational; use a numeric solution")
    return g.scale_argument(root)


def _numeric_dressing(f: Callable, epsilon: int, step: float = 1e-4) -> Callable:
    def g(z):
        z = np.asarray(z, dtype=float)
        fz = np.asarray(f(z), dtype=float)
        fp = (np.asarray(f(z + step)) - np.asarray(f(z - step))) / (2 * step)
        return fz * fz / 2 + z * fz + epsilon * fp / 2

    return g


def q18_potential(params: Q18Params = Q18Params()) -> tuple[Potential1D | CallablePotential, Potential1D]:
    """(x-part, y-part) of the potential, H = p^2/2 + V in units with explicit hbar, omega.

    The x-part is omega^2 x^2/2 + hbar omega [f^2/2 + z f + (eps/2) f'](z) + offset
    with z = sqrt(omega/hbar) x; the y-part is the oscillator omega^2 y^2/2.
    """
    h, w = params.hbar, params.omega
    y_part = Potential1D.build(w * w / 2, convention=Convention.HALF_P2, hbar=h, omega=w, label="q18-y")
    if params.exact:
        f = RationalFunction(0) + params.p4_solution
        if f.is_zero() or not painleve_residual(4, f, (params.alpha, params.beta)).is_zero():
            raise NotAP4Solution(f"not a P4 solution for given (alpha, beta) = ({params.alpha}, {params.beta})")
        g = _unscale(_dressing(f, params.epsilon), w / h) * (h * w)
        x_part = Potential1D.build(w * w / 2, g, params.constant(), convention=Convention.HALF_P2,
                                   hbar=h, omega=w, label="q18-x")
        return x_part, y_part
    g = _numeric_dressing(params.p4_solution, params.epsilon)
    scale, hw, c, quad = float(np.sqrt(w / h)), float(h * w), float(params.constant()), float(w * w / 2)
    x_part = CallablePotential(lambda x: quad * x * x + hw * g(scale * x) + c, Convention.HALF_P2, h, w,
                               label="q18-x")
    return x_part, y_part


def vd_potential(case: str, alpha1=1, hbar=1, beta=0, p4_solution=None, epsilon: int = 1,
                 k1=0, p4_params=None) -> Potential1D | CallablePotential:
    """Ladder-type potentials d1 (oscillator), d2 (singular oscillator), d3 (P4-dressed)."""
    a, h = as_fraction(alpha1), as_fraction(hbar)
    if a == 0 or h <= 0:
        raise ValueError("need alpha1 != 0 and hbar > 0")
    omega = abs(a) / h
    common = dict(convention=Convention.HALF_P2, hbar=h, omega=omega)
    if case == "d1":
        return Potential1D.build(a * a / (2 * h * h), label="d1", **common)
    if case == "d2":
        b = as_fraction(beta)
        notes = ()
        if b < -h * h / 8:
            notes = (f"beta = {b} below -hbar^2/8: attractive 1/x^2 barrier, Hamiltonian not bounded below",)
        rational = RationalFunction(b, Polynomial.monomial(2)) if b else None
        return Potential1D.build(a * a / (8 * h * h), rational, label="d2", half_line=True, notes=notes, **common)
    if case != "d3":
        raise ValueError(f"unknown ladder potential {case!r}; expected d1, d2 or d3")
    if epsilon not in (-1, 1):
        raise ValueError("epsilon must be +1 or -1")
    if p4_solution is None:
        raise ValueError("d3 needs a P4 solution")
    const = (epsilon - 1) * a / 3 - h * h * as_fraction(k1) / 6
    if isinstance(p4_solution, (RationalFunction, Polynomial)):
        f = RationalFunction(0) + p4_solution
        if p4_params is not None and not painleve_residual(4, f, p4_params).is_zero():
            raise NotAP4Solution(f"not a P4 solution for given (alpha, beta) = {tuple(p4_params)}")
        g = _unscale(_dressing(f, epsilon), omega / h) * (h * omega)
        return Potential1D.build(a * a / (2 * h * h), g, const, label="d3", **common)
    g = _numeric_dressing(p4_solution, epsilon)
    scale, hw = float(np.sqrt(omega / h)), float(h * omega)
    quad, c = float(a * a / (2 * h * h)), float(const)
    return CallablePotential(lambda x: quad * x * x + hw * g(scale * x) + c, Convention.HALF_P2, h, omega,
                             label="d3")
