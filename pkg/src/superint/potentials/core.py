"""Exact one-dimensional potentials and the k-step oscillator extensions."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..diffop import DifferentialOperator, darboux_chain, ladder_from_chains
from ..exactmath import (
    Polynomial,
    RationalFunction,
    as_fraction,
    below_ground_seed,
    fraction_to_str,
    log_laplacian_correction,
    oscillator_state,
    pseudo_hermite,
    wronskian,
)


class Convention(str, Enum):
    HALF_P2 = "HalfP2"  # H = -(hbar^2/2) D^2 + V
    FULL_D2 = "FullD2"  # H = -D^2 + V


class SingularExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionSpec:
    ms: tuple[int, ...] = ()

    def __post_init__(self):
        ms = tuple(int(m) for m in self.ms)
        if any(m < 0 for m in ms):
            raise ValueError("extension indices must be nonnegative")
        if any(b <= a for a, b in zip(ms, ms[1:])):
            raise ValueError("extension indices must be strictly increasing")
        object.__setattr__(self, "ms", ms)

    @property
    def k(self) -> int:
        return len(self.ms)

    @property
    def mk(self) -> int:
        return self.ms[-1] if self.ms else 0

    def deleted_indices(self) -> list[int]:
        """Bound states used by the equivalent state-deleting chain."""
        skip = {self.mk - m for m in self.ms[:-1]}
        return [j for j in range(1, self.mk + 1) if j not in skip]


def is_regular(spec: ExtensionSpec) -> bool:
    """m_i even for odd i and odd for even i (1-based)."""
    return all(m % 2 == (0 if i % 2 == 1 else 1) for i, m in enumerate(spec.ms, start=1))


@dataclass(frozen=True)
class Potential1D:
    """quadratic*x^2 + rational_part(x) + constant, with exact coefficients.

    The polynomial part of ``rational_part`` never contains x^2 or constant
    terms; :meth:`build` moves them into ``quadratic`` and ``constant``.
    """

    quadratic: Fraction
    rational_part: RationalFunction
    constant: Fraction
    convention: Convention = Convention.FULL_D2
    hbar: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)
    half_line: bool = False
    label: str = ""
    notes: tuple[str, ...] = field(default=())

    @classmethod
    def build(cls, quadratic=0, rational=None, constant=0, **kw) -> "Potential1D":
        rational = RationalFunction() if rational is None else RationalFunction(0) + rational
        quadratic, constant = as_fraction(quadratic), as_fraction(constant)
        q, proper = rational.proper_split()
        quadratic += q[2]
        constant += q[0]
        leftover = q - Polynomial.monomial(2, q[2]) - q[0]
        kw = {k: (as_fraction(v) if k in ("hbar", "omega") else v) for k, v in kw.items()}
        return cls(quadratic, proper + leftover, constant, **kw)

    def as_rational(self) -> RationalFunction:
        return self.rational_part + Polynomial([self.constant, 0, self.quadratic])

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        return float(self.quadratic) * x_arr**2 + self.rational_part(x_arr) + float(self.constant)

    def minus(self, other: "Potential1D") -> RationalFunction:
        """Exact difference self - other as a rational function."""
        if self.convention != other.convention:
            raise ValueError("potentials use different conventions")
        return self.as_rational() - other.as_rational()

    def kinetic(self) -> Fraction:
        return Fraction(-1) if self.convention == Convention.FULL_D2 else -self.hbar**2 / 2

    def hamiltonian(self) -> DifferentialOperator:
        return DifferentialOperator({2: self.kinetic(), 0: self.as_rational()},
                                    self.hbar if self.convention == Convention.HALF_P2 else 1)

    def real_pole_count(self) -> int:
        den = self.rational_part.den
        return 0 if den.degree <= 0 else den.count_real_roots()

    def is_regular(self) -> bool:
        return self.real_pole_count() == 0

    def plus_constant(self, c) -> "Potential1D":
        return replace(self, constant=self.constant + as_fraction(c))

    def format(self, var: str = "x") -> str:
        parts = []
        if self.quadratic:
            q = self.quadratic
            parts.append(f"{var}^2" if q == 1 else f"{q}*{var}^2")
        if not self.rational_part.is_zero():
            parts.append(f"({self.rational_part.format(var)})")
        if self.constant or not parts:
            parts.append(str(self.constant))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def to_json(self) -> dict:
        return {
            "type": "Potential1D",
            "label": self.label,
            "convention": self.convention.value,
            "hbar": fraction_to_str(self.hbar),
            "omega": fraction_to_str(self.omega),
            "quadratic": fraction_to_str(self.quadratic),
            "rational_part": self.rational_part.to_json(),
            "constant": fraction_to_str(self.constant),
            "half_line": self.half_line,
            "regular": self.is_regular(),
            "expression": self.format(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Potential1D":
        return cls(
            as_fraction(data["quadratic"]),
            RationalFunction.from_json(data["rational_part"]),
            as_fraction(data["constant"]),
            Convention(data.get("convention", "FullD2")),
            as_fraction(data.get("hbar", "1/1")),
            as_fraction(data.get("omega", "1/1")),
            bool(data.get("half_line", False)),
            data.get("label", ""),
            tuple(data.get("notes", ())),
        )


@dataclass(frozen=True)
class CallablePotential:
    """Numeric potential for inputs that cannot be represented exactly."""

    func: Callable
    convention: Convention = Convention.HALF_P2
    hbar: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)
    half_line: bool = False
    label: str = ""

    def __call__(self, x):
        return np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)

    def kinetic(self) -> Fraction:
        return Fraction(-1) if self.convention == Convention.FULL_D2 else -self.hbar**2 / 2


def oscillator(convention: Convention = Convention.FULL_D2, hbar=1, omega=1) -> Potential1D:
    if convention == Convention.FULL_D2:
        return Potential1D.build(1, label="oscillator")
    omega = as_fraction(omega)
    return Potential1D.build(omega**2 / 2, convention=convention, hbar=hbar, omega=omega, label="oscillator")


def _hermite_wronskian(ms: Sequence[int]) -> Polynomial:
    w = wronskian([pseudo_hermite(m) for m in ms])
    return w.base.as_polynomial()


def extend_oscillator(spec: ExtensionSpec | Sequence[int]) -> Potential1D:
    """x^2 - 2k - 2 (log W(pseudo-Hermite seeds))'' in the -D^2 + V convention."""
    spec = spec if isinstance(spec, ExtensionSpec) else ExtensionSpec(tuple(spec))
    if not is_regular(spec):
        raise SingularExtensionError(f"singular extension {spec.ms}")
    if not spec.ms:
        return oscillator()
    rational, _ = log_laplacian_correction(_hermite_wronskian(spec.ms))
    pot = Potential1D.build(1, rational, -2 * spec.k, label=f"extension{list(spec.ms)}")
    if not pot.is_regular():
        raise SingularExtensionError(f"singular extension {spec.ms}: denominator has real zeros")
    return pot


def extend_oscillator_via_seeds(spec: ExtensionSpec) -> Potential1D:
    """Same potential, built from the Gaussian-dressed seeds directly (no regularity gate)."""
    if not spec.ms:
        return oscillator()
    rational, const = log_laplacian_correction(wronskian([below_ground_seed(m) for m in spec.ms]))
    return Potential1D.build(1, rational, const)


def deleting_equivalent(spec: ExtensionSpec | Sequence[int]) -> Potential1D:
    """Partner of x^2 after deleting the bound states listed by ``spec.deleted_indices()``."""
    spec = spec if isinstance(spec, ExtensionSpec) else ExtensionSpec(tuple(spec))
    if not is_regular(spec):
        raise SingularExtensionError(f"singular extension {spec.ms}")
    if spec.mk < spec.k:
        raise ValueError(f"state-deleting chain is empty for {spec.ms} (needs m_k >= k)")
    seeds = [oscillator_state(j) for j in spec.deleted_indices()]
    rational, const = log_laplacian_correction(wronskian(seeds))
    return Potential1D.build(1, rational, const, label=f"deleting{spec.deleted_indices()}")


def extension_ladders(spec: ExtensionSpec | Sequence[int]
                      ) -> tuple[DifferentialOperator, DifferentialOperator, DifferentialOperator]:
    """(H, c, c_dag) for the extended oscillator, with c built from the two equivalent chains."""
    spec = spec if isinstance(spec, ExtensionSpec) else ExtensionSpec(tuple(spec))
    H = extend_oscillator(spec).hamiltonian()
    if not spec.ms:
        x = RationalFunction.x()
        return H, DifferentialOperator({1: 1, 0: x}), DifferentialOperator({1: -1, 0: x})
    if spec.mk < spec.k:
        raise ValueError(f"state-deleting chain is empty for {spec.ms} (needs m_k >= k)")
    adding = darboux_chain([below_ground_seed(m) for m in spec.ms])
    deleting = darboux_chain([oscillator_state(j) for j in spec.deleted_indices()])
    c, c_dag = ladder_from_chains(adding, deleting)
    return H, c, c_dag


def to_full_d2(pot: Potential1D) -> Potential1D:
    """Map a HalfP2 potential to FullD2 via x = sqrt(hbar/omega) xi, E_full = 2E/(hbar omega)."""
    if pot.convention == Convention.FULL_D2:
        return pot
    h, w = pot.hbar, pot.omega
    r = h / w
    scale = 2 / (h * w)
    rational = pot.rational_part
    rational = rational.substitute_square(r) if rational.is_even() else _scale_exact(rational, r)
    return Potential1D.build(pot.quadratic * r * scale, rational * scale, pot.constant * scale,
                             half_line=pot.half_line, label=pot.label)


def energy_half_from_full(e_full, hbar=1, omega=1) -> Fraction:
    return as_fraction(e_full) * as_fraction(hbar) * as_fraction(omega) / 2


def _scale_exact(rf: RationalFunction, r: Fraction) -> RationalFunction:
    root = _rational_sqrt(r)
    if root is None:
        raise ValueError(f"cannot rescale a non-even function by sqrt({r}) exactly")
    return rf.scale_argument(root)


def _rational_sqrt(r: Fraction) -> Fraction | None:
    from math import isqrt

    n, d = r.numerator, r.denominator
    if n < 0:
        return None
    sn, sd = isqrt(n), isqrt(d)
    return Fraction(sn, sd) if sn * sn == n and sd * sd == d else None
