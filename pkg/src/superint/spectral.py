"""Finite-difference eigensolver and quadrature checks used as a numerical oracle."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.integrate import trapezoid
from scipy.linalg import eigh_tridiagonal

from .diffop import DifferentialOperator
from .exactmath import WeightedFunction, as_weighted
from .potentials import CallablePotential, Convention, Potential1D

GRID_ENV = "SUPERINT_GRID_POINTS"


@dataclass(frozen=True)
class GridConfig:
    half_width: float = 12.0
    n: int = 4001
    cutoff: float = 1e-4  # left edge for half-line problems

    def __post_init__(self):
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.n < 5 or self.n % 2 == 0:
            raise ValueError(f"grid points must be odd and >= 5, got {self.n}")

    @classmethod
    def from_env(cls, **kw) -> "GridConfig":
        value = os.environ.get(GRID_ENV)
        if value:
            kw.setdefault("n", int(value))
        return cls(**kw)

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.n)


@dataclass
class NumericSpectrum:
    eigenvalues: np.ndarray
    estimated_error: np.ndarray
    convention: Convention
    cutoff_sensitivity: float | None = None

    def strictly_increasing(self, gap: float = 1e-6) -> bool:
        return bool(np.all(np.diff(self.eigenvalues) > gap))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "eigenvalue", "error"])
        for i, (e, err) in enumerate(zip(self.eigenvalues, self.estimated_error)):
            w.writerow([i, repr(float(e)), repr(float(err))])
        return buf.getvalue()

    def to_json(self) -> dict:
        out = {
            "convention": self.convention.value,
            "eigenvalues": [float(e) for e in self.eigenvalues],
            "estimated_error": [float(e) for e in self.estimated_error],
        }
        if self.cutoff_sensitivity is not None:
            out["cutoff_sensitivity"] = self.cutoff_sensitivity
        return out


def _kinetic(V, convention: Convention | None, hbar) -> tuple[float, Convention]:
    if isinstance(V, (Potential1D, CallablePotential)):
        return -float(V.kinetic()), V.convention
    conv = convention or Convention.FULL_D2
    return (1.0 if conv == Convention.FULL_D2 else float(Fraction(hbar)) ** 2 / 2), conv


def _lowest(V: Callable, kappa: float, a: float, b: float, n: int, count: int
            ) -> tuple[np.ndarray, float]:
    """Lowest eigenvalues of -kappa D^2 + V on [a, b] (Dirichlet, n points incl. ends) and ||T||_inf."""
    x = np.linspace(a, b, n)[1:-1]
    h = (b - a) / (n - 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        v = np.asarray(V(x), dtype=float) * np.ones_like(x)
    bad = np.flatnonzero(~np.isfinite(v))
    if bad.size:
        raise ValueError(f"potential is singular on the grid at x = {float(x[bad[0]])!r}")
    if count > x.size:
        raise ValueError(f"requested {count} eigenvalues from a {x.size}-point grid")
    diag = 2 * kappa / h**2 + v
    off = np.full(x.size - 1, -kappa / h**2)
    vals = eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, count - 1))
    return vals, float(np.max(np.abs(diag)) + 2 * kappa / h**2)


def _richardson(V, kappa, a, b, n, count) -> tuple[np.ndarray, np.ndarray]:
    """Extrapolate over n, 2n-1, 4n-3 points.

    The error estimate is the change between the two extrapolations, floored
    by the bisection rounding level eps*||T|| of the finest matrix.
    """
    (e1, _), (e2, _), (e3, norm) = (_lowest(V, kappa, a, b, m, count) for m in (n, 2 * n - 1, 4 * n - 3))
    r12 = (4 * e2 - e1) / 3
    r23 = (4 * e3 - e2) / 3
    return r23, np.maximum(np.abs(r23 - r12), np.finfo(float).eps * norm)


def eigenvalues(V, cfg: GridConfig | None = None, count: int = 5,
                convention: Convention | None = None, hbar=1) -> NumericSpectrum:
    """Lowest ``count`` bound-state energies of -k D^2 + V by second-order finite differences.

    Energies are Richardson-extrapolated over grids of n, 2n-1 and 4n-3 points;
    the error estimate is the change between the two extrapolations.  Half-line
    potentials are solved on [cutoff, L], repeated at cutoff/2 to measure the
    sensitivity to the inner boundary.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    cfg = cfg or GridConfig.from_env()
    kappa, conv = _kinetic(V, convention, hbar)
    L = cfg.half_width
    if getattr(V, "half_line", False):
        vals, err = _richardson(V, kappa, cfg.cutoff, L, cfg.n, count)
        alt, _ = _richardson(V, kappa, cfg.cutoff / 2, L, cfg.n, count)
        return NumericSpectrum(vals, err, conv, float(np.max(np.abs(vals - alt))))
    vals, err = _richardson(V, kappa, -L, L, cfg.n, count)
    return NumericSpectrum(vals, err, conv)


def _evaluate(f, x: np.ndarray) -> np.ndarray:
    if isinstance(f, WeightedFunction):
        return np.asarray(f(x), dtype=float)
    return np.asarray(f(x), dtype=float) * np.ones_like(x)


@dataclass(frozen=True)
class NormSquared:
    value: float
    tail_fraction: float
    normalizable: bool

    def __float__(self) -> float:
        return self.value


def norm_squared(f, cfg: GridConfig | None = None, tail_tolerance: float = 1e-8) -> NormSquared:
    """Trapezoid-rule integral of |f|^2 over [-L, L]; normalizable iff the |x| > L/2 share is tiny."""
    cfg = cfg or GridConfig.from_env()
    x = cfg.points()
    with np.errstate(over="ignore"):
        dens = np.abs(_evaluate(f, x)) ** 2
    total = float(trapezoid(dens, x))
    tail = float(trapezoid(np.where(np.abs(x) > cfg.half_width / 2, dens, 0.0), x))
    if not np.isfinite(total) or total == 0:
        return NormSquared(total, 1.0 if total else 0.0, False)
    frac = tail / total
    return NormSquared(total, frac, frac < tail_tolerance)


def inner_product(f, g, cfg: GridConfig | None = None) -> float:
    cfg = cfg or GridConfig.from_env()
    x = cfg.points()
    return float(trapezoid(_evaluate(f, x) * _evaluate(g, x), x))


@dataclass
class LadderStates:
    states: list[WeightedFunction]
    norms: list[float]
    gram: np.ndarray
    annihilated_at: int | None = None  # index whose image under the raising operator vanished

    def to_json(self) -> dict:
        return {
            "states": [s.to_json() for s in self.states],
            "norms": self.norms,
            "gram": self.gram.tolist(),
            "annihilated_at": self.annihilated_at,
        }


def ladder_states(c_dag: DifferentialOperator, psi0, n: int, cfg: GridConfig | None = None) -> LadderStates:
    """psi_j = (c_dag)^j psi0 exactly for j < n, with the numeric Gram matrix of the normalized states."""
    cfg = cfg or GridConfig.from_env()
    states = [as_weighted(psi0)]
    annihilated = None
    while len(states) < n:
        nxt = c_dag(states[-1])
        if nxt.is_zero():
            annihilated = len(states) - 1
            break
        states.append(nxt)
    x = cfg.points()
    vals = [_evaluate(s, x) for s in states]
    norms = [float(np.sqrt(trapezoid(v * v, x))) for v in vals]
    unit = [v / nv for v, nv in zip(vals, norms)]
    gram = np.array([[trapezoid(a * b, x) for b in unit] for a in unit])
    return LadderStates(states, norms, gram, annihilated)


def rayleigh_quotient(H: DifferentialOperator, psi, cfg: GridConfig | None = None) -> float:
    """<psi, H psi> / <psi, psi> with H psi computed exactly and integrated numerically."""
    psi = as_weighted(psi)
    return inner_product(psi, H(psi), cfg) / inner_product(psi, psi, cfg)
