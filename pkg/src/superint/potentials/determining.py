"""Grid residuals of the determining equations for a third-order integral.

B = sum_{i+j+k=3} A_ijk {L^i, p1^j p2^k} + {g1, p1} + {g2, p2}, with L = x p2 - y p1.
The polynomials f1..f4 are the coefficients of p1^3, p1^2 p2, p1 p2^2, p2^3 in the
leading symbol sum A_ijk L^i p1^j p2^k, obtained by expanding L^i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np
import sympy as sp

X, Y = sp.symbols("x y", real=True)

A_KEYS = ("300", "210", "201", "120", "111", "102", "030", "021", "012", "003")


def normalize_constants(A: Mapping | None) -> dict[str, sp.Rational]:
    out = {k: sp.Integer(0) for k in A_KEYS}
    for key, value in (A or {}).items():
        k = "".join(str(c) for c in key) if not isinstance(key, str) else key.removeprefix("A")
        if k not in out:
            raise ValueError(f"unknown constant A{k}; expected one of {', '.join(A_KEYS)}")
        out[k] = sp.nsimplify(value, rational=True)
    return out


def f_polynomials(A: Mapping | None) -> tuple[sp.Expr, sp.Expr, sp.Expr, sp.Expr]:
    a = normalize_constants(A)
    x, y = X, Y
    f1 = a["030"] - a["120"] * y + a["210"] * y**2 - a["300"] * y**3
    f2 = (a["021"] - a["111"] * y + a["201"] * y**2 + a["120"] * x
          - 2 * a["210"] * x * y + 3 * a["300"] * x * y**2)
    f3 = (a["012"] - a["102"] * y + a["111"] * x - 2 * a["201"] * x * y
          + a["210"] * x**2 - 3 * a["300"] * x**2 * y)
    f4 = a["003"] + a["102"] * x + a["201"] * x**2 + a["300"] * x**3
    return f1, f2, f3, f4


class _Field:
    """A function of (x, y) with partial derivatives, symbolic when possible."""

    def __init__(self, g, step: float = 1e-3):
        self.expr = None
        if isinstance(g, (sp.Expr, int, float)) or g is None:
            self.expr = sp.sympify(0 if g is None else g)
        else:
            self.func = g
        self.step = step

    def partial(self, nx: int, ny: int) -> Callable:
        if self.expr is not None:
            e = sp.diff(self.expr, X, nx, Y, ny) if (nx or ny) else self.expr
            f = sp.lambdify((X, Y), e, "numpy")
            return lambda x, y: np.broadcast_to(np.asarray(f(x, y), dtype=float), np.shape(x))
        return self._fd(nx, ny)

    def _fd(self, nx: int, ny: int) -> Callable:
        h = self.step if nx + ny <= 1 else self.step * 10
        # fourth-order central stencils
        weights = {0: {0: 1.0},
                   1: {-2: 1 / 12, -1: -8 / 12, 1: 8 / 12, 2: -1 / 12},
                   2: {-2: -1 / 12, -1: 16 / 12, 0: -30 / 12, 1: 16 / 12, 2: -1 / 12},
                   3: {-3: 1 / 8, -2: -1.0, -1: 13 / 8, 1: -13 / 8, 2: 1.0, 3: -1 / 8}}

        def d(x, y):
            total = 0.0
            for i, wi in weights[nx].items():
                for j, wj in weights[ny].items():
                    total = total + wi * wj * np.asarray(self.func(x + i * h, y + j * h), dtype=float)
            return total / h ** (nx + ny)

        return d


@dataclass
class N3Residuals:
    det1a: np.ndarray
    det1b: np.ndarray
    det1c: np.ndarray
    det1d: np.ndarray

    def max_norms(self) -> dict[str, float]:
        return {k: float(np.max(np.abs(getattr(self, k)))) for k in ("det1a", "det1b", "det1c", "det1d")}

    def max(self) -> float:
        return max(self.max_norms().values())


def n3_determining_residuals(V, A: Mapping | None, g1, g2, hbar=1, grid=None) -> N3Residuals:
    """Pointwise residuals (lhs - rhs) of the four determining equations on a grid.

    ``V``, ``g1`` and ``g2`` are sympy expressions in ``X``, ``Y`` (derivatives
    exact) or numeric callables of (x, y) (central differences).  ``grid`` is a
    pair of 1D sample arrays, default 21 x 21 points on [-2, 2]^2.
    """
    if grid is None:
        grid = (np.linspace(-2, 2, 21), np.linspace(-2, 2, 21))
    xs, ys = np.meshgrid(np.asarray(grid[0], float), np.asarray(grid[1], float), indexing="ij")
    a = normalize_constants(A)
    fs = [sp.lambdify((X, Y), f, "numpy") for f in f_polynomials(A)]
    f1, f2, f3, f4 = (np.broadcast_to(np.asarray(f(xs, ys), dtype=float), xs.shape) for f in fs)
    v, G1, G2 = _Field(V), _Field(g1), _Field(g2)
    Vx, Vy = v.partial(1, 0)(xs, ys), v.partial(0, 1)(xs, ys)
    Vxxx, Vxxy = v.partial(3, 0)(xs, ys), v.partial(2, 1)(xs, ys)
    Vxyy, Vyyy = v.partial(1, 2)(xs, ys), v.partial(0, 3)(xs, ys)
    g1v, g2v = G1.partial(0, 0)(xs, ys), G2.partial(0, 0)(xs, ys)
    h2 = float(hbar) ** 2
    A300, A210, A201 = float(a["300"]), float(a["210"]), float(a["201"])

    r_a = G1.partial(1, 0)(xs, ys) - (3 * f1 * Vx + f2 * Vy)
    r_b = G2.partial(0, 1)(xs, ys) - (f3 * Vx + 3 * f4 * Vy)
    r_c = G1.partial(0, 1)(xs, ys) + G2.partial(1, 0)(xs, ys) - 2 * (f2 * Vx + f3 * Vy)
    r_d = (g1v * Vx + g2v * Vy
           - h2 / 4 * (f1 * Vxxx + f2 * Vxxy + f3 * Vxyy + f4 * Vyyy
                       + 8 * A300 * (xs * Vy - ys * Vx) + 2 * (A210 * Vx + A201 * Vy)))
    return N3Residuals(r_a, r_b, r_c, r_d)
