"""Residuals of the six Painleve equations, exact for rational input."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..exactmath import Polynomial, RationalFunction, as_fraction

ARITY = {1: 0, 2: 1, 3: 4, 4: 2, 5: 4, 6: 4}


class DivisionByZeroSolution(ValueError):
    pass


def _rhs(which: int, z, f, fp, params, zero_check: Callable[[object], bool]):
    """Right-hand side of P_which at (z, f, f'); ``zero_check`` guards the divisions."""

    def inv(g):
        if zero_check(g):
            raise DivisionByZeroSolution("division by zero solution")
        return 1 / g

    if which == 1:
        return 6 * f * f + z
    if which == 2:
        (a,) = params
        return 2 * f**3 + z * f + a
    if which == 3:
        a, b, c, d = params
        fi = inv(f)
        return fp * fp * fi - fp / z + (a * f * f + b) / z + c * f**3 + d * fi
    if which == 4:
        a, b = params
        fi = inv(f)
        return fp * fp * fi / 2 + Fraction(3, 2) * f**3 + 4 * z * f * f + 2 * (z * z - a) * f + b * fi
    if which == 5:
        a, b, c, d = params
        fi, gi = inv(f), inv(f - 1)
        return ((fi / 2 + gi) * fp * fp - fp / z
                + (f - 1) ** 2 / (z * z) * (a * f * f + b) * fi
                + c * f / z + d * f * (f + 1) * gi)
    if which == 6:
        g1, g2, g3, g4 = params
        fi, gi, hi = inv(f), inv(f - 1), inv(f - z)
        zz = z * (z - 1)
        return ((fi + gi + hi) * fp * fp / 2
                - (1 / z + 1 / (z - 1) + hi) * fp
                + f * (f - 1) * (f - z) / (zz * zz)
                * (g1 + g2 * z * fi * fi + g3 * (z - 1) * gi * gi + g4 * zz * hi * hi))
    raise ValueError(f"no Painleve equation P{which}")


def _check_params(which: int, params: Sequence) -> tuple:
    if which not in ARITY:
        raise ValueError(f"no Painleve equation P{which}")
    params = tuple(params)
    if len(params) != ARITY[which]:
        raise ValueError(f"P{which} takes {ARITY[which]} parameters, got {len(params)}")
    return params


def painleve_residual(which: int, f, params: Sequence = ()):
    """f'' minus the right-hand side of P_which.

    For a :class:`RationalFunction` (or :class:`Polynomial`) the residual is
    returned as an exact rational function of z; otherwise ``f`` is treated as
    a numeric callable and a callable residual is returned, with derivatives
    from central differences.
    """
    params = _check_params(which, params)
    if isinstance(f, (RationalFunction, Polynomial)):
        f = RationalFunction(0) + f
        exact = tuple(as_fraction(p) for p in params)
        z = RationalFunction.x()
        rhs = _rhs(which, z, f, f.derivative(), exact, lambda g: g.is_zero())
        return f.derivative(2) - rhs
    return _numeric_residual(which, f, tuple(float(p) for p in params))


def _numeric_residual(which: int, f: Callable, params: tuple, step: float = 1e-3):
    def residual(z):
        z = np.asarray(z, dtype=float)
        h = step
        fm2, fm1, f0, fp1, fp2 = (np.asarray(f(z + k * h), dtype=float) for k in (-2, -1, 0, 1, 2))
        d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
        d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
        with np.errstate(divide="ignore", invalid="ignore"):
            return d2 - _rhs(which, z, f0, d1, params, lambda g: bool(np.all(np.asarray(g) == 0)))

    return residual


def is_solution(which: int, f: RationalFunction, params: Sequence = ()) -> bool:
    return painleve_residual(which, f, params).is_zero()
