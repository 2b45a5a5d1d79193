"""Hermite-type polynomials, oscillator seed functions and Wronskians."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polynomial import Polynomial
from .rational import RationalFunction
from .weighted import WeightedFunction, as_weighted


@lru_cache(maxsize=None)
def hermite(n: int) -> Polynomial:
    """Physicists' Hermite polynomial, H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ValueError("hermite degree must be nonnegative")
    if n == 0:
        return Polynomial.constant(1)
    two_x = Polynomial.monomial(1, 2)
    prev, cur = Polynomial.constant(1), two_x
    for k in range(1, n):
        prev, cur = cur, two_x * cur - prev * (2 * k)
    return cur


@lru_cache(maxsize=None)
def pseudo_hermite(m: int) -> Polynomial:
    """(-i)**m H_m(i x); flipping signs of alternate Hermite coefficients."""
    h = hermite(m)
    # coefficient of x^j in H_m is nonzero only for j = m mod 2; (-i)^m i^j = (-1)^((m-j)/2)
    return Polynomial([c * (-1) ** ((m - j) // 2) if c else 0 for j, c in enumerate(h.coeffs)])


def oscillator_state(n: int) -> WeightedFunction:
    """Unnormalised bound state H_n(x) exp(-x**2/2) of -D^2 + x^2, energy 2n+1."""
    return WeightedFunction(hermite(n), -1)


def below_ground_seed(m: int) -> WeightedFunction:
    """Non-normalisable solution pseudo_hermite(m)(x) exp(x**2/2), energy -2m-1."""
    return WeightedFunction(pseudo_hermite(m), 1)


def _det_polynomial(rows: list[list[Polynomial]]) -> Polynomial:
    # Bareiss fraction-free elimination; every division is exact
    m = [list(r) for r in rows]
    k = len(m)
    sign = 1
    prev = Polynomial.constant(1)
    for i in range(k - 1):
        if m[i][i].is_zero():
            swap = next((r for r in range(i + 1, k) if not m[r][i].is_zero()), None)
            if swap is None:
                return Polynomial()
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]).exact_div(prev)
        prev = m[i][i]
    return m[k - 1][k - 1] * sign


def _det_rational(rows: list[list[RationalFunction]]) -> RationalFunction:
    m = [list(r) for r in rows]
    k = len(m)
    det = RationalFunction.constant(1)
    for i in range(k):
        piv = next((r for r in range(i, k) if not m[r][i].is_zero()), None)
        if piv is None:
            return RationalFunction()
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det = det * m[i][i]
        inv = m[i][i].reciprocal()
        for r in range(i + 1, k):
            if m[r][i].is_zero():
                continue
            f = m[r][i] * inv
            for c in range(i + 1, k):
                m[r][c] = m[r][c] - f * m[i][c]
    return det


def determinant(rows: list[list[RationalFunction]]) -> RationalFunction:
    if all(e.is_polynomial() for r in rows for e in r):
        polys = [[e.as_polynomial() for e in r] for r in rows]
        return RationalFunction(_det_polynomial(polys))
    return _det_rational(rows)


def wronskian_matrix(fs: Sequence[WeightedFunction]) -> list[list[WeightedFunction]]:
    fs = [as_weighted(f) for f in fs]
    rows = [fs]
    for _ in range(1, len(fs)):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def wronskian(fs: Sequence) -> WeightedFunction:
    """Wronskian determinant of functions sharing one Gaussian weight.

    With k inputs of weight s the result has weight k*s, because the common
    factor exp(s x^2/2) comes out of every column.
    """
    fs = [as_weighted(f) for f in fs]
    if not fs:
        raise ValueError("empty Wronskian")
    weights = {f.weight for f in fs if not f.is_zero()}
    if len(weights) > 1:
        raise ValueError(f"Wronskian inputs carry different weights {sorted(weights)}")
    s = weights.pop() if weights else 0
    rows = [[f.base for f in row] for row in wronskian_matrix(fs)]
    return WeightedFunction(determinant(rows), len(fs) * s)


def log_laplacian_correction(w) -> tuple[RationalFunction, Fraction]:
    """Split -2 (log w)'' into a rational part and a constant.

    The rational part comes from the base; the Gaussian factor
    exp(s x^2/2) contributes the constant -2 s.
    """
    w = as_weighted(w)
    if w.is_zero():
        raise ValueError("log of the zero function")
    rational = w.base.log_derivative().derivative() * -2
    return rational, Fraction(-2 * w.weight)
