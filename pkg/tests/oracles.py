"""Independent reference computations in sympy, used only by the tests."""
from __future__ import annotations

from fractions import Fraction

import sympy as sp

from superint.exactmath import Polynomial, RationalFunction, WeightedFunction

x = sp.Symbol("x")


def q(value: Fraction) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def poly_expr(p: Polynomial, var=x) -> sp.Expr:
    return sum((q(c) * var**k for k, c in enumerate(p.coeffs)), sp.Integer(0))


def rf_expr(f: RationalFunction, var=x) -> sp.Expr:
    return poly_expr(f.num, var) / poly_expr(f.den, var)


def wf_expr(f: WeightedFunction, var=x) -> sp.Expr:
    return rf_expr(f.base, var) * sp.exp(sp.Rational(f.weight, 2) * var**2)


def same(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


def pseudo_hermite_expr(m: int) -> sp.Expr:
    return sp.expand((-sp.I) ** m * sp.hermite(m, sp.I * x))


def wronskian_expr(fs) -> sp.Expr:
    return sp.simplify(sp.wronskian(list(fs), x))


def extension_expr(ms) -> sp.Expr:
    """x^2 - 2k - 2 (log W)'' with W the Wronskian of the Gaussian-dressed seeds."""
    seeds = [pseudo_hermite_expr(m) * sp.exp(x**2 / 2) for m in ms]
    W = sp.wronskian(seeds, x)
    return sp.simplify(x**2 - 2 * sp.diff(sp.log(W), x, 2))


def apply_operator(terms: dict, f: sp.Expr) -> sp.Expr:
    """sum_l c_l(x) d^l f / dx^l for sympy coefficients."""
    return sum((c * sp.diff(f, x, l) for l, c in terms.items()), sp.Integer(0))


def operator_terms(op) -> dict:
    return {l: wf_expr(c) for l, c in op.terms.items()}


# -- two-dimensional third-order integrals ------------------------------------

X2, Y2 = sp.symbols("x y", real=True)


def third_order_commutator(V: sp.Expr, A: dict, g1: sp.Expr, g2: sp.Expr, hbar=1) -> sp.Expr:
    """[H, B] applied to a generic u(x, y), for
    B = sum A_ijk {L^i, p1^j p2^k} + {g1, p1} + {g2, p2} and L = x p2 - y p1."""
    h = sp.nsimplify(hbar)
    u = sp.Function("u")(X2, Y2)

    def p1(w):
        return -sp.I * h * sp.diff(w, X2)

    def p2(w):
        return -sp.I * h * sp.diff(w, Y2)

    def L(w):
        return X2 * p2(w) - Y2 * p1(w)

    def H(w):
        return -h**2 / 2 * (sp.diff(w, X2, 2) + sp.diff(w, Y2, 2)) + V * w

    def power(op, n, w):
        for _ in range(n):
            w = op(w)
        return w

    def B(w):
        out = sp.Integer(0)
        for key, a in A.items():
            i, j, k = map(int, key)
            mono = power(p1, j, power(p2, k, w))
            out += a * (power(L, i, mono) + power(p1, j, power(p2, k, power(L, i, w))))
        return out + g1 * p1(w) + p1(g1 * w) + g2 * p2(w) + p2(g2 * w)

    return sp.simplify(sp.expand(H(B(u)) - B(H(u))))
