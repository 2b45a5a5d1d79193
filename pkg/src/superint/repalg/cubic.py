"""Cubic algebra relations, the Casimir coefficients, and a normal-ordering checker.

Relations: [A,B] = C, [A,C] = alpha A^2 + beta {A,B} + gamma A + delta B + eps,
[B,C] = mu A^3 + nu A^2 - beta B^2 - alpha {A,B} + xi A - gamma B + zeta.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Mapping

import sympy as sp

Word = tuple[str, ...]
NCPoly = dict  # Word -> coefficient

CASIMIR_TERMS = ("C^2", "{A^2,B}", "{A,B^2}", "{A,B}", "B^2", "B", "A^4", "A^3", "A^2", "A")


@dataclass(frozen=True)
class CubicAlgebra:
    alpha: Any = 0
    beta: Any = 0
    gamma: Any = 0
    delta: Any = 0
    epsilon: Any = 0
    mu: Any = 0
    nu: Any = 0
    xi: Any = 0
    zeta: Any = 0

    @classmethod
    def symbolic(cls) -> "CubicAlgebra":
        """All structure constants as free sympy symbols."""
        return cls(*sp.symbols("alpha beta gamma delta epsilon mu nu xi zeta"))

    def as_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def casimir_coefficients(alg: CubicAlgebra) -> dict[str, Any]:
    """Coefficients of the quartic Casimir in the basis ``CASIMIR_TERMS``."""
    a, b, g, d, e = alg.alpha, alg.beta, alg.gamma, alg.delta, alg.epsilon
    mu, nu, xi, z = alg.mu, alg.nu, alg.xi, alg.zeta
    half, third = Fraction(1, 2), Fraction(1, 3)
    return {
        "C^2": 1,
        "{A^2,B}": -a,
        "{A,B^2}": -b,
        "{A,B}": a * b - g,
        "B^2": b * b - d,
        "B": b * g - 2 * e,
        "A^4": half * mu,
        "A^3": 2 * third * (nu + mu * b),
        "A^2": -half * third * mu * b * b + third * b * nu + half * d * mu + a * a + xi,
        "A": -half * third * mu * b * d + third * d * nu + a * g + 2 * z,
    }


# -- noncommutative polynomials in A < B < C ----------------------------------

def _nc(terms: Mapping[Word, Any]) -> NCPoly:
    return {w: c for w, c in terms.items() if not _is_zero(c)}


def _is_zero(c) -> bool:
    if isinstance(c, sp.Basic):
        return sp.expand(c) == 0
    return c == 0


def _add(p: NCPoly, q: NCPoly, scale=1) -> NCPoly:
    out = dict(p)
    for w, c in q.items():
        out[w] = out.get(w, 0) + scale * c
    return _nc(out)


def _mul(p: NCPoly, q: NCPoly) -> NCPoly:
    out: NCPoly = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return _nc(out)


def _gen(letter: str) -> NCPoly:
    return {(letter,): 1}


def _word(*letters: str) -> NCPoly:
    return {tuple(letters): 1}


def _anti(p: NCPoly, q: NCPoly) -> NCPoly:
    return _add(_mul(p, q), _mul(q, p))


def relations(alg: CubicAlgebra) -> dict[tuple[str, str], NCPoly]:
    """Right-hand sides of [X, Y] for X < Y in the order A < B < C."""
    A, B = _gen("A"), _gen("B")
    r_ac = _nc({("A", "A"): alg.alpha, (): alg.epsilon, ("A",): alg.gamma, ("B",): alg.delta})
    r_ac = _add(r_ac, _anti(A, B), alg.beta)
    r_bc = _nc({("A", "A", "A"): alg.mu, ("A", "A"): alg.nu, ("B", "B"): -alg.beta,
                ("A",): alg.xi, ("B",): -alg.gamma, (): alg.zeta})
    r_bc = _add(r_bc, _anti(A, B), -alg.alpha)
    return {("A", "B"): _gen("C"), ("A", "C"): r_ac, ("B", "C"): r_bc}


def normal_order(p: NCPoly, rels: Mapping[tuple[str, str], NCPoly]) -> NCPoly:
    """Rewrite every word into nondecreasing order using YX = XY - [X,Y]."""
    done: NCPoly = {}
    todo = dict(p)
    while todo:
        w, c = todo.popitem()
        if _is_zero(c):
            continue
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                x, y = w[i + 1], w[i]
                head, tail = w[:i], w[i + 2:]
                repl = _add({(x, y): 1}, rels[(x, y)], -1)
                for rw, rc in repl.items():
                    nw = head + rw + tail
                    todo[nw] = todo.get(nw, 0) + c * rc
                break
        else:
            done[w] = done.get(w, 0) + c
    return _nc({w: (sp.expand(c) if isinstance(c, sp.Basic) else c) for w, c in done.items()})


def commutator_nc(p: NCPoly, q: NCPoly, rels) -> NCPoly:
    return normal_order(_add(_mul(p, q), _mul(q, p), -1), rels)


def casimir_element(alg: CubicAlgebra) -> NCPoly:
    A, B, C = _gen("A"), _gen("B"), _gen("C")
    co = casimir_coefficients(alg)
    pieces = {
        "C^2": _mul(C, C),
        "{A^2,B}": _anti(_mul(A, A), B),
        "{A,B^2}": _anti(A, _mul(B, B)),
        "{A,B}": _anti(A, B),
        "B^2": _mul(B, B),
        "B": B,
        "A^4": _word("A", "A", "A", "A"),
        "A^3": _word("A", "A", "A"),
        "A^2": _word("A", "A"),
        "A": A,
    }
    out: NCPoly = {}
    for key in CASIMIR_TERMS:
        out = _add(out, pieces[key], co[key])
    return out


def casimir_defect(alg: CubicAlgebra) -> dict[str, NCPoly]:
    """Normal-ordered [A, K] and [B, K]; both empty when K is central."""
    rels = relations(alg)
    K = casimir_element(alg)
    return {g: commutator_nc(_gen(g), K, rels) for g in ("A", "B")}


def jacobi_defect(alg: CubicAlgebra) -> NCPoly:
    """Normal form of [A,[B,C]] + [B,[C,A]] + [C,[A,B]] computed from the relations."""
    rels = relations(alg)
    A, B = _gen("A"), _gen("B")
    first = commutator_nc(A, rels[("B", "C")], rels)
    second = commutator_nc(B, rels[("A", "C")], rels)
    return _add(first, second, -1)
