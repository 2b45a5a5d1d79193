"""One-dimensional linear differential operators ``sum_l a_l(x) D^l``."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from ..exactmath import WeightedFunction, as_fraction, as_weighted, fraction_to_str
from ..exactmath.polynomial import _is_scalar


class DifferentialOperator:
    """Immutable operator with :class:`WeightedFunction` coefficients.

    ``hbar`` is a bookkeeping tag: composing operators that carry different
    values is an error, nothing else depends on it.
    """

    __slots__ = ("terms", "hbar")

    def __init__(self, terms: Mapping[int, object] | None = None, hbar=1):
        clean: dict[int, WeightedFunction] = {}
        for order, coeff in (terms or {}).items():
            if order < 0:
                raise ValueError("negative derivative order")
            c = as_weighted(coeff)
            if not c.is_zero():
                clean[int(order)] = c
        self.terms: dict[int, WeightedFunction] = dict(sorted(clean.items()))
        self.hbar = as_fraction(hbar)

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, hbar=1) -> "DifferentialOperator":
        return cls({0: 1}, hbar)

    @classmethod
    def d(cls, hbar=1) -> "DifferentialOperator":
        return cls({1: 1}, hbar)

    @classmethod
    def multiplication(cls, f, hbar=1) -> "DifferentialOperator":
        return cls({0: f}, hbar)

    @classmethod
    def zero(cls, hbar=1) -> "DifferentialOperator":
        return cls({}, hbar)

    # -- structure ------------------------------------------------------------
    def order(self) -> int:
        """Highest derivative order; -1 for the zero operator."""
        return max(self.terms) if self.terms else -1

    def coeff(self, l: int) -> WeightedFunction:
        return self.terms.get(l, WeightedFunction(0))

    def leading(self) -> WeightedFunction:
        return self.terms[self.order()]

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def _check(self, other: "DifferentialOperator"):
        if self.hbar != other.hbar:
            raise ValueError(f"mismatched hbar: {self.hbar} vs {other.hbar}")

    # -- linear structure -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            out[l] = out[l] + c if l in out else c
        return DifferentialOperator(out, self.hbar)

    def __neg__(self) -> "DifferentialOperator":
        return DifferentialOperator({l: -c for l, c in self.terms.items()}, self.hbar)

    def __sub__(self, other):
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Scalar multiple, or left multiplication by a function."""
        if isinstance(other, DifferentialOperator):
            raise TypeError("use @ (or compose) for operator products")
        if _is_scalar(other):
            other = as_fraction(other)
        return DifferentialOperator({l: c * other for l, c in self.terms.items()}, self.hbar)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, n: int) -> "DifferentialOperator":
        out = DifferentialOperator.identity(self.hbar)
        for _ in range(n):
            out = compose(out, self)
        return out

    # -- action ---------------------------------------------------------------
    def apply(self, f) -> WeightedFunction:
        f = as_weighted(f)
        out = WeightedFunction(0)
        deriv = f
        for l in range(self.order() + 1):
            if l > 0:
                deriv = deriv.derivative()
            if l in self.terms:
                out = out + self.terms[l] * deriv
        return out

    __call__ = apply

    def derivative_coefficients(self) -> "DifferentialOperator":
        return DifferentialOperator({l: c.derivative() for l, c in self.terms.items()}, self.hbar)

    # -- serialisation ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "hbar": fraction_to_str(self.hbar),
            "terms": {str(l): c.to_json() for l, c in self.terms.items()},
        }

    @classmethod
    def from_json(cls, data) -> "DifferentialOperator":
        terms = {int(l): WeightedFunction.from_json(c) for l, c in data["terms"].items()}
        return cls(terms, as_fraction(data.get("hbar", "1/1")))

    def format(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for l in sorted(self.terms, reverse=True):
            c = self.terms[l].format(var)
            parts.append(f"[{c}]" + ("" if l == 0 else ("*D" if l == 1 else f"*D^{l}")))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DifferentialOperator({self.format()})"


def compose(a: DifferentialOperator, b: DifferentialOperator) -> DifferentialOperator:
    """Exact product ``a o b`` by the Leibniz rule D^i b = sum_r C(i,r) b^(r) D^(i-r)."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return DifferentialOperator.zero(a.hbar)
    max_i = a.order()
    # derivs[j][r] = r-th derivative of b_j
    derivs: dict[int, list[WeightedFunction]] = {}
    for j, bj in b.terms.items():
        chain = [bj]
        for _ in range(max_i):
            chain.append(chain[-1].derivative())
        derivs[j] = chain
    out: dict[int, WeightedFunction] = {}
    for i, ai in a.terms.items():
        for j in b.terms:
            for r in range(i + 1):
                d = derivs[j][r]
                if d.is_zero():
                    continue
                k = i - r + j
                term = ai * d * comb(i, r)
                out[k] = out[k] + term if k in out else term
    return DifferentialOperator(out, a.hbar)


def commutator(a: DifferentialOperator, b: DifferentialOperator) -> DifferentialOperator:
    return compose(a, b) - compose(b, a)


def adjoint(a: DifferentialOperator) -> DifferentialOperator:
    """Formal adjoint for real coefficients: (c D^l)^+ = (-1)^l D^l o c."""
    out = DifferentialOperator.zero(a.hbar)
    d = DifferentialOperator.d(a.hbar)
    for l, c in a.terms.items():
        term = compose(d**l, DifferentialOperator.multiplication(c, a.hbar))
        out = out + (term if l % 2 == 0 else -term)
    return out


def scalar_ratio(a: DifferentialOperator, b: DifferentialOperator) -> Fraction | None:
    """Return q with a == q*b when such an exact rational q exists, else None."""
    if b.is_zero():
        return None
    if a.is_zero():
        return Fraction(0)
    if a.order() != b.order():
        return None
    la, lb = a.leading(), b.leading()
    if la.weight != lb.weight:
        return None
    ratio = la.base / lb.base
    if not ratio.is_constant():
        return None
    q = ratio.constant_value()
    return q if a == b * q else None
