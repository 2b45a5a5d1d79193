"""Rational functions dressed with an exact Gaussian factor."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .polynomial import Polynomial, _is_scalar, as_fraction
from .rational import RationalFunction, _coerce

_X = RationalFunction.x()


class WeightedFunction:
    """``base(x) * exp(weight * x**2 / 2)`` with an integer ``weight``.

    The weight is an integer multiple of one half in the exponent, so
    products and Wronskians of Gaussian-dressed seeds stay exact.  The zero
    function carries weight 0 and is compatible with every weight.
    """

    __slots__ = ("base", "weight")

    def __init__(self, base=0, weight: int = 0):
        rf = _coerce(base)
        if rf is None:
            raise TypeError(f"cannot use {base!r} as a weighted-function base")
        self.base: RationalFunction = rf
        self.weight: int = 0 if rf.is_zero() else int(weight)

    def is_zero(self) -> bool:
        return self.base.is_zero()

    def __bool__(self) -> bool:
        return not self.base.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightedFunction):
            return self.weight == other.weight and self.base == other.base
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.weight == 0 and self.base == o

    def __hash__(self) -> int:
        return hash(("WeightedFunction", self.base, self.weight))

    @staticmethod
    def _lift(other) -> "WeightedFunction | None":
        if isinstance(other, WeightedFunction):
            return other
        rf = _coerce(other)
        return None if rf is None else WeightedFunction(rf, 0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if o.weight != self.weight:
            raise ValueError(f"cannot add weights {self.weight} and {o.weight}")
        return WeightedFunction(self.base + o.base, self.weight)

    __radd__ = __add__

    def __neg__(self) -> "WeightedFunction":
        return WeightedFunction(-self.base, self.weight)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return WeightedFunction(self.base * as_fraction(other), self.weight)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return WeightedFunction(self.base * o.base, self.weight + o.weight)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return WeightedFunction(self.base / as_fraction(other), self.weight)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return WeightedFunction(self.base / o.base, self.weight - o.weight)

    def derivative(self, k: int = 1) -> "WeightedFunction":
        out = self
        for _ in range(k):
            b = out.base
            out = WeightedFunction(b.derivative() + _X * b * out.weight, out.weight)
        return out

    def log_derivative(self) -> RationalFunction:
        """(log f)' = base'/base + weight * x."""
        return self.base.log_derivative() + _X * self.weight

    def __call__(self, x):
        if _is_scalar(x) and self.weight == 0:
            return self.base(x)
        x = np.asarray(x, dtype=float)
        return self.base(x) * np.exp(0.5 * self.weight * x * x)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "weight": self.weight}

    @classmethod
    def from_json(cls, data) -> "WeightedFunction":
        return cls(RationalFunction.from_json(data["base"]), int(data.get("weight", 0)))

    def format(self, var: str = "x") -> str:
        if self.weight == 0:
            return self.base.format(var)
        w = Fraction(self.weight, 2)
        return f"({self.base.format(var)})*exp({w}*{var}^2)"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"WeightedFunction({self.format()!r})"


def as_weighted(value) -> WeightedFunction:
    if isinstance(value, WeightedFunction):
        return value
    out = WeightedFunction._lift(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a weighted function")
    return out


__all__ = ["WeightedFunction", "as_weighted", "Polynomial"]
