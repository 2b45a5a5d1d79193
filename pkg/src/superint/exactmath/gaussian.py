"""Exact Gaussian rationals a + b i."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import as_fraction


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def lift(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(as_fraction(value), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.lift(other))

    def __mul__(self, other):
        o = GaussianRational.lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


I = GaussianRational(0, 1)
