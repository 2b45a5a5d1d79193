"""Reduced ratios of rational polynomials."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .polynomial import Polynomial, _is_scalar, as_fraction, poly_gcd


class RationalFunction:
    """``num/den`` in lowest terms.

    Canonical form: gcd(num, den) is constant and den is a primitive integer
    polynomial with positive leading coefficient, so structural equality is
    mathematical equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            ratio = _coerce(num) / _coerce(den)
            num, den = ratio.num, ratio.den
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        obj._hash = None
        return obj

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls._trusted(Polynomial.x(), Polynomial.constant(1))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._trusted(Polynomial.constant(c), Polynomial.constant(1))

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] / self.den[0]

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num / self.den.lc

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("RationalFunction", self.num, self.den))
        return self._hash

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            bd = self.den.exact_div(g)
            dd = o.den.exact_div(g)
            return RationalFunction(self.num * dd + o.num * bd, bd * o.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._trusted(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_fraction(other)
            if c == 0:
                return RationalFunction()
            return RationalFunction._trusted(self.num * c, self.den)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction()
        # cross-cancel before multiplying keeps intermediate sizes small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num.exact_div(g1), o.den.exact_div(g1)
        n2, d1 = o.num.exact_div(g2), self.den.exact_div(g2)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction._trusted(self.num**n, self.den**n)

    def derivative(self, k: int = 1) -> "RationalFunction":
        out = self
        for _ in range(k):
            n, d = out.num, out.den
            out = RationalFunction(n.derivative() * d - n * d.derivative(), d * d)
        return out

    def log_derivative(self) -> "RationalFunction":
        """(log self)' = self'/self."""
        if self.is_zero():
            raise ZeroDivisionError("log-derivative of zero")
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), n * d)

    def __call__(self, x):
        if _is_scalar(x):
            dv = self.den(x)
            if dv == 0:
                raise ZeroDivisionError(f"pole at x = {x}")
            return self.num(x) / dv
        x = np.asarray(x, dtype=float)
        return self.num(x) / self.den(x)

    def proper_split(self) -> tuple[Polynomial, "RationalFunction"]:
        """self = q + r with q a polynomial and r proper (deg num < deg den)."""
        q, r = divmod(self.num, self.den)
        return q, RationalFunction(r, self.den)

    def substitute_square(self, r) -> "RationalFunction":
        """self(sqrt(r) x) for an even rational function."""
        if not (self.num.is_even() and self.den.is_even()):
            raise ValueError("substitute_square needs an even rational function")
        return RationalFunction(self.num.substitute_square(r), self.den.substitute_square(r))

    def scale_argument(self, c) -> "RationalFunction":
        return RationalFunction(self.num.scale_argument(c), self.den.scale_argument(c))

    def is_even(self) -> bool:
        return (self.num.is_even() and self.den.is_even()) or (self.num.is_odd() and self.den.is_odd())

    # -- presentation ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if isinstance(data, list):
            return cls(Polynomial.from_json(data))
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))

    def format(self, var: str = "x") -> str:
        if self.is_polynomial():
            return self.as_polynomial().format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RationalFunction({self.format()!r})"


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if _is_scalar(value):
        return Polynomial.constant(value)
    raise TypeError(f"cannot build a polynomial from {value!r}")


def _coerce(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction._trusted(value, Polynomial.constant(1))
    if _is_scalar(value):
        return RationalFunction.constant(value)
    return None


def _reduce(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if num.is_zero():
        return Polynomial(), Polynomial.constant(1)
    if den.degree > 0 and num.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    scale, den_int = den.integer_primitive()
    return num / scale, Polynomial._raw([Fraction(v) for v in den_int])
