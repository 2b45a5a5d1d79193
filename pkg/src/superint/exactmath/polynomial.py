"""Dense univariate polynomials over the rationals.

Coefficients are stored as a tuple of :class:`fractions.Fraction` in
ascending degree.  Every operation is exact; the only place floats appear
is :meth:`Polynomial.__call__` when it is handed a float or a numpy array.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np


def as_fraction(value) -> Fraction:
    """Coerce an exact scalar (int, Fraction or ``"p/q"`` string) to Fraction.

    Floats are refused on purpose: a float would silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"malformed rational {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def fraction_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, np.integer)) and not isinstance(value, bool)


class Polynomial:
    """Immutable polynomial with exact rational coefficients (ascending)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Polynomial":
        # trusted constructor: coeffs already Fractions
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw([Fraction(0), Fraction(1)])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls._raw([as_fraction(c)])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        return cls._raw([Fraction(0)] * n + [as_fraction(c)])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Polynomial":
        out = cls.constant(1)
        for r in roots:
            out = out * cls._raw([-as_fraction(r), Fraction(1)])
        return out

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if _is_scalar(other):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_fraction(other)
            if c == 0:
                return Polynomial()
            return Polynomial._raw([c * a for a in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            c = as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return Polynomial._raw([a / c for a in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        inv_lc = 1 / o.lc
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] * inv_lc
            quot[k] = q
            if q:
                for j, c in enumerate(o.coeffs):
                    rem[k + j] -= q * c
        return Polynomial._raw(quot), Polynomial._raw(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- calculus and evaluation --------------------------------------------
    def derivative(self, k: int = 1) -> "Polynomial":
        cs = list(self.coeffs)
        for _ in range(k):
            cs = [i * c for i, c in enumerate(cs)][1:]
        return Polynomial._raw(cs)

    def __call__(self, x):
        if _is_scalar(x):
            x = as_fraction(x)
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return ``self(inner(x))``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial._raw([c])
        return acc

    def scale_argument(self, c) -> "Polynomial":
        """Return ``self(c*x)``."""
        c = as_fraction(c)
        return Polynomial._raw([a * c**i for i, a in enumerate(self.coeffs)])

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def substitute_square(self, r) -> "Polynomial":
        """For an even polynomial p, return p with x**2 replaced by r*x**2.

        This is p(sqrt(r) x) and stays exact when sqrt(r) is irrational.
        """
        if not self.is_even():
            raise ValueError("substitute_square needs an even polynomial")
        r = as_fraction(r)
        return Polynomial._raw(
            [c * r ** (i // 2) if i % 2 == 0 else Fraction(0) for i, c in enumerate(self.coeffs)]
        )

    # -- integer normal forms ------------------------------------------------
    def integer_primitive(self) -> tuple[Fraction, list[int]]:
        """Split self = factor * P with P a primitive integer polynomial, lc(P) > 0."""
        if not self.coeffs:
            return Fraction(0), []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]

    def primitive(self) -> "Polynomial":
        return Polynomial._raw([Fraction(v) for v in self.integer_primitive()[1]])

    def monic(self) -> "Polynomial":
        return self / self.lc

    # -- roots ------------------------------------------------------------
    def _positive_rescale(self) -> "Polynomial":
        # divide by |content| only; Sturm chains must keep their signs
        factor, _ = self.integer_primitive()
        return self / abs(factor) if factor else self

    def sturm_sequence(self) -> list["Polynomial"]:
        seq = [self._positive_rescale(), self.derivative()._positive_rescale()]
        while not seq[-1].is_zero() and seq[-1].degree > 0:
            r = seq[-2] % seq[-1]
            if r.is_zero():
                break
            seq.append((-r)._positive_rescale())
        return [p for p in seq if not p.is_zero()]

    def count_real_roots(self, a=None, b=None) -> int:
        """Number of distinct real roots in (a, b]; ``None`` means infinite ends."""
        if self.is_zero():
            raise ValueError("zero polynomial has infinitely many roots")
        if self.degree == 0:
            return 0
        seq = self.sturm_sequence()

        def sign_changes(signs: list[int]) -> int:
            signs = [s for s in signs if s != 0]
            return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

        def at(point, end_sign):
            if point is None:
                return [(1 if p.lc > 0 else -1) * (end_sign ** p.degree) for p in seq]
            v = as_fraction(point)
            return [(p(v) > 0) - (p(v) < 0) for p in seq]

        return sign_changes(at(a, -1)) - sign_changes(at(b, 1))

    # -- presentation -------------------------------------------------------
    def to_json(self) -> list[str]:
        return [fraction_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(as_fraction(c) for c in data)

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lb**e
        r = [f * c for c in r]
    return r


def _content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor via the subresultant pseudo-remainder sequence.

    The result is a primitive integer polynomial with positive leading
    coefficient (``1`` when the inputs are coprime).
    """
    if a.is_zero():
        return b.primitive() if not b.is_zero() else Polynomial()
    if b.is_zero():
        return a.primitive()
    A = a.integer_primitive()[1]
    B = b.integer_primitive()[1]
    if len(A) < len(B):
        A, B = B, A
    g = h = 1
    while True:
        delta = len(A) - len(B)
        R = _int_prem(A, B)
        if not R:
            out = B
            break
        if len(R) == 1:
            return Polynomial.constant(1)
        A, B = B, R
        div = g * h**delta
        B = [c // div for c in B]
        g = A[-1]
        if delta == 0:
            pass
        else:
            h = g**delta // h ** (delta - 1) if delta > 1 else g
    c = _content(out)
    if out[-1] < 0:
        c = -c
    return Polynomial._raw([Fraction(v // c) for v in out])
