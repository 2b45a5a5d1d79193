"""Parser for exact rational-function expressions such as ``4z(2z^2-1)/(2z^2+1)``.

Grammar: integers, one variable letter, ``+ - * / ^`` and parentheses;
juxtaposition means multiplication.  Decimal points are rejected.
"""
from __future__ import annotations

import re

from .polynomial import Polynomial
from .rational import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("var", name))
        elif op is not None and op.strip():
            if op not in "+-*/^()":
                raise ExpressionError(f"unexpected character {op!r}")
            tokens.append(("op", op))
    return tokens


class _Parser:
    def __init__(self, text: str, variable: str | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variable = variable

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val = self.take()
        if val != value:
            raise ExpressionError(f"expected {value!r}, found {'end of input' if val is None else repr(val)}")

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ExpressionError("empty expression")
        out = self.expr()
        if self.i != len(self.tokens):
            raise ExpressionError(f"trailing input at token {self.peek()[1]!r}")
        return out

    def expr(self) -> RationalFunction:
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> RationalFunction:
        out = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                out = out * self.unary()
            elif (kind, val) == ("op", "/"):
                self.take()
                rhs = self.unary()
                if rhs.is_zero():
                    raise ExpressionError("division by zero")
                out = out / rhs
            elif kind in ("int", "var") or (kind, val) == ("op", "("):
                out = out * self.power()
            else:
                return out

    def unary(self) -> RationalFunction:
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.take()
            return -self.unary()
        if (kind, val) == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ExpressionError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self) -> RationalFunction:
        kind, val = self.take()
        if kind == "int":
            if self.peek() == ("op", "."):
                raise ExpressionError("decimal numbers are not allowed")
            return RationalFunction.constant(int(val))
        if kind == "var":
            if self.variable is None:
                self.variable = val
            elif val != self.variable:
                raise ExpressionError(f"unknown symbol {val!r} (variable is {self.variable!r})")
            return RationalFunction(Polynomial.x())
        if (kind, val) == ("op", "("):
            out = self.expr()
            self.expect(")")
            return out
        raise ExpressionError(f"unexpected token {val!r}")


def parse_rational_function(text: str, variable: str | None = None) -> RationalFunction:
    """Parse ``text`` into an exact :class:`RationalFunction`.

    ``variable`` pins the allowed letter; by default the first letter seen is
    the variable and any other letter is an error.
    """
    if "." in text:
        raise ExpressionError("decimal numbers are not allowed")
    return _Parser(text, variable).parse()
