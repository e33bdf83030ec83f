"""Recursive-descent parser for univariate polynomial expressions in ``x``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | "x" | "(" expr ")"

Division is only by nonzero constants, which is how rational literals such
as ``1/2`` are written.  Multiplication must be explicit.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SubresError
from .poly import PowerPoly


class ParseError(SubresError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        off = len(text[:i].encode())
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), off))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word != "x":
                raise ParseError(f"unknown identifier {word!r}", off)
            tokens.append(("x", word, off))
            i = j
        elif c in "+-*/^()":
            tokens.append((c, c, off))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", off)
    tokens.append(("end", None, len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, off = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", off)
                if rhs.degree != 0:
                    raise ParseError("division by a non-constant polynomial", off)
                value = value / rhs
        return value

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponent", tok[2])
            exp = self.take("int")[1]
            return base ** exp
        return base

    def atom(self):
        kind, value, off = self.peek()
        if kind == "int":
            self.take()
            return PowerPoly.constant(Fraction(value))
        if kind == "x":
            self.take()
            return PowerPoly.x()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected a number, 'x' or '(', found {what}", off)


def parse_poly(text: str) -> PowerPoly:
    return _Parser(text).parse()
