"""Recursive-descent parser for the polynomial expression grammar.

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := '(' expr ')' | int | var        var := x | y | z | w

A leading unary sign is accepted on a term. Whitespace is ignored; implicit
multiplication and division are rejected.
"""

from __future__ import annotations

from .field import QQ, FieldSpec
from .poly import VARS, Poly


class PolySyntaxError(ValueError):
    """Malformed expression; ``offset`` is the 0-based character position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.text = text
        self.field = field
        self.pos = 0

    def peek(self):
        n = len(self.text)
        while self.pos < n and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < n else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def fail(self, msg):
        got = self.peek()
        if got == "/":
            msg = "division is not supported"
        elif got.isalpha() and got not in VARS:
            msg = f"unknown variable {got!r}"
        elif not got:
            msg = f"{msg}, got end of input"
        else:
            msg = f"{msg}, got {got!r}"
        raise PolySyntaxError(msg, self.pos)

    def parse(self) -> Poly:
        if not self.peek():
            self.fail("empty expression")
        value = self.expr()
        if self.peek():
            self.fail("unexpected character")
        return value

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        nxt = self.peek()
        if nxt and (nxt.isalnum() or nxt == "("):
            self.fail("expected an operator (implicit multiplication is not accepted)")
        return value

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.peek()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.fail("expected a non-negative integer exponent")
            base = base ** int(self.text[start:self.pos])
        return base

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Poly.constant(int(self.text[start:self.pos]), self.field)
        if ch in VARS and ch:
            self.pos += 1
            return Poly.var(VARS.index(ch), self.field)
        self.fail("expected '(', an integer or a variable")


def parse_polynomial(text: str, field: FieldSpec = QQ) -> Poly:
    """Parse and expand ``text`` into normal form over ``field``."""
    return _Parser(text, field).parse()
