"""Text grammar for functional equations.

The accepted language is plain polynomial arithmetic over the four fixed
names ``psi``, ``g``, ``x``, ``y``::

    equation := expr ('=' expr)?
    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base (('^' | '**') natural)?
    base     := name | natural | '(' expr ')' | '-' factor

Whitespace is ignored.  An optional right-hand side (usually ``= 0``) is
subtracted from the left.  Division and negative exponents are rejected as
``NonPolynomial`` rather than syntax errors, and any identifier outside the
four names raises ``UnknownVariable``; every error carries the 0-based
offset of the offending token.
"""

from __future__ import annotations

from .errors import EquationSyntaxError, NonPolynomial, UnknownVariable
from .funceq import FuncEq
from .mpoly import MPoly

_NAMES = ("psi", "g", "x", "y")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind          # "num", "name", or the operator itself
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in _NAMES:
                raise UnknownVariable(name, i)
            out.append(_Token("name", name, i))
            i = j
            continue
        if ch == "*" and i + 1 < n and text[i + 1] == "*":
            out.append(_Token("pow", "**", i))
            i += 2
            continue
        if ch == "^":
            out.append(_Token("pow", "^", i))
            i += 1
            continue
        if ch in "+-*()/=":
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        raise EquationSyntaxError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def take(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def equation(self) -> MPoly:
        lhs = self.expr()
        if self.peek().kind == "=":
            self.take()
            lhs = lhs - self.expr()
        t = self.peek()
        if t.kind != "end":
            raise EquationSyntaxError(f"unexpected {t.text!r}", t.pos)
        return lhs

    def expr(self) -> MPoly:
        acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op.kind == "+" else acc - rhs
        return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while True:
            t = self.peek()
            if t.kind == "*":
                self.take()
                acc = acc * self.factor()
            elif t.kind == "/":
                raise NonPolynomial("division is not allowed", t.pos)
            else:
                return acc

    def factor(self) -> MPoly:
        b = self.base()
        if self.peek().kind != "pow":
            return b
        self.take()
        t = self.peek()
        if t.kind == "-":
            raise NonPolynomial("exponent must be a natural number", t.pos)
        if t.kind != "num":
            raise EquationSyntaxError("expected a natural number exponent", t.pos)
        self.take()
        return b ** int(t.text)

    def base(self) -> MPoly:
        t = self.take()
        if t.kind == "num":
            return MPoly.const(int(t.text))
        if t.kind == "name":
            return MPoly.var(t.text)
        if t.kind == "(":
            inner = self.expr()
            c = self.take()
            if c.kind != ")":
                raise EquationSyntaxError("expected ')'", c.pos)
            return inner
        if t.kind == "-":
            return -self.factor()
        if t.kind == "end":
            raise EquationSyntaxError("unexpected end of input", t.pos)
        raise EquationSyntaxError(f"unexpected {t.text!r}", t.pos)


def parse_equation(text: str) -> FuncEq:
    """Parse equation text into a :class:`FuncEq`.

    Semantic rejects (zero polynomial, equation not involving psi) are
    reported as syntax errors at offset 0 so callers see one taxonomy.
    """
    poly = _Parser(text).equation()
    try:
        return FuncEq(poly)
    except ValueError as exc:
        raise EquationSyntaxError(str(exc), 0) from exc
