"""Hand-written lexer and recursive-descent parser for polynomial text.

Grammar, tightest binding first:

    power   :=  atom [ '^' INTEGER ]
    unary   :=  '-' unary | power
    term    :=  unary { ('*' | '/') unary }
    expr    :=  term { ('+' | '-') term }
    atom    :=  INTEGER | NAME | '(' expr ')'

Implicit multiplication is rejected, exponents must be nonnegative integer
literals, and '/' only accepts a nonzero constant divisor (coefficients such
as 1/2). Every error carries the offset of the offending character.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polyring import Polynomial, VarContext

_SYMBOLS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "name" | one of the symbols | "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and (text[i].isalpha() or text[i] == "_"):
                raise ParseError("implicit multiplication is not allowed (insert '*')", i)
            tokens.append(Token("int", text[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], start))
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], ctx: VarContext):
        self.tokens = tokens
        self.ctx = ctx
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            if op.kind == "*":
                value = value * rhs
            else:
                if not rhs.is_constant():
                    raise ParseError("division by a non-constant expression", op.pos)
                divisor = rhs.constant_value()
                if not divisor:
                    raise ParseError("division by zero", op.pos)
                value = value * (Fraction(1) / divisor)
        return value

    def unary(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            caret = self.advance()
            exp = self.peek()
            if exp.kind == "-":
                raise ParseError("negative exponents are not allowed", exp.pos)
            if exp.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", caret.pos)
            self.advance()
            return base ** int(exp.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "int":
            return self.ctx.constant(int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.ctx.names:
                raise ParseError(f"undeclared identifier {tok.text!r}", tok.pos)
            return self.ctx.variable(tok.text)
        if tok.kind == "(":
            value = self.expr()
            closing = self.advance()
            if closing.kind != ")":
                raise ParseError("expected closing parenthesis", closing.pos)
            return value
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)


def parse_poly(text: str, ctx: VarContext) -> Polynomial:
    """Parse polynomial text against a declared variable context."""
    parser = _Parser(tokenize(text), ctx)
    value = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected token {trailing.text!r}", trailing.pos)
    return value
