"""Text syntax for polynomials in y and for elements of S.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | 'x' | 'y' | '(' expr ')'

``INT / INT`` is a rational literal; any other ``/`` is rejected because
S has no division.  Expressions are parsed into a small tree and then
evaluated either in K[y] (:func:`parse_ypoly`) or in S (:func:`parse_skew`),
where products are normalized with ``x r = sigma(r) x + delta(r)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .field import QQ, Field
from .ore import OreContext, SkewPoly
from .ypoly import YPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\*\*|[-+*^/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# -- expression tree -------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[1] == "/":
                raise ParseError("division is not defined in S", tok[2])
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] == "*":
            self.take()
            node = Mul(node, self.unary())
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return Neg(self.unary())
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer literal", tok[2])
            node = Pow(node, int(tok[1]))
        return node

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            num = Fraction(int(value))
            if self.peek()[1] == "/":
                slash = self.take()
                den = self.take()
                if den[0] != "int":
                    raise ParseError("division is not defined in S", slash[2])
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                num = num / int(den[1])
            return Num(num)
        if kind == "var":
            return Var(value)
        if value == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_expr(text: str):
    """Parse text into an expression tree."""
    return _Parser(text).parse()


def evaluate(node, one, x=None, y=None, const=None):
    """Fold an expression tree in any ring given its generators."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Var):
        gen = x if node.name == "x" else y
        if gen is None:
            raise ValueError(f"variable {node.name!r} not allowed here")
        return gen
    if isinstance(node, Add):
        return evaluate(node.left, one, x, y, const) + evaluate(node.right, one, x, y, const)
    if isinstance(node, Sub):
        return evaluate(node.left, one, x, y, const) - evaluate(node.right, one, x, y, const)
    if isinstance(node, Mul):
        return evaluate(node.left, one, x, y, const) * evaluate(node.right, one, x, y, const)
    if isinstance(node, Neg):
        return -evaluate(node.arg, one, x, y, const)
    if isinstance(node, Pow):
        base = evaluate(node.base, one, x, y, const)
        return one if node.exp == 0 else base ** node.exp
    raise TypeError(f"not an expression node: {node!r}")


def parse_ypoly(text: str, field: Field = QQ) -> YPoly:
    node = parse_expr(text)
    return evaluate(
        node,
        YPoly.const(1, field),
        y=YPoly.gen(field),
        const=lambda v: YPoly.const(v, field),
    )


def parse_skew(text: str, ctx: OreContext) -> SkewPoly:
    node = parse_expr(text)
    return evaluate(node, ctx.one(), x=ctx.x(), y=ctx.y(), const=ctx.const)


# -- printing --------------------------------------------------------------


def _scalar_term(c, e: int, field: Field) -> str:
    mono = "" if e == 0 else ("y" if e == 1 else f"y^{e}")
    text = field.format(c)
    if not mono:
        return text
    if text == "1":
        return mono
    if text == "-1":
        return "-" + mono
    return f"{text}*{mono}"


def _join(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_ypoly(p: YPoly) -> str:
    """Canonical text, descending powers of y."""
    terms = [
        _scalar_term(c, e, p.field)
        for e, c in reversed(list(enumerate(p.coeffs)))
        if c
    ]
    return _join(terms) if terms else "0"


def format_skew(P: SkewPoly) -> str:
    """Canonical text, descending powers of x, e.g. ``(y^2 - y)*x + 1``."""
    terms = []
    for i in range(len(P.coeffs) - 1, -1, -1):
        c = P.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(format_ypoly(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"({format_ypoly(c)})*{mono}")
    return _join(terms) if terms else "0"
