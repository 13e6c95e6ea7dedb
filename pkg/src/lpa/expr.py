"""Parser and evaluator for element expressions.

Grammar (whitespace is insignificant)::

    expr   := term { ("+" | "-") term }
    term   := ["-"] [scalar] factor { "." factor }
            | ["-"] scalar                      (scalar times the unit)
    factor := ident ["*"] | "(" expr ")"
    scalar := digits ["/" digits]

``e*`` is the ghost edge of ``e``; ``.`` is multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .algebra import Element, generator, unit
from .errors import ParseError, SemanticError
from .graph import Graph
from .scalars import QQ

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+.*/()]))")


@dataclass(frozen=True)
class Generator:
    kind: str  # vertex | edge | ghost
    ident: str


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Scaled:
    scalar: Fraction
    node: object


@dataclass(frozen=True)
class Paren:
    expr: object


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Sum:
    terms: tuple


def tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, g: Graph):
        self.tokens = tokenize(src)
        self.i = 0
        self.g = g

    def peek(self, value=None):
        kind, text, _ = self.tokens[self.i]
        if value is None:
            return kind
        return kind == "op" and text == value

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if kind != "op" or text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self):
        node = self.expr()
        kind, text, pos = self.tokens[self.i]
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return node

    def expr(self):
        terms = [self.term(negate=False)]
        while self.peek("+") or self.peek("-"):
            _, op, _ = self.take()
            terms.append(self.term(negate=op == "-"))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self, negate):
        if self.peek("-"):
            self.take()
            negate = not negate
        scalar = None
        if self.peek() == "num":
            scalar = self.scalar()
        if self.peek() == "ident" or self.peek("("):
            factors = [self.factor()]
            while self.peek("."):
                self.take()
                factors.append(self.factor())
            node = factors[0] if len(factors) == 1 else Product(tuple(factors))
        elif scalar is not None:
            node = Unit()
        else:
            _, text, pos = self.tokens[self.i]
            raise ParseError(f"expected a term, found {text or 'end of input'!r}", pos)
        if negate:
            scalar = -(scalar if scalar is not None else Fraction(1))
        return node if scalar is None else Scaled(scalar, node)

    def scalar(self):
        _, digits, pos = self.take()
        num = int(digits)
        if self.peek("/"):
            self.take()
            kind, den, dpos = self.take()
            if kind != "num":
                raise ParseError("expected a denominator", dpos)
            if int(den) == 0:
                raise ParseError("zero denominator", dpos)
            return Fraction(num, int(den))
        return Fraction(num)

    def factor(self):
        kind, text, pos = self.take()
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        if kind != "ident":
            raise ParseError(f"expected an identifier, found {text or 'end of input'!r}", pos)
        ghost = False
        if self.peek("*"):
            self.take()
            ghost = True
        if self.g.has_vertex(text):
            if ghost:
                raise SemanticError(f"ghost marker on vertex {text!r} (at position {pos})")
            return Generator("vertex", text)
        if self.g.has_edge(text):
            return Generator("ghost" if ghost else "edge", text)
        raise SemanticError(f"unknown identifier {text!r} (at position {pos})")


def parse_expression(src: str, g: Graph):
    """Parse ``src`` into an AST, resolving identifiers against ``g``."""
    return _Parser(src, g).parse()


def evaluate(node, g: Graph, field=QQ) -> Element:
    if isinstance(node, Generator):
        return generator(g, node.kind, node.ident, field)
    if isinstance(node, Paren):
        return evaluate(node.expr, g, field)
    if isinstance(node, Unit):
        return unit(g, field)
    if isinstance(node, Scaled):
        try:
            k = field(node.scalar)
        except ZeroDivisionError as exc:
            raise SemanticError(str(exc)) from None
        return evaluate(node.node, g, field) * k
    if isinstance(node, Product):
        acc = evaluate(node.factors[0], g, field)
        for f in node.factors[1:]:
            acc = acc * evaluate(f, g, field)
        return acc
    if isinstance(node, Sum):
        acc = evaluate(node.terms[0], g, field)
        for t in node.terms[1:]:
            acc = acc + evaluate(t, g, field)
        return acc
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str, g: Graph, field=QQ) -> Element:
    return evaluate(parse_expression(src, g), g, field)
