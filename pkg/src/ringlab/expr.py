"""Ring-description expressions: syntax tree, parser and printer.

Grammar (whitespace-insensitive)::

    expr := "Z" int
          | "prod(" expr ("," expr)* ")"
          | "M" int "(" expr ")"
          | "T" int "(" expr ")"
          | "corner(" expr "," elem ")"
          | "quot(" expr "," elem ("," elem)* ")"
          | "gen(" expr "," elem ")"
    elem := int | "[" row ("," row)* "]" | "(" elem ("," elem)* ")"
    row  := "[" elem ("," elem)* "]"

Integer literals denote integer multiples of the identity, tuples denote
elements of direct products, and bracketed rows denote matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "ParseError",
    "Rows",
    "Literal",
    "ZModExpr",
    "ProductExpr",
    "MatrixExpr",
    "TriangularExpr",
    "CornerExpr",
    "QuotientExpr",
    "SubringExpr",
    "RingExpr",
    "parse_ring_expr",
    "parse_literal",
    "format_ring_expr",
    "format_literal",
]

MAX_DEPTH = 32
MAX_ARITY = 64


class ParseError(ValueError):
    """Syntax error in a ring expression or element literal."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Rows:
    """Matrix literal: a tuple of equal-length rows."""

    rows: tuple[tuple["Literal", ...], ...]


Literal = Union[int, tuple, Rows]


@dataclass(frozen=True)
class ZModExpr:
    n: int


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple["RingExpr", ...]


@dataclass(frozen=True)
class MatrixExpr:
    k: int
    base: "RingExpr"


@dataclass(frozen=True)
class TriangularExpr:
    k: int
    base: "RingExpr"


@dataclass(frozen=True)
class CornerExpr:
    base: "RingExpr"
    elem: Literal


@dataclass(frozen=True)
class QuotientExpr:
    base: "RingExpr"
    gens: tuple[Literal, ...]


@dataclass(frozen=True)
class SubringExpr:
    base: "RingExpr"
    elem: Literal


RingExpr = Union[
    ZModExpr, ProductExpr, MatrixExpr, TriangularExpr, CornerExpr, QuotientExpr, SubringExpr
]


_TOKEN = re.compile(
    r"\s*(?:(?P<int>[+-]?\d+)|(?P<word>prod|corner|quot|gen|[ZMT])|(?P<punct>[(),\[\]]))"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise ParseError(f"unexpected character {text[start]!r}", start)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0
        self.depth = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def offset(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text)

    def take(self, value: str | None = None, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            want = value or kind
            raise ParseError(f"unexpected end of input, expected {want}", len(self.text))
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            raise ParseError(f"expected {want}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[1] == value

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("nesting too deep", self.offset())

    def _positive(self) -> int:
        tok = self.take(kind="int")
        value = int(tok[1])
        if value < 1 or tok[1][0] in "+-":
            raise ParseError("expected a positive integer", tok[2])
        return value

    def expr(self) -> RingExpr:
        self._enter()
        tok = self.take(kind="word")
        word = tok[1]
        if word == "Z":
            result: RingExpr = ZModExpr(self._positive())
        elif word in ("M", "T"):
            k = self._positive()
            self.take("(")
            base = self.expr()
            self.take(")")
            result = MatrixExpr(k, base) if word == "M" else TriangularExpr(k, base)
        elif word == "prod":
            self.take("(")
            factors = [self.expr()]
            while self.at(","):
                self.take(",")
                factors.append(self.expr())
                if len(factors) > MAX_ARITY:
                    raise ParseError("too many factors", self.offset())
            self.take(")")
            result = ProductExpr(tuple(factors))
        else:
            self.take("(")
            base = self.expr()
            self.take(",")
            first = self.literal()
            if word == "quot":
                gens = [first]
                while self.at(","):
                    self.take(",")
                    gens.append(self.literal())
                    if len(gens) > MAX_ARITY:
                        raise ParseError("too many generators", self.offset())
                result = QuotientExpr(base, tuple(gens))
            elif word == "corner":
                result = CornerExpr(base, first)
            else:
                result = SubringExpr(base, first)
            self.take(")")
        self.depth -= 1
        return result

    def _seq(self, close: str, item) -> list:
        items = [item()]
        while self.at(","):
            self.take(",")
            items.append(item())
            if len(items) > MAX_ARITY:
                raise ParseError("literal too long", self.offset())
        self.take(close)
        return items

    def literal(self) -> Literal:
        self._enter()
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input, expected element", len(self.text))
        if tok[0] == "int":
            self.i += 1
            value: Literal = int(tok[1])
        elif tok[1] == "(":
            self.i += 1
            value = tuple(self._seq(")", self.literal))
        elif tok[1] == "[":
            self.i += 1
            rows = self._seq("]", self._row)
            if len({len(r) for r in rows}) != 1:
                raise ParseError("matrix rows differ in length", tok[2])
            value = Rows(tuple(rows))
        else:
            raise ParseError(f"expected element, found {tok[1]!r}", tok[2])
        self.depth -= 1
        return value

    def _row(self) -> tuple:
        self.take("[")
        return tuple(self._seq("]", self.literal))


def parse_ring_expr(text: str) -> RingExpr:
    """Parse a ring expression such as ``"T2(Z4)"`` or ``"quot(Z90, 4)"``."""
    p = _Parser(text)
    result = p.expr()
    p.done()
    return result


def parse_literal(text: str) -> Literal:
    p = _Parser(text)
    result = p.literal()
    p.done()
    return result


def format_literal(lit: Literal) -> str:
    if isinstance(lit, bool):
        raise TypeError("booleans are not element literals")
    if isinstance(lit, int):
        return str(lit)
    if isinstance(lit, tuple):
        return "(" + ",".join(format_literal(x) for x in lit) + ")"
    if isinstance(lit, Rows):
        return "[" + ",".join("[" + ",".join(format_literal(x) for x in row) + "]" for row in lit.rows) + "]"
    raise TypeError(f"not an element literal: {lit!r}")


def format_ring_expr(expr: RingExpr) -> str:
    """Canonical text of ``expr``; ``parse_ring_expr`` inverts it."""
    if isinstance(expr, ZModExpr):
        return f"Z{expr.n}"
    if isinstance(expr, ProductExpr):
        return "prod(" + ",".join(format_ring_expr(f) for f in expr.factors) + ")"
    if isinstance(expr, MatrixExpr):
        return f"M{expr.k}({format_ring_expr(expr.base)})"
    if isinstance(expr, TriangularExpr):
        return f"T{expr.k}({format_ring_expr(expr.base)})"
    if isinstance(expr, CornerExpr):
        return f"corner({format_ring_expr(expr.base)},{format_literal(expr.elem)})"
    if isinstance(expr, QuotientExpr):
        gens = ",".join(format_literal(g) for g in expr.gens)
        return f"quot({format_ring_expr(expr.base)},{gens})"
    if isinstance(expr, SubringExpr):
        return f"gen({format_ring_expr(expr.base)},{format_literal(expr.elem)})"
    raise TypeError(f"not a ring expression: {expr!r}")


def literal_to_json(lit: Literal):
    if isinstance(lit, int):
        return lit
    if isinstance(lit, tuple):
        return [literal_to_json(x) for x in lit]
    return [[literal_to_json(x) for x in row] for row in lit.rows]
