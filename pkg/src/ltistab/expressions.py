"""Transfer-function expression parsing, lowering, and printing.

Grammar (whitespace insignificant, UTF-8 input, offsets reported in bytes):

    rational := expr ('/' expr)?          # a single '/' at top level only
    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := NUMBER | 's' | '(' expr ')'

Division may not nest: the two sides of the one '/' lower directly to the
numerator and denominator polynomials.  An optional sign on the first term is
accepted so that printed transfer functions with negative leading
coefficients re-parse.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ltistab.errors import (
    ExpressionSyntaxError,
    MultipleDivisionError,
    NegativeExponentError,
)
from ltistab.polynomial import Polynomial
from ltistab.rational import TransferFunction, tf_new


# --- AST -----------------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Var:
    """The Laplace variable s."""


@dataclass(frozen=True)
class Add:
    left: "TfExpr"
    right: "TfExpr"


@dataclass(frozen=True)
class Sub:
    left: "TfExpr"
    right: "TfExpr"


@dataclass(frozen=True)
class Mul:
    left: "TfExpr"
    right: "TfExpr"


@dataclass(frozen=True)
class Pow:
    base: "TfExpr"
    exponent: int


@dataclass(frozen=True)
class Div:
    num: "TfExpr"
    den: "TfExpr"


TfExpr = Union[Number, Var, Add, Sub, Mul, Pow, Div]


# --- tokenizer ---------------------------------------------------------------

_NUMBER_RE = re.compile(r"(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?")
_UINT_RE = re.compile(r"\d+\Z")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 's', one of '+-*/^()', or 'end'
    text: str
    offset: int  # byte offset into the UTF-8 input


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        offset = len(text[:i].encode("utf-8"))
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, offset))
            i += 1
            continue
        if ch == "s":
            tokens.append(_Token("s", ch, offset))
            i += 1
            continue
        m = _NUMBER_RE.match(text, i)
        if m:
            tokens.append(_Token("num", m.group(0), offset))
            i = m.end()
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", offset)
    tokens.append(_Token("end", "", len(text.encode("utf-8"))))
    return tokens


# --- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> TfExpr:
        node: TfExpr = self.expr()
        if self.peek().kind == "/":
            self.advance()
            node = Div(node, self.expr())
        tok = self.peek()
        if tok.kind == "/":
            raise MultipleDivisionError("only one '/' is allowed, at top level", tok.offset)
        if tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {tok.text!r}", tok.offset)
        return node

    def expr(self) -> TfExpr:
        tok = self.peek()
        negate = False
        if tok.kind in "+-":
            self.advance()
            negate = tok.kind == "-"
        node: TfExpr = self.term()
        if negate:
            node = Sub(Number(0.0), node)
        while self.peek().kind in "+-":
            op = self.advance()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def term(self) -> TfExpr:
        node = self.factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> TfExpr:
        node = self.base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind == "-":
                raise NegativeExponentError("exponent must be nonnegative", tok.offset)
            if tok.kind != "num" or not _UINT_RE.match(tok.text):
                raise ExpressionSyntaxError(
                    "exponent must be a nonnegative integer", tok.offset
                )
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def base(self) -> TfExpr:
        tok = self.advance()
        if tok.kind == "num":
            return Number(float(tok.text))
        if tok.kind == "s":
            return Var()
        if tok.kind == "(":
            node = self.expr()
            closing = self.peek()
            if closing.kind == "/":
                raise ExpressionSyntaxError(
                    "division may not nest inside parentheses", closing.offset
                )
            if closing.kind != ")":
                raise ExpressionSyntaxError("expected ')'", closing.offset)
            self.advance()
            return node
        raise ExpressionSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.offset)


def parse_tf(text: str) -> TfExpr:
    """Parse an expression into its AST (see the module grammar)."""
    return _Parser(text).parse()


# --- lowering -----------------------------------------------------------------

def lower_ast(ast: TfExpr) -> TransferFunction:
    """Fold an AST into a canonical transfer function.

    The single division splits numerator from denominator; an expression
    without one lowers over denominator 1.
    """
    if isinstance(ast, Div):
        return tf_new(_lower_poly(ast.num), _lower_poly(ast.den))
    return tf_new(_lower_poly(ast), Polynomial.one())


def _lower_poly(node: TfExpr) -> Polynomial:
    if isinstance(node, Number):
        return Polynomial.constant(node.value)
    if isinstance(node, Var):
        return Polynomial.s()
    if isinstance(node, Add):
        return _lower_poly(node.left) + _lower_poly(node.right)
    if isinstance(node, Sub):
        return _lower_poly(node.left) - _lower_poly(node.right)
    if isinstance(node, Mul):
        return _lower_poly(node.left) * _lower_poly(node.right)
    if isinstance(node, Pow):
        return _lower_poly(node.base) ** node.exponent
    raise ValueError("division may only appear once, at the top level")


def tf_from_text(text: str) -> TransferFunction:
    """Parse and lower in one step."""
    return lower_ast(parse_tf(text))


# --- printing -----------------------------------------------------------------

def format_poly(p: Polynomial) -> str:
    """Descending-power rendering that re-parses to exactly p.

    Coefficients print with shortest round-trip repr, so lowering the printed
    text reproduces every coefficient bit-for-bit.
    """
    if p.is_zero:
        return "0"
    parts: list[tuple[bool, str]] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0.0:
            continue
        mag = abs(c)
        if k == 0:
            body = repr(mag)
        elif mag == 1.0:
            body = _s_pow(k)
        else:
            body = f"{mag!r}*{_s_pow(k)}"
        parts.append((c < 0, body))
    negative, body = parts[0]
    out = ("-" if negative else "") + body
    for negative, body in parts[1:]:
        out += (" - " if negative else " + ") + body
    return out


def _s_pow(k: int) -> str:
    return "s" if k == 1 else f"s^{k}"


def format_tf(h: TransferFunction) -> str:
    """Printed form ``(num)/(den)``; parse_tf/lower_ast round-trips exactly."""
    return f"({format_poly(h.num)})/({format_poly(h.den)})"
