"""Tokenizer, recursive-descent parser and printer for polynomial expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)*
    atom   := NUMBER | NAME | trace | '(' expr ')'
    trace  := ('tr' | 'ntr') '(' NAME ('^' INT)? ')'

NUMBER is a nonnegative integer, decimal or fraction literal such as ``3``,
``0.25`` or ``7/26``.  Repeated ``^`` associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple, Union

from . import polyalg


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0:
            raise ValueError("constants are nonnegative; use Neg")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Trace:
    var: str
    power: int
    normalized: bool = False

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("trace powers must be >= 1")


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Const, Var, Trace, Add, Sub, Mul, Neg, Pow]


# -- tokens --------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+|\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            bad = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise ParseError(f"unexpected character {src[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.position)
        return tok

    def integer(self) -> int:
        tok = self.take()
        if tok.kind != "number" or not tok.text.isdigit():
            raise ParseError("expected an integer exponent", tok.position)
        return int(tok.text)

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.position)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            right = self.term()
            e = Add(e, right) if op == "+" else Sub(e, right)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek().text == "*":
            self.take()
            e = Mul(e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek().text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        e = self.atom()
        while self.peek().text == "^":
            self.take()
            e = Pow(e, self.integer())
        return e

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "number":
            return Const(Fraction(tok.text))
        if tok.kind == "name":
            if tok.text in ("tr", "ntr") and self.peek().text == "(":
                return self.trace(tok)
            return Var(tok.text)
        if tok.text == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.position)

    def trace(self, head: Token) -> Trace:
        self.expect("(")
        var = self.take()
        if var.kind != "name":
            raise ParseError("expected a matrix variable", var.position)
        power = 1
        if self.peek().text == "^":
            self.take()
            pos = self.peek().position
            power = self.integer()
            if power < 1:
                raise ParseError("trace powers must be >= 1", pos)
        self.expect(")")
        return Trace(var.text, power, head.text == "ntr")


def parse(src: str) -> Expr:
    """Parse an expression; traces must be uniformly ``tr`` or ``ntr``."""
    e = _Parser(src).parse()
    flags = {t.normalized for t in walk(e) if isinstance(t, Trace)}
    if len(flags) > 1:
        raise ParseError("mixed tr and ntr in one expression", 0)
    return e


def walk(e: Expr) -> Iterator[Expr]:
    yield e
    if isinstance(e, (Add, Sub, Mul)):
        yield from walk(e.left)
        yield from walk(e.right)
    elif isinstance(e, Neg):
        yield from walk(e.operand)
    elif isinstance(e, Pow):
        yield from walk(e.base)


# -- printer -------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4}


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 5)


def pretty(e: Expr) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""

    def wrap(sub: Expr, minimum: int) -> str:
        text = pretty(sub)
        return f"({text})" if _prec(sub) < minimum else text

    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Trace):
        head = "ntr" if e.normalized else "tr"
        return f"{head}({e.var})" if e.power == 1 else f"{head}({e.var}^{e.power})"
    if isinstance(e, (Add, Sub)):
        op = "+" if isinstance(e, Add) else "-"
        return f"{wrap(e.left, 1)} {op} {wrap(e.right, 2)}"
    if isinstance(e, Mul):
        return f"{wrap(e.left, 2)}*{wrap(e.right, 3)}"
    if isinstance(e, Neg):
        return f"-{wrap(e.operand, 3)}"
    if isinstance(e, Pow):
        return f"{wrap(e.base, 4)}^{e.exponent}"
    raise TypeError(f"not an expression: {e!r}")


# -- generic folds -------------------------------------------------------------


def fold(e: Expr, leaf: Callable[[Expr], object], const: Callable[[Fraction], object], ops) -> object:
    """Evaluate bottom-up; ``ops`` supplies ``add, sub, mul, neg, pow``."""
    add, sub, mul, neg, pw = ops
    if isinstance(e, Const):
        return const(e.value)
    if isinstance(e, (Var, Trace)):
        return leaf(e)
    if isinstance(e, Add):
        return add(fold(e.left, leaf, const, ops), fold(e.right, leaf, const, ops))
    if isinstance(e, Sub):
        return sub(fold(e.left, leaf, const, ops), fold(e.right, leaf, const, ops))
    if isinstance(e, Mul):
        return mul(fold(e.left, leaf, const, ops), fold(e.right, leaf, const, ops))
    if isinstance(e, Neg):
        return neg(fold(e.operand, leaf, const, ops))
    if isinstance(e, Pow):
        return pw(fold(e.base, leaf, const, ops), e.exponent)
    raise TypeError(f"not an expression: {e!r}")


NUMERIC_OPS = (
    lambda a, b: a + b,
    lambda a, b: a - b,
    lambda a, b: a * b,
    lambda a: -a,
    lambda a, k: a**k,
)

POLY_OPS = (
    polyalg.add,
    lambda a, b: polyalg.add(a, b, -1),
    polyalg.mul,
    lambda a: polyalg.scale(a, -1),
    polyalg.power,
)


def to_poly(e: Expr, leaf: Callable[[Expr], polyalg.Poly]) -> polyalg.Poly:
    return fold(e, leaf, polyalg.const, POLY_OPS)


def parse_polynomial(src: str) -> polyalg.Poly:
    """An ordinary polynomial whose symbols are the variable names."""
    e = parse(src)

    def leaf(node):
        if isinstance(node, Trace):
            raise ValueError("trace symbols are not allowed here")
        return polyalg.sym(node.name)

    return to_poly(e, leaf)


_SYM = re.compile(r"([pe])(\d+)$")


def parse_symmetric(src: str):
    """A symmetric polynomial written in ``p1, p2, ...`` and/or ``e1, e2, ...``.

    Mixed input is rewritten in power sums.
    """
    from .symcore import Basis, SymmetricPolynomial, basis_symbol_in

    e = parse(src)
    names = {n.name for n in walk(e) if isinstance(n, Var)}
    if any(isinstance(n, Trace) for n in walk(e)):
        raise ValueError("trace symbols are not allowed in a symmetric polynomial")
    kinds = set()
    for name in names:
        m = _SYM.match(name)
        if not m or int(m.group(2)) < 1:
            raise ValueError(f"unknown symbol {name!r}; use p1, p2, ... or e1, e2, ...")
        kinds.add(m.group(1))
    basis = Basis.ELEMENTARY if kinds == {"e"} else Basis.POWER

    def leaf(node):
        kind, k = _SYM.match(node.name).groups()
        k = int(k)
        if kind == basis.value:
            return polyalg.sym(k)
        return dict(basis_symbol_in(k, basis).terms)

    return SymmetricPolynomial(basis, to_poly(e, leaf))
