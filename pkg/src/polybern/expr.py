"""A small generating-function expression language.

Grammar (whitespace insignificant, columns 1-based):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' nonneg-int)? | '-' factor
    atom   := rational-literal | 't' | '(' expr ')' | func
    func   := ('exp'|'log1p') '(' expr ')'
            | 'Li' '(' int-literal ',' expr ')'
            | 'pow1p' '(' rational-literal ')'
    rational-literal := int-literal ('/' posint-literal)?

Expressions denote exact truncated series in t; there is no symbolic x here
(symbolic computations live in the library and the verify command). Series
division picks the unit or valuation route by inspecting leading zeros of
both operands; a denominator whose valuation exceeds the numerator's (or
which vanishes identically at the working order) is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polybernoulli import polylog_series
from .series import (
    TruncatedSeries,
    constant_series,
    exp_series,
    log1p_series,
    pow1p_series,
    t_series,
)


class ParseError(ValueError):
    """Syntax or validation error, carrying a 1-based column."""

    def __init__(self, message: str, column: int) -> None:
        super().__init__(f"column {column}: {message}")
        self.column = column


class EvalError(ValueError):
    """Semantic error while evaluating a parsed expression."""


class _AllZeroDenominator(EvalError):
    """A denominator with no nonzero coefficient in the working window."""

    def __init__(self) -> None:
        super().__init__("series quotient not a power series")


# -- AST -----------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    """The series variable t."""


@dataclass(frozen=True)
class BinOp:
    op: str  # 'add' | 'sub' | 'mul' | 'div'
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str  # 'exp' | 'log1p' | 'Li' | 'pow1p'
    args: tuple


# -- tokenizer -----------------------------------------------------------

_PUNCT = {"+", "-", "*", "/", "^", "(", ")", ","}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int' | 'name' | punctuation | 'end'
    text: str
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        col = i + 1
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, col))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], col))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


# -- parser --------------------------------------------------------------

_FUNCTIONS = ("exp", "log1p", "Li", "pow1p")


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {what}, found {found}", tok.column)
        return self.advance()

    def parse(self) -> object:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.column)
        return node

    def expr(self) -> object:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = BinOp("add" if op.kind == "+" else "sub", node, rhs)
        return node

    def term(self) -> object:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            node = BinOp("mul" if op.kind == "*" else "div", node, rhs)
        return node

    def factor(self) -> object:
        if self.peek().kind == "-":
            self.advance()
            return BinOp("mul", Const(Fraction(-1)), self.factor())
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "int":
                raise ParseError(
                    "exponent must be a non-negative integer literal", tok.column
                )
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def atom(self) -> object:
        tok = self.peek()
        if tok.kind == "int":
            return Const(self.rational_literal())
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        if tok.kind == "name":
            if tok.text == "t":
                self.advance()
                return Var()
            if tok.text in _FUNCTIONS:
                return self.func()
            raise ParseError(f"unknown function {tok.text!r}", tok.column)
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected a value, found {found}", tok.column)

    def rational_literal(self) -> Fraction:
        tok = self.expect("int", "an integer literal")
        value = Fraction(int(tok.text))
        # Maximal munch: int '/' posint is one rational literal.
        if self.peek().kind == "/" and self.peek(1).kind == "int":
            self.advance()
            den_tok = self.advance()
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("denominator must be positive", den_tok.column)
            value = Fraction(value, den)
        return value

    def signed_int_literal(self, what: str) -> int:
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        tok = self.peek()
        if tok.kind != "int":
            raise ParseError(what, tok.column)
        self.advance()
        value = int(tok.text)
        return -value if negative else value

    def func(self) -> Call:
        name = self.advance().text
        self.expect("(", "'('")
        if name == "Li":
            order = self.signed_int_literal("Li order must be an integer literal")
            self.expect(",", "','")
            arg = self.expr()
            self.expect(")", "')'")
            return Call("Li", (order, arg))
        if name == "pow1p":
            negative = False
            if self.peek().kind == "-":
                self.advance()
                negative = True
            tok = self.peek()
            if tok.kind != "int":
                raise ParseError("pow1p argument must be a rational literal", tok.column)
            value = self.rational_literal()
            self.expect(")", "')'")
            return Call("pow1p", (-value if negative else value,))
        arg = self.expr()
        self.expect(")", "')'")
        return Call(name, (arg,))


def parse_expr(text: str) -> object:
    """Parse the expression language into an AST; errors carry a column."""
    return _Parser(_tokenize(text)).parse()


# -- evaluator -----------------------------------------------------------


def _eval_at(node: object, order: int) -> TruncatedSeries:
    """Evaluate at a working order; divisions may shrink the result order."""
    if isinstance(node, Const):
        return constant_series(node.value, order)
    if isinstance(node, Var):
        return t_series(order)
    if isinstance(node, Pow):
        return _eval_at(node.base, order) ** node.exponent
    if isinstance(node, Call):
        if node.name == "pow1p":
            return pow1p_series(node.args[0], order)
        if node.name == "Li":
            return polylog_series(node.args[0], _eval_at(node.args[1], order))
        inner = _eval_at(node.args[0], order)
        outer = exp_series(Fraction(1), inner.order) if node.name == "exp" else log1p_series(inner.order)
        return outer.compose(inner)
    assert isinstance(node, BinOp)
    left = _eval_at(node.left, order)
    right = _eval_at(node.right, order)
    common = min(left.order, right.order)
    left = left.truncate(common)
    right = right.truncate(common)
    if node.op == "add":
        return left + right
    if node.op == "sub":
        return left - right
    if node.op == "mul":
        return left * right
    return _divide(left, right)


def _divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    v = den.valuation()
    if v is None:
        raise _AllZeroDenominator()
    if v == 0:
        return num.div_unit(den)
    num_v = num.valuation()
    if num_v is None:
        # Zero numerator: the quotient is zero at the shifted order.
        return constant_series(Fraction(0), num.order - v)
    if num_v < v:
        raise EvalError("series quotient not a power series")
    return num.div_valuation(den, v)


def eval_expr(node: object, order: int) -> TruncatedSeries:
    """Exact series value of an AST at the requested truncation order.

    Valuation-shifting divisions lose top coefficients, and a denominator's
    leading zeros may fill the whole working window at small orders; both
    cases re-evaluate the tree at a padded working order. A denominator whose
    valuation exceeds max(2*order, order+8) is reported as not a power
    series, exactly like a zero denominator.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    work = order
    escalated = False
    for _ in range(5):
        try:
            result = _eval_at(node, work)
        except _AllZeroDenominator:
            if escalated:
                raise EvalError("series quotient not a power series") from None
            escalated = True
            work = max(work, 2 * order, order + 8)
            continue
        if result.order >= order:
            return result.truncate(order)
        work += order - result.order
    raise EvalError("expression did not stabilize at the requested order")
