"""A small arithmetic expression language for problem configuration files.

Grammar (whitespace insignificant, no implicit multiplication):

    expr   := term  (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          # right-associative
    atom   := NUMBER | 'x' | 't' | 'pi'
            | NAME '(' expr ')'
            | '(' expr ')'

Unary minus binds looser than '^', so -x^2 is -(x^2); 2^3^2 is 2^(3^2).
Numbers are unsigned decimals with optional fraction and exponent.
Known functions: sin, cos, tan, exp, sqrt, abs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

_FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "exp": math.exp,
    "sqrt": math.sqrt,
    "abs": abs,
}

_VARIABLES = ("x", "t")


class ExpressionError(ValueError):
    """Base class for everything this module raises."""


class ExpressionSyntaxError(ExpressionError):
    """Malformed source text; carries the byte offset and what was expected."""

    def __init__(self, position: int, expected: tuple[str, ...], found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"syntax error at offset {position}: expected "
            f"{' or '.join(expected)}, found {found}"
        )


class UnknownFunctionError(ExpressionError):
    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(
            f"unknown function {name!r} at offset {position} "
            f"(known: {', '.join(sorted(_FUNCTIONS))})"
        )


class EvaluationError(ExpressionError):
    """Division by zero or a domain violation while evaluating."""

    def __init__(self, operation: str, operands: tuple[float, ...]):
        self.operation = operation
        self.operands = operands
        shown = ", ".join(repr(v) for v in operands)
        super().__init__(f"cannot evaluate {operation!r} with operands ({shown})")


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Neg, BinOp, Call]

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | "op" | "end"
    text: str
    position: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None or match.lastgroup is None:
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            at = len(source) - len(stripped)
            raise ExpressionSyntaxError(at, ("a number", "a name", "an operator"), repr(source[at]))
        tokens.append(
            _Token(match.lastgroup, match.group(match.lastgroup), match.start(match.lastgroup))
        )
        pos = match.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.cursor = 0

    def peek(self) -> _Token:
        return self.tokens[self.cursor]

    def advance(self) -> _Token:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def fail(self, expected: tuple[str, ...]) -> None:
        token = self.peek()
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(token.position, expected, found)

    def expect_op(self, text: str) -> None:
        token = self.peek()
        if token.kind == "op" and token.text == text:
            self.advance()
            return
        self.fail((repr(text),))

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != "end":
            self.fail(("'+'", "'-'", "'*'", "'/'", "'^'", "end of input"))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            return BinOp("^", node, self.unary())
        return node

    def atom(self) -> Node:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return Num(float(token.text))
        if token.kind == "name":
            self.advance()
            if token.text in _VARIABLES:
                return Var(token.text)
            if token.text == "pi":
                return Num(math.pi)
            if self.peek().kind == "op" and self.peek().text == "(":
                if token.text not in _FUNCTIONS:
                    raise UnknownFunctionError(token.text, token.position)
                self.advance()
                arg = self.expr()
                self.expect_op(")")
                return Call(token.text, arg)
            raise UnknownFunctionError(token.text, token.position)
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        self.fail(("a number", "'x'", "'t'", "'pi'", "a function name", "'('"))
        raise AssertionError("unreachable")


def _eval(node: Node, x: float, t: float) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return x if node.name == "x" else t
    if isinstance(node, Neg):
        return -_eval(node.operand, x, t)
    if isinstance(node, BinOp):
        left = _eval(node.left, x, t)
        right = _eval(node.right, x, t)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            try:
                return left / right
            except ZeroDivisionError:
                raise EvaluationError("/", (left, right)) from None
        try:
            return math.pow(left, right)
        except (ValueError, OverflowError):
            raise EvaluationError("^", (left, right)) from None
    if isinstance(node, Call):
        arg = _eval(node.arg, x, t)
        try:
            return _FUNCTIONS[node.func](arg)
        except (ValueError, OverflowError):
            raise EvaluationError(node.func, (arg,)) from None
    raise TypeError(f"not an expression node: {node!r}")


def _unparse(node: Node) -> str:
    if isinstance(node, Num):
        # parse() never produces a negative literal (a leading '-' becomes Neg),
        # so repr round-trips every reachable Num.
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{_unparse(node.operand)})"
    if isinstance(node, BinOp):
        return f"({_unparse(node.left)} {node.op} {_unparse(node.right)})"
    if isinstance(node, Call):
        return f"{node.func}({_unparse(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


def _collect_variables(node: Node, out: set[str]) -> None:
    if isinstance(node, Var):
        out.add(node.name)
    elif isinstance(node, Neg):
        _collect_variables(node.operand, out)
    elif isinstance(node, BinOp):
        _collect_variables(node.left, out)
        _collect_variables(node.right, out)
    elif isinstance(node, Call):
        _collect_variables(node.arg, out)


@dataclass(frozen=True)
class Expression:
    """A parsed expression in the variables x and t."""

    root: Node

    def evaluate(self, x: float = 0.0, t: float = 0.0) -> float:
        return _eval(self.root, x, t)

    def variables(self) -> frozenset[str]:
        names: set[str] = set()
        _collect_variables(self.root, names)
        return frozenset(names)

    def __str__(self) -> str:
        return _unparse(self.root)


def parse(source: str) -> Expression:
    """Parse source text into an :class:`Expression`."""
    return Expression(_Parser(source).parse())


def evaluate(expression: Expression, x: float = 0.0, t: float = 0.0) -> float:
    """Evaluate a parsed expression at the point (x, t)."""
    return expression.evaluate(x, t)
