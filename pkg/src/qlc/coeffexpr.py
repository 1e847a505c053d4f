"""Coefficient expressions over the variables n, k and q.

Grammar (whitespace is ignored, implicit multiplication is not allowed)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' UINT)?
    atom   := UINT | 'n' | 'k' | 'q' | '-' atom | '(' expr ')'

Note that unary minus binds tighter than ``^``: ``-q^2`` means ``(-q)^2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ExprSyntaxError
from .qpoly import Q, QPoly

__all__ = ["Num", "Var", "Neg", "Add", "Sub", "Mul", "Pow", "CoeffExpr",
           "parse", "evaluate", "render", "variables", "as_expr"]


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "CoeffExpr"


@dataclass(frozen=True)
class Add:
    left: "CoeffExpr"
    right: "CoeffExpr"


@dataclass(frozen=True)
class Sub:
    left: "CoeffExpr"
    right: "CoeffExpr"


@dataclass(frozen=True)
class Mul:
    left: "CoeffExpr"
    right: "CoeffExpr"


@dataclass(frozen=True)
class Pow:
    base: "CoeffExpr"
    exponent: int


CoeffExpr = Union[Num, Var, Neg, Add, Sub, Mul, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([nkq])|([-+*^()]))")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(src, pos)
            if m is None:
                rest = src[pos:]
                if rest.strip() == "":
                    break
                bad = pos + (len(rest) - len(rest.lstrip()))
                raise ExprSyntaxError(src, self._byte(bad), {"integer", "n", "k", "q", "-", "("})
            start = m.start(m.lastindex)
            kind = ("int", "var", "op")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        self.tokens.append(("end", "", len(src)))
        self.i = 0

    def _byte(self, index: int) -> int:
        return len(self.src[:index].encode("utf-8"))

    def peek(self):
        return self.tokens[self.i]

    def fail(self, expected: set[str]):
        raise ExprSyntaxError(self.src, self._byte(self.peek()[2]), expected)

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0:2] == ("op", "*"):
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0:2] == ("op", "^"):
            self.take()
            kind, text, _ = self.peek()
            if kind != "int":
                self.fail({"unsigned integer exponent"})
            self.take()
            node = Pow(node, int(text))
        return node

    def atom(self):
        kind, text, _ = self.peek()
        if kind == "int":
            self.take()
            return Num(int(text))
        if kind == "var":
            self.take()
            return Var(text)
        if (kind, text) == ("op", "-"):
            self.take()
            return Neg(self.atom())
        if (kind, text) == ("op", "("):
            self.take()
            node = self.expr()
            if self.peek()[0:2] != ("op", ")"):
                self.fail({")", "+", "-", "*", "^"})
            self.take()
            return node
        self.fail({"integer", "n", "k", "q", "-", "("})

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail({"+", "-", "*", "^", "end of input"})
        return node


def parse(src: str) -> CoeffExpr:
    """Parse ``src``; raises :class:`ExprSyntaxError` with the byte offset."""
    if not isinstance(src, str):
        raise TypeError("expression source must be a string")
    return _Parser(src).parse()


def as_expr(e) -> CoeffExpr:
    if isinstance(e, str):
        return parse(e)
    if isinstance(e, int) and not isinstance(e, bool):
        return parse(str(e))
    if isinstance(e, (Num, Var, Neg, Add, Sub, Mul, Pow)):
        return e
    raise TypeError(f"not a coefficient expression: {e!r}")


def evaluate(e: CoeffExpr, n: int, k: int) -> QPoly:
    """Substitute integers for n and k; the result is a polynomial in q."""
    if isinstance(e, Num):
        return QPoly.const(e.value)
    if isinstance(e, Var):
        if e.name == "q":
            return Q
        return QPoly.const(n if e.name == "n" else k)
    if isinstance(e, Neg):
        return -evaluate(e.operand, n, k)
    if isinstance(e, Add):
        return evaluate(e.left, n, k) + evaluate(e.right, n, k)
    if isinstance(e, Sub):
        return evaluate(e.left, n, k) - evaluate(e.right, n, k)
    if isinstance(e, Mul):
        return evaluate(e.left, n, k) * evaluate(e.right, n, k)
    if isinstance(e, Pow):
        return evaluate(e.base, n, k) ** e.exponent
    raise TypeError(f"not a coefficient expression: {e!r}")


def variables(e: CoeffExpr) -> set[str]:
    if isinstance(e, Num):
        return set()
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Neg):
        return variables(e.operand)
    if isinstance(e, Pow):
        return variables(e.base)
    return variables(e.left) | variables(e.right)


# precedence levels: 1 additive, 2 multiplicative, 3 power, 4 atom
def _level(e) -> int:
    if isinstance(e, (Add, Sub)):
        return 1
    if isinstance(e, Mul):
        return 2
    if isinstance(e, Pow):
        return 3
    return 4


def _wrap(e, min_level: int) -> str:
    text = render(e)
    return text if _level(e) >= min_level else f"({text})"


def render(e: CoeffExpr) -> str:
    """Canonical text with the fewest parentheses that re-parse to ``e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 4)
    if isinstance(e, Add):
        return f"{_wrap(e.left, 1)}+{_wrap(e.right, 2)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, 1)}-{_wrap(e.right, 2)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, 2)}*{_wrap(e.right, 3)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, 4)}^{e.exponent}"
    raise TypeError(f"not a coefficient expression: {e!r}")
