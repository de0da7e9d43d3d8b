"""A small expression language for writing generating functions as text.

Grammar (left-associative, standard precedence):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int | 'x' | ident | ident '(' expr ')' | '(' expr ')'

Reserved identifiers: ``x``, ``sqrt``, ``catalan``.  Any other identifier
must be supplied as a binding at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .errors import (
    EvaluationError,
    ExprSyntaxError,
    MRiordanError,
    UnknownIdentifier,
)
from .series import Series, catalan_series, compose, sqrt_unit

RESERVED = {"x", "sqrt", "catalan"}


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Var:
    name: str  # "x" or a binding name
    pos: int = 0


@dataclass(frozen=True)
class Bin:
    op: str  # '+', '-', '*', '/'
    left: "Node"
    right: "Node"
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class Call:
    func: str  # 'sqrt' or 'catalan'
    arg: "Node"
    pos: int = 0


Node = Union[Num, Var, Bin, Neg, Pow, Call]


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        t = self.text
        i = self.pos
        while i < len(t) and t[i].isspace():
            i += 1
        self.pos = i
        if i >= len(t):
            return ("eof", "", i)
        ch = t[i]
        if ch.isdigit():
            j = i
            while j < len(t) and t[j].isdigit():
                j += 1
            return ("int", t[i:j], i)
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(t) and (t[j].isalnum() or t[j] == "_"):
                j += 1
            return ("ident", t[i:j], i)
        if ch in "+-*/^()":
            return (ch, ch, i)
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)

    def next(self):
        kind, text, pos = self.peek()
        self.pos = pos + len(text)
        return kind, text, pos


def parse(text: str) -> Node:
    tok = _Tokenizer(text)
    node = _parse_expr(tok)
    kind, _, pos = tok.peek()
    if kind != "eof":
        raise ExprSyntaxError("trailing input", pos)
    return node


def _parse_expr(tok) -> Node:
    node = _parse_term(tok)
    while True:
        kind, _, pos = tok.peek()
        if kind in ("+", "-"):
            tok.next()
            node = Bin(kind, node, _parse_term(tok), pos)
        else:
            return node


def _parse_term(tok) -> Node:
    node = _parse_factor(tok)
    while True:
        kind, _, pos = tok.peek()
        if kind in ("*", "/"):
            tok.next()
            node = Bin(kind, node, _parse_factor(tok), pos)
        else:
            return node


def _parse_factor(tok) -> Node:
    kind, _, pos = tok.peek()
    if kind == "-":
        tok.next()
        return Neg(_parse_factor(tok), pos)
    node = _parse_atom(tok)
    kind, _, pos = tok.peek()
    if kind == "^":
        tok.next()
        node = Pow(node, _parse_exponent(tok), pos)
    return node


def _parse_exponent(tok) -> int:
    sign = 1
    kind, text, pos = tok.next()
    if kind == "-":
        sign = -1
        kind, text, pos = tok.next()
    if kind != "int":
        raise ExprSyntaxError("exponent must be an integer", pos)
    return sign * int(text)


def _parse_atom(tok) -> Node:
    kind, text, pos = tok.next()
    if kind == "int":
        return Num(int(text), pos)
    if kind == "(":
        node = _parse_expr(tok)
        kind, _, p2 = tok.next()
        if kind != ")":
            raise ExprSyntaxError("expected ')'", p2)
        return node
    if kind == "ident":
        nkind, _, _ = tok.peek()
        if nkind == "(":
            if text not in ("sqrt", "catalan"):
                raise UnknownIdentifier(text, pos)
            tok.next()
            arg = _parse_expr(tok)
            kind, _, p2 = tok.next()
            if kind != ")":
                raise ExprSyntaxError("expected ')'", p2)
            return Call(text, arg, pos)
        return Var(text, pos)
    raise ExprSyntaxError(f"unexpected token {text!r}", pos)


def to_text(node: Node) -> str:
    """Canonical printer; parse(to_text(ast)) reproduces the ast
    (modulo source positions)."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"-{_wrap(node.arg, atom=True)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, atom=True)}^{node.exponent}"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, Bin):
        left = _wrap(node.left, atom=node.op in "*/")
        right = _wrap(node.right, atom=True)
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


def _wrap(node: Node, atom: bool) -> str:
    text = to_text(node)
    if atom and isinstance(node, (Bin, Neg)):
        return f"({text})"
    return text


def evaluate(node: Node, bindings: Mapping[str, Series], order: int) -> Series:
    """Evaluate to an exact Series of the given order."""
    if isinstance(node, Num):
        return Series.constant(node.value, order)
    if isinstance(node, Var):
        if node.name == "x":
            if order < 1:
                raise EvaluationError("x needs order >= 1", node.pos)
            return Series.x(order)
        if node.name in bindings:
            return bindings[node.name].truncate(order)
        raise UnknownIdentifier(node.name, node.pos)
    if isinstance(node, Neg):
        return -evaluate(node.arg, bindings, order)
    if isinstance(node, Bin):
        a = evaluate(node.left, bindings, order)
        b = evaluate(node.right, bindings, order)
        try:
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
        except MRiordanError as exc:
            raise EvaluationError(str(exc), node.pos, cause=exc)
    if isinstance(node, Pow):
        base = evaluate(node.base, bindings, order)
        if node.exponent < 0 and not base[0]:
            raise EvaluationError(
                "negative exponent needs a unit constant term", node.pos
            )
        return base**node.exponent
    if isinstance(node, Call):
        arg = evaluate(node.arg, bindings, order)
        try:
            if node.func == "catalan":
                return compose(catalan_series(order), arg)
            return sqrt_unit(arg)
        except MRiordanError as exc:
            raise EvaluationError(str(exc), node.pos, cause=exc)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, order: int, bindings: Mapping[str, Series] | None = None) -> Series:
    return evaluate(parse(text), bindings or {}, order)
