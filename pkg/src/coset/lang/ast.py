"""MiniLang abstract syntax tree.

Nodes use identity equality (``eq=False``) so they can key side tables;
structural comparison (spans ignored) is provided by ``structurally_equal``.
All nodes are treated as immutable after construction: transformation
passes rebuild subtrees instead of mutating them.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Optional, Union

INT = "int"
LONG = "long"
FLOAT = "float"
DOUBLE = "double"
BOOL = "bool"
CHAR = "char"
STRING = "string"

SCALAR_KINDS = (INT, LONG, FLOAT, DOUBLE, BOOL, CHAR, STRING)
INT_GROUP = (INT, LONG)
FLOAT_GROUP = (FLOAT, DOUBLE)
NUMERIC_KINDS = INT_GROUP + FLOAT_GROUP


@dataclass(frozen=True)
class Span:
    """Half-open character range [lo, hi) into the source text."""

    lo: int = 0
    hi: int = 0


NO_SPAN = Span(0, 0)


@dataclass(frozen=True)
class Type:
    """Scalar type, or array-of-scalar when ``array`` is true."""

    kind: str
    array: bool = False

    def elem(self) -> "Type":
        assert self.array
        return Type(self.kind)

    @property
    def is_numeric(self) -> bool:
        return not self.array and self.kind in NUMERIC_KINDS

    @property
    def is_int_group(self) -> bool:
        return not self.array and self.kind in INT_GROUP

    @property
    def is_float_group(self) -> bool:
        return not self.array and self.kind in FLOAT_GROUP

    def __str__(self) -> str:
        return f"{self.kind}[]" if self.array else self.kind


T_INT = Type(INT)
T_LONG = Type(LONG)
T_FLOAT = Type(FLOAT)
T_DOUBLE = Type(DOUBLE)
T_BOOL = Type(BOOL)
T_CHAR = Type(CHAR)
T_STRING = Type(STRING)


@dataclass(eq=False)
class Node:
    span: Span = field(default=NO_SPAN, kw_only=True)


# --- expressions ---------------------------------------------------------

@dataclass(eq=False)
class Expr(Node):
    pass


@dataclass(eq=False)
class IntLit(Expr):
    value: int


@dataclass(eq=False)
class FloatLit(Expr):
    value: float


@dataclass(eq=False)
class BoolLit(Expr):
    value: bool


@dataclass(eq=False)
class CharLit(Expr):
    value: str  # exactly one character


@dataclass(eq=False)
class StringLit(Expr):
    value: str


@dataclass(eq=False)
class ArrayLit(Expr):
    elems: list[Expr]


@dataclass(eq=False)
class Var(Expr):
    name: str


@dataclass(eq=False)
class Unary(Expr):
    op: str  # '-' or '!'
    operand: Expr


@dataclass(eq=False)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(eq=False)
class Index(Expr):
    array: Expr
    index: Expr


@dataclass(eq=False)
class Call(Expr):
    name: str
    args: list[Expr]


# --- statements ----------------------------------------------------------

@dataclass(eq=False)
class Stmt(Node):
    pass


@dataclass(eq=False)
class VarDecl(Stmt):
    decl_type: Type
    name: str
    init: Optional[Expr] = None


@dataclass(eq=False)
class Assign(Stmt):
    target: Union[Var, Index]
    op: str  # '=', '+=', '-=', '*=', '/=', '%='
    value: Expr


@dataclass(eq=False)
class Block(Stmt):
    stmts: list[Stmt]


@dataclass(eq=False)
class If(Stmt):
    cond: Expr
    then: Block
    orelse: Optional[Union[Block, "If"]] = None


@dataclass(eq=False)
class Case(Node):
    label: Expr  # int/char literal, possibly under unary minus
    body: list[Stmt]


@dataclass(eq=False)
class Switch(Stmt):
    scrutinee: Expr
    cases: list[Case]
    default: Optional[list[Stmt]] = None


@dataclass(eq=False)
class While(Stmt):
    cond: Expr
    body: Block


@dataclass(eq=False)
class For(Stmt):
    init: Optional[Stmt]  # VarDecl or Assign, no trailing ';'
    cond: Optional[Expr]
    step: Optional[Stmt]  # Assign
    body: Block


@dataclass(eq=False)
class Break(Stmt):
    pass


@dataclass(eq=False)
class Continue(Stmt):
    pass


@dataclass(eq=False)
class Return(Stmt):
    value: Expr


@dataclass(eq=False)
class ExprStmt(Stmt):
    expr: Call


# --- top level -----------------------------------------------------------

@dataclass(eq=False)
class Param(Node):
    type: Type
    name: str


@dataclass(eq=False)
class Function(Node):
    ret_type: Type
    name: str
    params: list[Param]
    body: Block


@dataclass(eq=False)
class Program(Node):
    functions: list[Function]

    @property
    def entry(self) -> Function:
        """The first function in the file is the entry point."""
        return self.functions[0]

    def function(self, name: str) -> Optional[Function]:
        for f in self.functions:
            if f.name == name:
                return f
        return None


# --- structural equality and generic traversal ---------------------------

def structurally_equal(a, b) -> bool:
    """Compare two nodes (or node lists) ignoring spans."""
    if isinstance(a, Node) and isinstance(b, Node):
        if type(a) is not type(b):
            return False
        for f in dataclasses.fields(a):
            if f.name == "span":
                continue
            if not structurally_equal(getattr(a, f.name), getattr(b, f.name)):
                return False
        return True
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(
            structurally_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, Node) or isinstance(b, Node):
        return False
    return a == b


def children(node: Node) -> list[Node]:
    """Immediate child nodes, in source order."""
    out: list[Node] = []
    for f in dataclasses.fields(node):
        if f.name == "span":
            continue
        v = getattr(node, f.name)
        if isinstance(v, Node):
            out.append(v)
        elif isinstance(v, list):
            out.extend(x for x in v if isinstance(x, Node))
    return out


def walk(node: Node):
    """Yield node and all descendants, pre-order."""
    yield node
    for c in children(node):
        yield from walk(c)
