"""Shared pass analyses: effects, reads/writes, folding, fresh names."""

from __future__ import annotations

import dataclasses

from ..interp.numerics import f32, idiv, imod, wrap32, wrap64
from ..lang.ast import (
    ArrayLit, Assign, Binary, BoolLit, Call, CharLit, Expr, FloatLit, Index,
    IntLit, Node, Stmt, StringLit, Type, Unary, Var, VarDecl,
    T_BOOL, T_LONG, T_DOUBLE,
    walk,
)
from ..lang.builtins import BUILTINS, CONSTANTS


def written_names(node: Node) -> set[str]:
    """Variables a subtree may write: assignments, declarations, and
    arrays mutated in place (element stores, Sort)."""
    out: set[str] = set()
    for n in walk(node):
        if isinstance(n, Assign):
            if isinstance(n.target, Var):
                out.add(n.target.name)
            elif isinstance(n.target.array, Var):
                out.add(n.target.array.name)
        elif isinstance(n, VarDecl):
            out.add(n.name)
        elif isinstance(n, Call) and n.name == "Sort":
            if n.args and isinstance(n.args[0], Var):
                out.add(n.args[0].name)
    return out


def read_names(node: Node) -> set[str]:
    out: set[str] = set()
    for n in walk(node):
        if isinstance(n, Var) and n.name not in CONSTANTS:
            out.add(n.name)
    return out


def used_identifiers(node: Node) -> set[str]:
    """Every identifier token in the subtree (variables and calls)."""
    out: set[str] = set()
    for n in walk(node):
        if isinstance(n, Var):
            out.add(n.name)
        elif isinstance(n, (VarDecl, Call)):
            out.add(n.name)
        elif hasattr(n, "name"):
            out.add(n.name)
    return out


def _const_divisor_ok(e: Binary) -> bool:
    lit = e.right
    neg = False
    while isinstance(lit, Unary) and lit.op == "-":
        neg, lit = not neg, lit.operand
    if isinstance(lit, IntLit):
        return lit.value != 0
    if isinstance(lit, FloatLit):
        return lit.value != 0.0
    return False


def is_pure_total(e: Expr, allow_total_builtins: bool = False) -> bool:
    """True when evaluating e has no side effect and cannot fault.

    Division and modulo qualify only with a non-zero literal divisor;
    indexing and user calls never qualify. With ``allow_total_builtins``
    the fault-free builtins (Length, GetNumericValue, ToInt) qualify.
    """
    for n in walk(e):
        if isinstance(n, Index):
            return False
        if isinstance(n, Call):
            if not allow_total_builtins:
                return False
            b = BUILTINS.get(n.name)
            if b is None or not (b.pure and b.total):
                return False
        if isinstance(n, Binary) and n.op in ("/", "%") and not _const_divisor_ok(n):
            return False
    return True


def is_literal(e: Expr) -> bool:
    return isinstance(e, (IntLit, FloatLit, BoolLit, CharLit, StringLit))


def literal_value(e: Expr):
    assert is_literal(e)
    return e.value  # type: ignore[attr-defined]


def make_literal(value, ty: Type, span) -> Expr | None:
    """Literal node for a folded value, or None if not renderable."""
    if ty.kind in ("int", "long"):
        if value < 0:
            return Unary("-", IntLit(-value, span=span), span=span)
        return IntLit(value, span=span)
    if ty.kind in ("float", "double"):
        if value != value or value in (float("inf"), float("-inf")):
            return None  # no literal syntax for non-finite values
        if value < 0 or str(value)[0] == "-":  # catches -0.0
            return Unary("-", FloatLit(-value, span=span), span=span)
        return FloatLit(value, span=span)
    if ty.kind == "bool":
        return BoolLit(value, span=span)
    if ty.kind == "char":
        return CharLit(value, span=span)
    if ty.kind == "string":
        return StringLit(value, span=span)
    return None


def fold_binary(op: str, a, b, ty: Type):
    """Evaluate a binary op on literal values at the result type's width.

    Returns (ok, value); division by zero and float modulo fold to
    (False, None) so the runtime fault is preserved.
    """
    if ty.kind in ("int", "long"):
        wrap = wrap64 if ty == T_LONG else wrap32
        if op == "+":
            return True, wrap(a + b)
        if op == "-":
            return True, wrap(a - b)
        if op == "*":
            return True, wrap(a * b)
        if op == "/":
            return (True, wrap(idiv(a, b))) if b != 0 else (False, None)
        if op == "%":
            return (True, imod(a, b)) if b != 0 else (False, None)
    if ty.kind in ("float", "double"):
        narrow = (lambda v: v) if ty == T_DOUBLE else f32
        if op == "+":
            return True, narrow(a + b)
        if op == "-":
            return True, narrow(a - b)
        if op == "*":
            return True, narrow(a * b)
        if op == "/":
            return (True, narrow(a / b)) if b != 0.0 else (False, None)
    return False, None


def fold_compare(op: str, a, b):
    if op == "<":
        return a < b
    if op == "<=":
        return a <= b
    if op == ">":
        return a > b
    if op == ">=":
        return a >= b
    if op == "==":
        return a == b
    return a != b


def fresh_names(node: Node, prefix: str, count: int) -> list[str]:
    """Names with the given prefix not colliding with anything in scope."""
    used = used_identifiers(node) | set(BUILTINS) | set(CONSTANTS)
    out: list[str] = []
    i = 0
    while len(out) < count:
        cand = f"{prefix}{i}"
        if cand not in used:
            out.append(cand)
            used.add(cand)
        i += 1
    return out


def replace_fields(node: Node, **changes) -> Node:
    return dataclasses.replace(node, **changes)
