"""Loop unrolling (LU).

Applies to counted for-loops ``for (i = a; i < b; i += c)`` with a
positive literal stride, no break/continue bound to the loop, and no
writes to the induction variable inside the body. The rewrite keeps the
original guard before every duplicated iteration, so the sequence of
condition evaluations, body executions, and faults is exactly that of
the source loop on every input:

    { INIT; while (COND) { BODY; STEP; if (COND) { BODY; STEP; ... } } }
"""

from __future__ import annotations

import copy
import dataclasses

from ..lang.ast import (
    Assign, Binary, Block, Break, Continue, For, If, IntLit, Program, Stmt,
    Switch, Unary, Var, VarDecl, While, walk,
)
from .analysis import written_names
from .base import Edit, TransformResult


def _own_break_or_continue(block: Block) -> bool:
    """Break/continue statements binding to this loop's body."""

    def scan(stmts) -> bool:
        for s in stmts:
            if isinstance(s, (Break, Continue)):
                return True
            if isinstance(s, (While, For)):
                continue  # bound to the inner loop
            if isinstance(s, Block) and scan(s.stmts):
                return True
            if isinstance(s, If):
                if scan(s.then.stmts):
                    return True
                node = s.orelse
                while isinstance(node, If):
                    if scan(node.then.stmts):
                        return True
                    node = node.orelse
                if node is not None and scan(node.stmts):
                    return True
            if isinstance(s, Switch):
                for c in s.cases:
                    if scan(c.body):
                        return True
                if s.default is not None and scan(s.default):
                    return True
        return False

    return scan(block.stmts)


def _stride_literal(step: Assign) -> int | None:
    if step.op == "+=":
        if isinstance(step.value, IntLit):
            return step.value.value
        return None
    if step.op == "=" and isinstance(step.value, Binary) and step.value.op == "+":
        v = step.value
        if isinstance(v.left, Var) and isinstance(step.target, Var) \
                and v.left.name == step.target.name and isinstance(v.right, IntLit):
            return v.right.value
    return None


def _applicable(s: For) -> bool:
    if s.cond is None or s.step is None:
        return False
    if not isinstance(s.step.target, Var):
        return False
    ivar = s.step.target.name
    stride = _stride_literal(s.step)
    if stride is None or stride < 1:
        return False
    if not (isinstance(s.cond, Binary) and s.cond.op in ("<", "<=")
            and isinstance(s.cond.left, Var) and s.cond.left.name == ivar):
        return False
    if s.init is not None:
        bound_name = (s.init.name if isinstance(s.init, VarDecl)
                      else s.init.target.name if isinstance(s.init.target, Var)
                      else None)
        if bound_name != ivar:
            return False
    if ivar in written_names(s.body):
        return False
    if _own_break_or_continue(s.body):
        return False
    return True


def _unrolled(s: For, factor: int) -> Stmt:
    def group(depth: int) -> list[Stmt]:
        body = copy.deepcopy(s.body)
        step = copy.deepcopy(s.step)
        stmts: list[Stmt] = [body, step]
        if depth < factor:
            guard = If(copy.deepcopy(s.cond), Block(group(depth + 1),
                                                    span=s.body.span),
                       span=s.span)
            stmts.append(guard)
        return stmts

    loop = While(copy.deepcopy(s.cond), Block(group(1), span=s.body.span),
                 span=s.span)
    head: list[Stmt] = []
    if s.init is not None:
        head.append(s.init)
    head.append(loop)
    return Block(head, span=s.span)


class _Unroller:
    def __init__(self, factor: int):
        self.factor = factor
        self.edits: list[Edit] = []

    def stmts(self, stmts: list[Stmt]) -> list[Stmt]:
        return [self.stmt(s) for s in stmts]

    def stmt(self, s: Stmt) -> Stmt:
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.stmts(s.stmts))
        if isinstance(s, If):
            then = self.stmt(s.then)
            orelse = self.stmt(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, then=then, orelse=orelse)
        if isinstance(s, While):
            return dataclasses.replace(s, body=self.stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=self.stmts(c.body))
                     for c in s.cases]
            default = self.stmts(s.default) if s.default is not None else None
            return dataclasses.replace(s, cases=cases, default=default)
        if isinstance(s, For):
            body = self.stmt(s.body)
            s = dataclasses.replace(s, body=body)
            if _applicable(s):
                self.edits.append(Edit(s.span, f"unrolled loop by factor "
                                               f"{self.factor}"))
                return _unrolled(s, self.factor)
            return s
        return s


def loop_unroll(program: Program, factor: int = 2) -> TransformResult:
    """Unroll counted for-loops by the given factor (default 2)."""
    if factor < 2:
        raise ValueError("unroll factor must be at least 2")
    u = _Unroller(factor)
    functions = [dataclasses.replace(f, body=u.stmt(f.body))
                 for f in program.functions]
    if not u.edits:
        return TransformResult("LU", program, False, config={"factor": factor})
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("LU", new, True, u.edits, {"factor": factor})
