"""Nested condition simplification (NCS).

Rewrites ``if (A) { if (B) { S } }`` (no elses, inner if alone in the
outer body) into ``if (A && B) { S }``. Short-circuit && keeps B guarded
by A, so even fault-capable inner conditions behave identically.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    Binary, Block, For, If, Program, Stmt, Switch, While,
)
from .base import Edit, TransformResult


class _Ncs:
    def __init__(self) -> None:
        self.edits: list[Edit] = []

    def stmts(self, stmts: list[Stmt]) -> list[Stmt]:
        return [self.stmt(s) for s in stmts]

    def stmt(self, s: Stmt) -> Stmt:
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.stmts(s.stmts))
        if isinstance(s, If):
            then = self.stmt(s.then)
            orelse = self.stmt(s.orelse) if s.orelse is not None else None
            s = dataclasses.replace(s, then=then, orelse=orelse)
            if (s.orelse is None and len(s.then.stmts) == 1
                    and isinstance(s.then.stmts[0], If)
                    and s.then.stmts[0].orelse is None):
                inner = s.then.stmts[0]
                self.edits.append(Edit(s.span, "merged nested conditions"))
                cond = Binary("&&", s.cond, inner.cond, span=s.cond.span)
                return dataclasses.replace(s, cond=cond, then=inner.then)
            return s
        if isinstance(s, While):
            return dataclasses.replace(s, body=self.stmt(s.body))
        if isinstance(s, For):
            return dataclasses.replace(s, body=self.stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=self.stmts(c.body))
                     for c in s.cases]
            default = self.stmts(s.default) if s.default is not None else None
            return dataclasses.replace(s, cases=cases, default=default)
        return s


def simplify_nested_conditions(program: Program) -> TransformResult:
    """Collapse guard-style nested ifs into a single && condition."""
    pass_ = _Ncs()
    functions = [dataclasses.replace(f, body=pass_.stmt(f.body))
                 for f in program.functions]
    if not pass_.edits:
        return TransformResult("NCS", program, False)
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("NCS", new, True, pass_.edits)
