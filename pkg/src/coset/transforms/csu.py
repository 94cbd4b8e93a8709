"""Control statement unification (CSU).

Two exact rewrites: ``switch`` into an if/else-if chain (the scrutinee
is evaluated once, into a fresh temporary unless it is already a plain
variable), and ``for`` into ``while`` (init hoisted into an enclosing
block, step appended to the body, ``continue`` rewritten to run the
step first).
"""

from __future__ import annotations

import copy
import dataclasses

from ..lang.ast import (
    Assign, Binary, Block, BoolLit, Break, Call, Continue, Expr, ExprStmt,
    For, If, Program, Return, Stmt, Switch, Type, VarDecl, Var, While, walk,
)
from ..lang.check import typed
from .analysis import fresh_names
from .base import Edit, TransformResult

DIRECTIONS = ("all", "switch_to_if", "for_to_while")


class _Csu:
    def __init__(self, program: Program, direction: str):
        self.direction = direction
        self.types = typed(program).types
        self.temps = fresh_names(program, "_s",
                                 sum(1 for n in walk(program)
                                     if isinstance(n, Switch)))
        self.temp_i = 0
        self.edits: list[Edit] = []

    def do_switch(self) -> bool:
        return self.direction in ("all", "switch_to_if")

    def do_for(self) -> bool:
        return self.direction in ("all", "for_to_while")

    def stmts(self, stmts: list[Stmt]) -> list[Stmt]:
        return [self.stmt(s) for s in stmts]

    def stmt(self, s: Stmt) -> Stmt:
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.stmts(s.stmts))
        if isinstance(s, If):
            orelse = self.stmt(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, then=self.stmt(s.then), orelse=orelse)
        if isinstance(s, While):
            return dataclasses.replace(s, body=self.stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=self.stmts(c.body))
                     for c in s.cases]
            default = self.stmts(s.default) if s.default is not None else None
            s = dataclasses.replace(s, cases=cases, default=default)
            return self.switch_to_if(s) if self.do_switch() else s
        if isinstance(s, For):
            s = dataclasses.replace(s, body=self.stmt(s.body))
            return self.for_to_while(s) if self.do_for() else s
        return s

    def switch_to_if(self, s: Switch) -> Stmt:
        self.edits.append(Edit(s.span, "switch rewritten to if-else chain"))
        pre: list[Stmt] = []
        if isinstance(s.scrutinee, Var):
            scrut_name = s.scrutinee.name
        else:
            scrut_name = self.temps[self.temp_i]
            self.temp_i += 1
            sty = self.types[s.scrutinee]
            pre.append(VarDecl(Type(sty.kind), scrut_name, s.scrutinee,
                               span=s.scrutinee.span))
        chain: Stmt | None = (Block(list(s.default), span=s.span)
                              if s.default is not None else None)
        for case in reversed(s.cases):
            cond = Binary("==", Var(scrut_name, span=case.label.span),
                          case.label, span=case.label.span)
            chain = If(cond, Block(list(case.body), span=case.span),
                       chain, span=case.span)
        if chain is None:
            # switch with no cases: only the scrutinee evaluation remains
            return Block(pre, span=s.span)
        return Block(pre + [chain], span=s.span)

    def for_to_while(self, s: For) -> Stmt:
        self.edits.append(Edit(s.span, "for loop rewritten to while"))
        step = s.step
        body_stmts = list(s.body.stmts)
        if step is not None:
            body_stmts = [_rewrite_continues(x, step) for x in body_stmts]
            body_stmts.append(copy.deepcopy(step))
        cond = s.cond if s.cond is not None else BoolLit(True, span=s.span)
        loop = While(cond, Block(body_stmts, span=s.body.span), span=s.span)
        head: list[Stmt] = [s.init] if s.init is not None else []
        return Block(head + [loop], span=s.span)


def _rewrite_continues(s: Stmt, step: Assign) -> Stmt:
    """Prefix continues bound to this loop with a copy of the step."""
    if isinstance(s, Continue):
        return Block([copy.deepcopy(step), s], span=s.span)
    if isinstance(s, Block):
        return dataclasses.replace(
            s, stmts=[_rewrite_continues(x, step) for x in s.stmts])
    if isinstance(s, If):
        orelse = (_rewrite_continues(s.orelse, step)
                  if s.orelse is not None else None)
        return dataclasses.replace(s, then=_rewrite_continues(s.then, step),
                                   orelse=orelse)
    if isinstance(s, Switch):
        cases = [dataclasses.replace(
            c, body=[_rewrite_continues(x, step) for x in c.body])
            for c in s.cases]
        default = ([_rewrite_continues(x, step) for x in s.default]
                   if s.default is not None else None)
        return dataclasses.replace(s, cases=cases, default=default)
    return s  # nested loops keep their own continues


def unify_control_statements(program: Program,
                             direction: str = "all") -> TransformResult:
    """Rewrite switches to if-else chains and/or for loops to while."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    pass_ = _Csu(program, direction)
    functions = [dataclasses.replace(f, body=pass_.stmt(f.body))
                 for f in program.functions]
    if not pass_.edits:
        return TransformResult("CSU", program, False,
                               config={"direction": direction})
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("CSU", new, True, pass_.edits,
                           {"direction": direction})
