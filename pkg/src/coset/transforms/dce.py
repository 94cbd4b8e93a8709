"""Dead code elimination (DCE).

Three removals, iterated to a fixpoint (which makes the pass idempotent):
statements following return/break/continue in a block, branches with
literal-false conditions, and stores to dead variables whose right-hand
side cannot fault or produce output. Calls to impure builtins are never
removed, and neither is any expression that could fault (indexing,
division with a non-literal divisor, user calls).
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    Assign, Block, BoolLit, Call, ExprStmt, For, If, Program, Return, Stmt,
    Switch, Var, VarDecl, While, Break, Continue,
)
from ..lang.builtins import BUILTINS
from .analysis import is_pure_total, read_names
from .base import Edit, TransformResult

_TERMINAL = (Return, Break, Continue)


class _Dce:
    def __init__(self) -> None:
        self.edits: list[Edit] = []
        self.changed = False
        self.loop_live: list[set[str]] = []

    # -- statement-level structure: unreachable code, constant branches --

    def prune_block_stmts(self, stmts: list[Stmt]) -> list[Stmt]:
        out: list[Stmt] = []
        for i, s in enumerate(stmts):
            s = self.prune(s)
            if s is None:
                continue
            out.append(s)
            if isinstance(s, _TERMINAL) and i + 1 < len(stmts):
                self.changed = True
                for dead in stmts[i + 1:]:
                    self.edits.append(Edit(dead.span, "removed unreachable statement"))
                break
        return out

    def prune(self, s: Stmt) -> Stmt | None:
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.prune_block_stmts(s.stmts))
        if isinstance(s, If):
            then = self.prune(s.then)
            orelse = self.prune(s.orelse) if s.orelse is not None else None
            if isinstance(s.cond, BoolLit):
                self.changed = True
                self.edits.append(Edit(s.span, "folded constant-condition branch"))
                if s.cond.value:
                    return then
                return orelse if orelse is not None else Block([], span=s.span)
            return dataclasses.replace(s, then=then, orelse=orelse)
        if isinstance(s, While):
            if isinstance(s.cond, BoolLit) and not s.cond.value:
                self.changed = True
                self.edits.append(Edit(s.span, "removed never-running loop"))
                return None
            return dataclasses.replace(s, body=self.prune(s.body))
        if isinstance(s, For):
            if (isinstance(s.cond, BoolLit) and not s.cond.value):
                self.changed = True
                self.edits.append(Edit(s.span, "removed never-running loop"))
                if s.init is None:
                    return None
                return Block([s.init], span=s.span)
            return dataclasses.replace(s, body=self.prune(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=self.prune_block_stmts(c.body))
                     for c in s.cases]
            default = (self.prune_block_stmts(s.default)
                       if s.default is not None else None)
            return dataclasses.replace(s, cases=cases, default=default)
        return s

    # -- liveness-based dead-store removal --

    def removable_call_stmt(self, e: Call) -> bool:
        b = BUILTINS.get(e.name)
        if b is None or not (b.pure and b.total):
            return False
        return all(is_pure_total(a, allow_total_builtins=True) for a in e.args)

    def sweep_block(self, stmts: list[Stmt], live: set[str]) -> list[Stmt]:
        out: list[Stmt] = []
        for s in reversed(stmts):
            new = self.sweep(s, live)
            if new is not None:
                out.append(new)
        out.reverse()
        return out

    def sweep(self, s: Stmt, live: set[str]) -> Stmt | None:
        """Backward scan; mutates `live` to the live-before set."""
        if isinstance(s, VarDecl):
            if s.name not in live and (
                    s.init is None or is_pure_total(s.init, True)):
                self.changed = True
                self.edits.append(Edit(s.span, f"removed dead declaration of '{s.name}'"))
                return None
            live.discard(s.name)
            if s.init is not None:
                live |= read_names(s.init)
            return s
        if isinstance(s, Assign):
            if isinstance(s.target, Var):
                name = s.target.name
                if name not in live and is_pure_total(s.value, True):
                    self.changed = True
                    self.edits.append(Edit(s.span, f"removed dead store to '{name}'"))
                    return None
                if s.op == "=":
                    live.discard(name)
                else:
                    live.add(name)
                live |= read_names(s.value)
            else:
                live.add(s.target.array.name)  # type: ignore[union-attr]
                live |= read_names(s.target.index)
                live |= read_names(s.value)
            return s
        if isinstance(s, ExprStmt):
            if self.removable_call_stmt(s.expr):
                self.changed = True
                self.edits.append(Edit(s.span, "removed effect-free call statement"))
                return None
            live |= read_names(s.expr)
            return s
        if isinstance(s, Return):
            live.clear()
            live |= read_names(s.value)
            return s
        if isinstance(s, (Break, Continue)):
            live.clear()
            if self.loop_live:
                live |= self.loop_live[-1]
            return s
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.sweep_block(s.stmts, live))
        if isinstance(s, If):
            then_live = set(live)
            then = dataclasses.replace(s.then,
                                       stmts=self.sweep_block(s.then.stmts, then_live))
            orelse = s.orelse
            else_live = set(live)
            if isinstance(s.orelse, If):
                orelse = self.sweep(s.orelse, else_live)
            elif s.orelse is not None:
                orelse = dataclasses.replace(
                    s.orelse, stmts=self.sweep_block(s.orelse.stmts, else_live))
            live.clear()
            live |= then_live | else_live | read_names(s.cond)
            return dataclasses.replace(s, then=then, orelse=orelse)
        if isinstance(s, (While, For)):
            return self.sweep_loop(s, live)
        if isinstance(s, Switch):
            branch_live: set[str] = set()
            cases = []
            for c in s.cases:
                bl = set(live)
                cases.append(dataclasses.replace(
                    c, body=self.sweep_block(c.body, bl)))
                branch_live |= bl
            default = s.default
            bl = set(live)
            if default is not None:
                default = self.sweep_block(default, bl)
            branch_live |= bl
            live.clear()
            live |= branch_live | read_names(s.scrutinee)
            return dataclasses.replace(s, cases=cases, default=default)
        return s

    def sweep_loop(self, s: While | For, live: set[str]) -> Stmt:
        # Conservative loop liveness: everything read anywhere in the loop
        # (condition, step, body) is treated as live across the back edge.
        body_exit = set(live)
        if isinstance(s, While):
            body_exit |= read_names(s.cond)
        else:
            if s.cond is not None:
                body_exit |= read_names(s.cond)
            if s.step is not None:
                body_exit |= read_names(s.step.value)
                if s.step.op != "=":
                    body_exit.add(s.step.target.name)  # type: ignore[union-attr]
        body_exit |= read_names(s.body)
        self.loop_live.append(set(live))
        body_live = set(body_exit)
        body = dataclasses.replace(s.body,
                                   stmts=self.sweep_block(s.body.stmts, body_live))
        self.loop_live.pop()
        live.clear()
        live |= body_exit | body_live
        if isinstance(s, While):
            return dataclasses.replace(s, body=body)
        if s.init is not None:
            init_live = set(live)
            init = self.sweep(s.init, init_live)
            live.clear()
            live |= init_live
        else:
            init = None
        return dataclasses.replace(s, init=init, cond=s.cond, step=s.step, body=body)


def dce(program: Program) -> TransformResult:
    """Dead code elimination; iterates internally until stable."""
    pass_ = _Dce()
    current = program
    while True:
        pass_.changed = False
        functions = []
        for f in current.functions:
            body = pass_.prune(f.body)
            live: set[str] = set()
            body = dataclasses.replace(
                body, stmts=pass_.sweep_block(body.stmts, live))
            functions.append(dataclasses.replace(f, body=body))
        next_prog = dataclasses.replace(current, functions=functions)
        if not pass_.changed:
            break
        current = next_prog
    if current is program or not pass_.edits:
        return TransformResult("DCE", program, False)
    return TransformResult("DCE", current, True, pass_.edits)
