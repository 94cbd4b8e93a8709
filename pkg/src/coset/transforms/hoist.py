"""Loop-invariant code motion (Hoisting).

Moves side-effect-free, fault-free expressions (no indexing, no
division, only total builtins like Length) out of loops into a fresh
pre-header temporary. An expression is invariant when none of the
scalar variables it reads are written in the loop and arrays appear
only under Length and are never reassigned. Because candidates cannot
fault or produce output, computing them once ahead of a possibly
zero-trip loop is observationally identical.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    Assign, Binary, Block, Call, Expr, ExprStmt, For, If, Index, Program,
    Return, Stmt, Switch, Type, Unary, Var, VarDecl, While,
    structurally_equal, walk,
)
from ..lang.builtins import CONSTANTS
from ..lang.check import typed
from .analysis import fresh_names, is_literal
from .base import Edit, TransformResult

_TOTAL_BUILTINS = ("Length", "GetNumericValue", "ToInt")


def _reassigned_names(node) -> set[str]:
    out = set()
    for n in walk(node):
        if isinstance(n, Assign) and isinstance(n.target, Var):
            out.add(n.target.name)
        elif isinstance(n, VarDecl):
            out.add(n.name)
    return out


def _mutated_names(node) -> set[str]:
    """Names whose value may change at all (incl. element writes/Sort)."""
    from .analysis import written_names
    return written_names(node)


class _Hoister:
    def __init__(self, program: Program):
        self.types = typed(program).types
        self.edits: list[Edit] = []
        self.temp_names: list[str] = []
        self.temp_i = 0

    # -- candidate recognition --

    def candidate_ok(self, e: Expr, mutated: set[str], reassigned: set[str]) -> bool:
        ty = self.types.get(e)
        if ty is None or ty.array:
            return False
        for n in walk(e):
            if isinstance(n, Index):
                return False
            if isinstance(n, Binary) and n.op in ("/", "%"):
                return False
            if isinstance(n, Call):
                if n.name not in _TOTAL_BUILTINS:
                    return False
                if n.name == "Length":
                    arg = n.args[0]
                    if not isinstance(arg, Var) or arg.name in reassigned:
                        return False
        for n in walk(e):
            if isinstance(n, Var) and n.name not in CONSTANTS:
                nty = self.types.get(n)
                if nty is not None and nty.array:
                    continue  # checked above: only under Length, not reassigned
                if n.name in mutated:
                    return False
        return True

    def worth_hoisting(self, e: Expr) -> bool:
        return not (is_literal(e) or isinstance(e, Var))

    def collect(self, e: Expr, mutated, reassigned, out: list[Expr]) -> None:
        """Maximal hoistable subexpressions, left to right."""
        if self.candidate_ok(e, mutated, reassigned) and self.worth_hoisting(e):
            if not any(structurally_equal(e, c) for c in out):
                out.append(e)
            return
        for child in _expr_children(e):
            self.collect(child, mutated, reassigned, out)

    def collect_in_stmts(self, stmts: list[Stmt], mutated, reassigned,
                         out: list[Expr]) -> None:
        for s in stmts:
            for e in _stmt_exprs(s):
                self.collect(e, mutated, reassigned, out)
            for inner in _stmt_blocks(s):
                self.collect_in_stmts(inner, mutated, reassigned, out)

    # -- rewriting --

    def rewrite_loop(self, s: While | For) -> tuple[list[Stmt], Stmt]:
        mutated = _mutated_names(s.body)
        reassigned = _reassigned_names(s.body)
        if isinstance(s, For):
            if s.step is not None:
                mutated |= _mutated_names(s.step)
                reassigned |= _reassigned_names(s.step)
            if s.init is not None:
                mutated |= _mutated_names(s.init)
                reassigned |= _reassigned_names(s.init)
        candidates: list[Expr] = []
        cond = s.cond
        if cond is not None:
            self.collect(cond, mutated, reassigned, candidates)
        self.collect_in_stmts(s.body.stmts, mutated, reassigned, candidates)
        if not candidates:
            return [], s
        pre: list[Stmt] = []
        new_loop: Stmt = s
        for cand in candidates:
            name = self.temp_names[self.temp_i]
            self.temp_i += 1
            ty = self.types[cand]
            decl = VarDecl(Type(ty.kind), name, cand, span=cand.span)
            pre.append(decl)
            new_loop = _replace_expr(new_loop, cand, name, self.types)
            self.edits.append(Edit(cand.span,
                                   f"hoisted loop-invariant expression into '{name}'"))
        return pre, new_loop

    def stmts(self, stmts: list[Stmt]) -> list[Stmt]:
        out: list[Stmt] = []
        for s in stmts:
            s = self.stmt(s)
            if isinstance(s, (While, For)):
                pre, s = self.rewrite_loop(s)
                out.extend(pre)
            out.append(s)
        return out

    def stmt(self, s: Stmt) -> Stmt:
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=self.stmts(s.stmts))
        if isinstance(s, If):
            then = self.stmt(s.then)
            orelse = self.stmt(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, then=then, orelse=orelse)
        if isinstance(s, (While, For)):
            return dataclasses.replace(s, body=self.stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=self.stmts(c.body))
                     for c in s.cases]
            default = self.stmts(s.default) if s.default is not None else None
            return dataclasses.replace(s, cases=cases, default=default)
        return s


def _expr_children(e: Expr) -> list[Expr]:
    if isinstance(e, Binary):
        return [e.left, e.right]
    if isinstance(e, Unary):
        return [e.operand]
    if isinstance(e, Index):
        return [e.array, e.index]
    if isinstance(e, Call):
        return list(e.args)
    return []


def _stmt_exprs(s: Stmt):
    if isinstance(s, VarDecl) and s.init is not None:
        yield s.init
    elif isinstance(s, Assign):
        if isinstance(s.target, Index):
            yield s.target.index
        yield s.value
    elif isinstance(s, ExprStmt):
        yield s.expr
    elif isinstance(s, Return):
        yield s.value
    elif isinstance(s, If):
        yield s.cond
    elif isinstance(s, While):
        yield s.cond
    elif isinstance(s, For):
        if s.cond is not None:
            yield s.cond
        if s.init is not None:
            yield from _stmt_exprs(s.init)
        if s.step is not None:
            yield from _stmt_exprs(s.step)
    elif isinstance(s, Switch):
        yield s.scrutinee


def _stmt_blocks(s: Stmt):
    if isinstance(s, Block):
        yield s.stmts
    elif isinstance(s, If):
        yield s.then.stmts
        if isinstance(s.orelse, If):
            yield [s.orelse]
        elif s.orelse is not None:
            yield s.orelse.stmts
    elif isinstance(s, (While, For)):
        yield s.body.stmts
    elif isinstance(s, Switch):
        for c in s.cases:
            yield c.body
        if s.default is not None:
            yield s.default


def _replace_expr(node, target: Expr, name: str, types) -> object:
    """Structural replacement of `target` with a variable reference."""

    def rx(e: Expr) -> Expr:
        if structurally_equal(e, target):
            v = Var(name, span=e.span)
            types[v] = types[target]
            return v
        if isinstance(e, Binary):
            return dataclasses.replace(e, left=rx(e.left), right=rx(e.right))
        if isinstance(e, Unary):
            return dataclasses.replace(e, operand=rx(e.operand))
        if isinstance(e, Index):
            return dataclasses.replace(e, array=rx(e.array), index=rx(e.index))
        if isinstance(e, Call):
            return dataclasses.replace(e, args=[rx(a) for a in e.args])
        return e

    def rs(s: Stmt) -> Stmt:
        if isinstance(s, VarDecl):
            return s if s.init is None else dataclasses.replace(s, init=rx(s.init))
        if isinstance(s, Assign):
            tgt = s.target
            if isinstance(tgt, Index):
                tgt = dataclasses.replace(tgt, index=rx(tgt.index))
            return dataclasses.replace(s, target=tgt, value=rx(s.value))
        if isinstance(s, ExprStmt):
            return dataclasses.replace(s, expr=rx(s.expr))
        if isinstance(s, Return):
            return dataclasses.replace(s, value=rx(s.value))
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=[rs(x) for x in s.stmts])
        if isinstance(s, If):
            orelse = rs(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, cond=rx(s.cond), then=rs(s.then),
                                       orelse=orelse)
        if isinstance(s, While):
            return dataclasses.replace(s, cond=rx(s.cond), body=rs(s.body))
        if isinstance(s, For):
            init = rs(s.init) if s.init is not None else None
            cond = rx(s.cond) if s.cond is not None else None
            step = rs(s.step) if s.step is not None else None
            return dataclasses.replace(s, init=init, cond=cond, step=step,
                                       body=rs(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=[rs(x) for x in c.body])
                     for c in s.cases]
            default = ([rs(x) for x in s.default]
                       if s.default is not None else None)
            return dataclasses.replace(s, scrutinee=rx(s.scrutinee),
                                       cases=cases, default=default)
        return s

    return rs(node)


def hoist(program: Program) -> TransformResult:
    """Hoist loop-invariant fault-free expressions to pre-header temps."""
    h = _Hoister(program)
    total = sum(1 for _ in walk(program))
    h.temp_names = fresh_names(program, "_h", total)
    functions = [dataclasses.replace(f, body=h.stmt(f.body))
                 for f in program.functions]
    if not h.edits:
        return TransformResult("HOIST", program, False)
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("HOIST", new, True, h.edits)
