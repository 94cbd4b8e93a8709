"""Control flag removal (CFR).

Narrow, sound pattern: a boolean local initialized to a constant, read
only as a conjunct of one while-loop's condition, and set exactly once
inside that loop to the loop-ending constant, in tail position (nothing
can execute between the set and the next condition check). The flag is
deleted, the set becomes ``break``, and the conjunct disappears from
the condition. The remaining conjuncts must be pure and fault-free,
because the rewritten loop skips their final evaluation.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    Assign, Binary, Block, BoolLit, Break, Expr, For, Function, If, Program,
    Stmt, Switch, Unary, Var, VarDecl, While, walk,
)
from .analysis import is_pure_total
from .base import Edit, TransformResult


def _conjuncts(e: Expr) -> list[Expr]:
    if isinstance(e, Binary) and e.op == "&&":
        return _conjuncts(e.left) + _conjuncts(e.right)
    return [e]


def _flag_test(e: Expr, name: str) -> bool:
    if isinstance(e, Var) and e.name == name:
        return True
    return (isinstance(e, Unary) and e.op == "!"
            and isinstance(e.operand, Var) and e.operand.name == name)


def _rejoin(conjuncts: list[Expr], span) -> Expr:
    if not conjuncts:
        return BoolLit(True, span=span)
    out = conjuncts[0]
    for c in conjuncts[1:]:
        out = Binary("&&", out, c, span=span)
    return out


def _tail_sets(stmts: list[Stmt], name: str) -> list[Assign]:
    """Flag assignments in tail position of a statement list."""
    if not stmts:
        return []
    last = stmts[-1]
    if (isinstance(last, Assign) and isinstance(last.target, Var)
            and last.target.name == name):
        return [last]
    if isinstance(last, If):
        out = _tail_sets(last.then.stmts, name)
        node = last.orelse
        while isinstance(node, If):
            out += _tail_sets(node.then.stmts, name)
            node = node.orelse
        if node is not None:
            out += _tail_sets(node.stmts, name)
        return out
    if isinstance(last, Block):
        return _tail_sets(last.stmts, name)
    return []


@dataclasses.dataclass
class _Candidate:
    decl: VarDecl
    loop: While
    set_stmt: Assign


def _find_candidate(f: Function) -> _Candidate | None:
    loops = [n for n in walk(f.body) if isinstance(n, While)]
    for decl in walk(f.body):
        if not (isinstance(decl, VarDecl) and decl.decl_type.kind == "bool"
                and not decl.decl_type.array and isinstance(decl.init, BoolLit)):
            continue
        name = decl.name
        writes = [n for n in walk(f.body)
                  if isinstance(n, Assign) and isinstance(n.target, Var)
                  and n.target.name == name]
        if len(writes) != 1:
            continue
        set_stmt = writes[0]
        if not (set_stmt.op == "=" and isinstance(set_stmt.value, BoolLit)
                and set_stmt.value.value != decl.init.value):
            continue
        homes = [lp for lp in loops
                 if any(_flag_test(c, name) for c in _conjuncts(lp.cond))]
        if len(homes) != 1:
            continue
        loop = homes[0]
        conjs = _conjuncts(loop.cond)
        tests = [c for c in conjs if _flag_test(c, name)]
        if len(tests) != 1:
            continue
        test = tests[0]
        # The standing test must pass under the initial flag value.
        standing = (not decl.init.value) if isinstance(test, Unary) else decl.init.value
        if not standing:
            continue
        # Every read of the flag is that single conjunct occurrence.
        test_var = test.operand if isinstance(test, Unary) else test
        reads = [n for n in walk(f.body)
                 if isinstance(n, Var) and n.name == name
                 and n is not set_stmt.target]
        if any(r is not test_var for r in reads):
            continue
        if not all(is_pure_total(c, allow_total_builtins=True)
                   for c in conjs if c is not test):
            continue
        if set_stmt not in _tail_sets(loop.body.stmts, name):
            continue
        if not any(n is set_stmt for n in walk(loop.body)):
            continue
        return _Candidate(decl, loop, set_stmt)
    return None


def _apply(f: Function, cand: _Candidate) -> Function:
    new_conj = [c for c in _conjuncts(cand.loop.cond)
                if not _flag_test(c, cand.decl.name)]
    new_cond = _rejoin(new_conj, cand.loop.cond.span)

    def fix(s: Stmt) -> Stmt | None:
        if s is cand.decl:
            return None
        if s is cand.set_stmt:
            return Break(span=s.span)
        if isinstance(s, Block):
            stmts = [t for t in (fix(x) for x in s.stmts) if t is not None]
            return dataclasses.replace(s, stmts=stmts)
        if isinstance(s, If):
            orelse = fix(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, then=fix(s.then), orelse=orelse)
        if isinstance(s, While):
            body = fix(s.body)
            if s is cand.loop:
                return dataclasses.replace(s, cond=new_cond, body=body)
            return dataclasses.replace(s, body=body)
        if isinstance(s, For):
            init = fix(s.init) if s.init is not None else None
            return dataclasses.replace(s, init=init, body=fix(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(
                c, body=[t for t in (fix(x) for x in c.body) if t is not None])
                for c in s.cases]
            default = ([t for t in (fix(x) for x in s.default) if t is not None]
                       if s.default is not None else None)
            return dataclasses.replace(s, cases=cases, default=default)
        return s

    return dataclasses.replace(f, body=fix(f.body))


def remove_control_flags(program: Program) -> TransformResult:
    """Delete single-set loop-control flags in favor of ``break``."""
    edits: list[Edit] = []
    functions = []
    for f in program.functions:
        while True:
            cand = _find_candidate(f)
            if cand is None:
                break
            edits.append(Edit(cand.decl.span,
                              f"removed control flag '{cand.decl.name}'"))
            edits.append(Edit(cand.set_stmt.span, "flag set replaced by break"))
            edits.append(Edit(cand.loop.cond.span,
                              "dropped flag conjunct from loop condition"))
            f = _apply(f, cand)
        functions.append(f)
    if not edits:
        return TransformResult("CFR", program, False)
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("CFR", new, True, edits)
