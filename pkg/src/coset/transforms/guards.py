"""Error-handling removal (STRIP_ERROR_HANDLING).

Deletes the leading guard clauses of the entry function: a maximal
prefix of statements shaped ``if (COND) { return <constant>; }`` with
no else. This is the semantics-changing probe: on guard-triggering
inputs the outputs are expected to diverge, and the removed conditions
are exported in the result config so the oracle can decide which inputs
those are.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    ArrayLit, BoolLit, CharLit, Expr, FloatLit, If, IntLit, Program, Return,
    StringLit, Unary,
)
from ..lang.printer import expr_to_source
from .base import Edit, TransformResult


def _is_constant(e: Expr) -> bool:
    if isinstance(e, (IntLit, FloatLit, BoolLit, CharLit, StringLit)):
        return True
    if isinstance(e, Unary) and e.op == "-":
        return isinstance(e.operand, (IntLit, FloatLit))
    if isinstance(e, ArrayLit):
        return all(_is_constant(x) for x in e.elems)
    return False


def _is_guard(s) -> bool:
    return (isinstance(s, If) and s.orelse is None
            and len(s.then.stmts) == 1
            and isinstance(s.then.stmts[0], Return)
            and _is_constant(s.then.stmts[0].value))


def leading_guards(program: Program) -> list[If]:
    """The entry function's leading guard clauses, in order."""
    out = []
    for s in program.entry.body.stmts:
        if _is_guard(s):
            out.append(s)
        else:
            break
    return out


def strip_error_handling(program: Program) -> TransformResult:
    """Remove the entry function's leading guard clauses."""
    guards = leading_guards(program)
    if not guards:
        return TransformResult("STRIP_ERROR_HANDLING", program, False)
    entry = program.entry
    body = dataclasses.replace(entry.body, stmts=entry.body.stmts[len(guards):])
    functions = [dataclasses.replace(entry, body=body)] + program.functions[1:]
    edits = [Edit(g.span, f"removed guard clause "
                          f"'if ({expr_to_source(g.cond)}) ...'")
             for g in guards]
    new = dataclasses.replace(program, functions=functions)
    return TransformResult(
        "STRIP_ERROR_HANDLING", new, True, edits,
        {"guard_conditions": [expr_to_source(g.cond) for g in guards]})
