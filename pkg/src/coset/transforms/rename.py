"""Variable renaming (VR).

Capture-avoiding alpha-renaming of locals and parameters. Function and
builtin names are never touched. Two modes:

* seeded: every variable gets a fresh ``v<k>`` name, numbering permuted
  deterministically by the seed;
* targeted: an explicit old->new mapping (e.g. swapping two induction
  variables), applied per function where the names occur.
"""

from __future__ import annotations

import dataclasses
import random
from itertools import count

from ..lang.ast import (
    ArrayLit, Assign, Binary, Block, Call, Expr, ExprStmt, For, Function, If,
    Index, Program, Return, Stmt, Switch, Unary, Var, VarDecl, While, walk,
)
from ..lang.builtins import BUILTINS, CONSTANTS
from .base import Edit, TransformResult


def _declared_vars(f: Function) -> list[tuple[str, object]]:
    """(name, node) for params and declarations, in source order."""
    out = [(p.name, p) for p in f.params]
    out.extend((n.name, n) for n in walk(f.body) if isinstance(n, VarDecl))
    return out


def _rename_expr(e: Expr, mapping: dict[str, str]) -> Expr:
    if isinstance(e, Var):
        if e.name in mapping:
            return dataclasses.replace(e, name=mapping[e.name])
        return e
    if isinstance(e, Unary):
        return dataclasses.replace(e, operand=_rename_expr(e.operand, mapping))
    if isinstance(e, Binary):
        return dataclasses.replace(e, left=_rename_expr(e.left, mapping),
                                   right=_rename_expr(e.right, mapping))
    if isinstance(e, Index):
        return dataclasses.replace(e, array=_rename_expr(e.array, mapping),
                                   index=_rename_expr(e.index, mapping))
    if isinstance(e, Call):
        return dataclasses.replace(e, args=[_rename_expr(a, mapping)
                                            for a in e.args])
    if isinstance(e, ArrayLit):
        return dataclasses.replace(e, elems=[_rename_expr(x, mapping)
                                             for x in e.elems])
    return e


def _rename_stmt(s: Stmt, mapping: dict[str, str]) -> Stmt:
    if isinstance(s, VarDecl):
        init = _rename_expr(s.init, mapping) if s.init is not None else None
        return dataclasses.replace(s, name=mapping.get(s.name, s.name), init=init)
    if isinstance(s, Assign):
        return dataclasses.replace(s, target=_rename_expr(s.target, mapping),
                                   value=_rename_expr(s.value, mapping))
    if isinstance(s, ExprStmt):
        return dataclasses.replace(s, expr=_rename_expr(s.expr, mapping))
    if isinstance(s, Return):
        return dataclasses.replace(s, value=_rename_expr(s.value, mapping))
    if isinstance(s, Block):
        return dataclasses.replace(s, stmts=[_rename_stmt(x, mapping)
                                             for x in s.stmts])
    if isinstance(s, If):
        orelse = _rename_stmt(s.orelse, mapping) if s.orelse is not None else None
        return dataclasses.replace(s, cond=_rename_expr(s.cond, mapping),
                                   then=_rename_stmt(s.then, mapping),
                                   orelse=orelse)
    if isinstance(s, While):
        return dataclasses.replace(s, cond=_rename_expr(s.cond, mapping),
                                   body=_rename_stmt(s.body, mapping))
    if isinstance(s, For):
        init = _rename_stmt(s.init, mapping) if s.init is not None else None
        cond = _rename_expr(s.cond, mapping) if s.cond is not None else None
        step = _rename_stmt(s.step, mapping) if s.step is not None else None
        return dataclasses.replace(s, init=init, cond=cond, step=step,
                                   body=_rename_stmt(s.body, mapping))
    if isinstance(s, Switch):
        cases = [dataclasses.replace(c, body=[_rename_stmt(x, mapping)
                                              for x in c.body])
                 for c in s.cases]
        default = ([_rename_stmt(x, mapping) for x in s.default]
                   if s.default is not None else None)
        return dataclasses.replace(s, scrutinee=_rename_expr(s.scrutinee, mapping),
                                   cases=cases, default=default)
    return s


def _rename_function(f: Function, mapping: dict[str, str]) -> Function:
    params = [dataclasses.replace(p, name=mapping.get(p.name, p.name))
              for p in f.params]
    return dataclasses.replace(f, params=params,
                               body=_rename_stmt(f.body, mapping))


def rename_variables(program: Program, seed: int = 0,
                     mapping: dict[str, str] | None = None) -> TransformResult:
    """Alpha-rename locals; `mapping` selects the targeted mode."""
    config = {"seed": seed} if mapping is None else {"mapping": dict(mapping)}
    reserved = set(BUILTINS) | set(CONSTANTS) | {f.name for f in program.functions}
    edits: list[Edit] = []
    functions = []
    changed = False
    name_stream = (f"v{i}" for i in count(1))
    for f in program.functions:
        declared = _declared_vars(f)
        if mapping is None:
            fresh = []
            while len(fresh) < len(declared):
                cand = next(name_stream)
                if cand not in reserved:
                    fresh.append(cand)
            rng = random.Random(seed)
            rng.shuffle(fresh)
            fmap = {name: new for (name, _), new in zip(declared, fresh)
                    if name != new}
        else:
            names = {name for name, _ in declared}
            fmap = {old: new for old, new in mapping.items() if old in names}
            for old, new in fmap.items():
                if new in reserved:
                    raise ValueError(f"cannot rename '{old}' to reserved name '{new}'")
                if new not in names and any(n == new for n in names):
                    raise ValueError(f"rename target '{new}' collides")
            targets = list(fmap.values())
            if len(set(targets)) != len(targets):
                raise ValueError("rename mapping targets collide")
            for new in targets:
                if new in names and new not in fmap:
                    raise ValueError(
                        f"rename target '{new}' captures an existing variable")
        if not fmap:
            functions.append(f)
            continue
        changed = True
        for name, node in declared:
            if name in fmap:
                edits.append(Edit(node.span, f"renamed '{name}' to '{fmap[name]}'"))
        functions.append(_rename_function(f, fmap))
    if not changed:
        return TransformResult("VR", program, False, config=config)
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("VR", new, True, edits, config)
