"""Semantics-approximating rewrites: type widening/narrowing and API
substitution.

``approximate_types`` swaps every declaration of one numeric-group
member for the other (int<->long, float<->double). Numeric literals are
context-typed, so no literal rewriting is needed and the result always
validates. Outputs may legitimately diverge at overflow or precision
boundaries; the oracle flags such inputs instead of failing.

``substitute_api`` toggles catalog API pairs: ``Sort(a)`` <->
``Sort(a, ASC)`` and ``ElementAt(a, i)`` -> ``a[i]`` (the reverse
``a[i]`` -> ``ElementAt(a, i)`` is opt-in). The pairs are exactly
equivalent on all defined inputs, bounds faults included.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    ArrayLit, Assign, Binary, Block, Call, Expr, ExprStmt, For, Function, If,
    Index, Program, Return, Stmt, StringLit, Switch, Type, Unary, Var,
    VarDecl, While,
)
from .base import Edit, TransformResult

TYPE_MODES = {
    "int_to_long": ("int", "long"),
    "long_to_int": ("long", "int"),
    "float_to_double": ("float", "double"),
    "double_to_float": ("double", "float"),
}


def approximate_types(program: Program,
                      mode: str = "int_to_long") -> TransformResult:
    """Replace every declaration of one type-group member by the other."""
    if mode not in TYPE_MODES:
        raise ValueError(f"mode must be one of {sorted(TYPE_MODES)}")
    src, dst = TYPE_MODES[mode]
    edits: list[Edit] = []

    def swap(ty: Type) -> Type:
        return Type(dst, ty.array) if ty.kind == src else ty

    def fix_stmt(s: Stmt) -> Stmt:
        if isinstance(s, VarDecl):
            if s.decl_type.kind == src:
                edits.append(Edit(s.span, f"declaration '{s.name}': {src} -> {dst}"))
                return dataclasses.replace(s, decl_type=swap(s.decl_type))
            return s
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=[fix_stmt(x) for x in s.stmts])
        if isinstance(s, If):
            orelse = fix_stmt(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, then=fix_stmt(s.then), orelse=orelse)
        if isinstance(s, While):
            return dataclasses.replace(s, body=fix_stmt(s.body))
        if isinstance(s, For):
            init = fix_stmt(s.init) if s.init is not None else None
            return dataclasses.replace(s, init=init, body=fix_stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=[fix_stmt(x) for x in c.body])
                     for c in s.cases]
            default = ([fix_stmt(x) for x in s.default]
                       if s.default is not None else None)
            return dataclasses.replace(s, cases=cases, default=default)
        return s

    functions = []
    for f in program.functions:
        params = []
        for p in f.params:
            if p.type.kind == src:
                edits.append(Edit(p.span, f"parameter '{p.name}': {src} -> {dst}"))
                params.append(dataclasses.replace(p, type=swap(p.type)))
            else:
                params.append(p)
        ret = f.ret_type
        if ret.kind == src:
            edits.append(Edit(f.span, f"return type of '{f.name}': {src} -> {dst}"))
            ret = swap(ret)
        functions.append(dataclasses.replace(f, ret_type=ret, params=params,
                                             body=fix_stmt(f.body)))
    if not edits:
        return TransformResult("TYPE_APPROX", program, False,
                               config={"mode": mode})
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("TYPE_APPROX", new, True, edits, {"mode": mode})


def _is_asc(e: Expr) -> bool:
    if isinstance(e, Var) and e.name == "ASC":
        return True
    return isinstance(e, StringLit) and e.value == "ASC"


class _ApiPass:
    def __init__(self, expand_index: bool):
        self.expand_index = expand_index
        self.edits: list[Edit] = []

    def expr(self, e: Expr, rvalue: bool = True, as_call: bool = False) -> Expr:
        if isinstance(e, Call):
            args = [self.expr(a) for a in e.args]
            if e.name == "Sort" and len(args) == 1:
                self.edits.append(Edit(e.span, "Sort(a) -> Sort(a, ASC)"))
                return dataclasses.replace(
                    e, args=args + [Var("ASC", span=e.span)])
            if e.name == "Sort" and len(args) == 2 and _is_asc(args[1]):
                self.edits.append(Edit(e.span, "Sort(a, ASC) -> Sort(a)"))
                return dataclasses.replace(e, args=args[:1])
            if e.name == "ElementAt" and len(args) == 2 and not as_call:
                self.edits.append(Edit(e.span, "ElementAt(a, i) -> a[i]"))
                return Index(args[0], args[1], span=e.span)
            return dataclasses.replace(e, args=args)
        if isinstance(e, Index):
            arr = self.expr(e.array)
            idx = self.expr(e.index)
            if rvalue and self.expand_index:
                self.edits.append(Edit(e.span, "a[i] -> ElementAt(a, i)"))
                return Call("ElementAt", [arr, idx], span=e.span)
            return dataclasses.replace(e, array=arr, index=idx)
        if isinstance(e, Unary):
            return dataclasses.replace(e, operand=self.expr(e.operand))
        if isinstance(e, Binary):
            return dataclasses.replace(e, left=self.expr(e.left),
                                       right=self.expr(e.right))
        if isinstance(e, ArrayLit):
            return dataclasses.replace(e, elems=[self.expr(x) for x in e.elems])
        return e

    def stmt(self, s: Stmt) -> Stmt:
        if isinstance(s, VarDecl):
            if s.init is None:
                return s
            return dataclasses.replace(s, init=self.expr(s.init))
        if isinstance(s, Assign):
            target = s.target
            if isinstance(target, Index):
                target = dataclasses.replace(target,
                                             array=self.expr(target.array),
                                             index=self.expr(target.index))
            return dataclasses.replace(s, target=target, value=self.expr(s.value))
        if isinstance(s, ExprStmt):
            # statement position must stay a call, so no ElementAt toggle here
            return dataclasses.replace(s, expr=self.expr(s.expr, as_call=True))
        if isinstance(s, Return):
            return dataclasses.replace(s, value=self.expr(s.value))
        if isinstance(s, Block):
            return dataclasses.replace(s, stmts=[self.stmt(x) for x in s.stmts])
        if isinstance(s, If):
            orelse = self.stmt(s.orelse) if s.orelse is not None else None
            return dataclasses.replace(s, cond=self.expr(s.cond),
                                       then=self.stmt(s.then), orelse=orelse)
        if isinstance(s, While):
            return dataclasses.replace(s, cond=self.expr(s.cond),
                                       body=self.stmt(s.body))
        if isinstance(s, For):
            init = self.stmt(s.init) if s.init is not None else None
            cond = self.expr(s.cond) if s.cond is not None else None
            step = self.stmt(s.step) if s.step is not None else None
            return dataclasses.replace(s, init=init, cond=cond, step=step,
                                       body=self.stmt(s.body))
        if isinstance(s, Switch):
            cases = [dataclasses.replace(c, body=[self.stmt(x) for x in c.body])
                     for c in s.cases]
            default = ([self.stmt(x) for x in s.default]
                       if s.default is not None else None)
            return dataclasses.replace(s, scrutinee=self.expr(s.scrutinee),
                                       cases=cases, default=default)
        return s


def substitute_api(program: Program, expand_index: bool = False) -> TransformResult:
    """Toggle equivalent-API call sites per the builtin catalog pairs."""
    pass_ = _ApiPass(expand_index)
    functions = [dataclasses.replace(f, body=pass_.stmt(f.body))
                 for f in program.functions]
    if not pass_.edits:
        return TransformResult("API_APPROX", program, False,
                               config={"expand_index": expand_index})
    new = dataclasses.replace(program, functions=functions)
    return TransformResult("API_APPROX", new, True, pass_.edits,
                           {"expand_index": expand_index})
