"""Constant and variable propagation with folding (CVP).

Flow-sensitive and intraprocedural. Nothing propagates across loop
back-edges: entering a loop kills every name the loop may write. Branch
joins keep only facts shared by both sides.

Width discipline: folding always happens at the checker-assigned width
of the original node. A folded value is *emitted* as a literal only for
types whose literals adapt back to the same width in any context (int,
float, bool, char, string); long/double constants still participate in
interior folding but their expressions stay in source form. Copies are
recorded only between identically-typed variables.
"""

from __future__ import annotations

import dataclasses

from ..lang.ast import (
    ArrayLit, Assign, Binary, Block, BoolLit, Call, Expr, ExprStmt, For, If,
    Index, IntLit, FloatLit, CharLit, StringLit, Program, Return, Stmt,
    Switch, Type, Unary, Var, VarDecl, While, structurally_equal,
    T_BOOL,
)
from ..lang.check import typed
from ..interp.numerics import f32, wrap32, wrap64
from .analysis import fold_binary, fold_compare, make_literal, written_names
from .base import Edit, TransformResult

_MISSING = object()

_EMIT_KINDS = ("int", "float", "bool", "char", "string")


class _Env:
    """name -> ('const', value) | ('copy', other). Copies are canonical:
    inserting copy-of-copy resolves to the root name."""

    def __init__(self, table=None):
        self.table: dict[str, tuple] = dict(table or {})

    def clone(self) -> "_Env":
        return _Env(self.table)

    def kill(self, names) -> None:
        for n in list(self.table):
            if n in names:
                del self.table[n]
                continue
            entry = self.table[n]
            if entry[0] == "copy" and entry[1] in names:
                del self.table[n]

    def merge(self, other: "_Env") -> "_Env":
        out = {}
        for k, v in self.table.items():
            if other.table.get(k) == v:
                out[k] = v
        return _Env(out)


class _Cvp:
    def __init__(self, program: Program):
        self.program = program
        self.types = typed(program).types
        self.var_types: dict[str, Type] = {}
        self.edits: list[Edit] = []

    # -- expression rewriting: returns (new_expr, const_value|MISSING) --

    def literal_value(self, e: Expr):
        ty = self.types[e]
        if isinstance(e, IntLit):
            return wrap64(e.value) if ty.kind == "long" else wrap32(e.value)
        if isinstance(e, FloatLit):
            return f32(e.value) if ty.kind == "float" else e.value
        if isinstance(e, (BoolLit, CharLit, StringLit)):
            return e.value
        return _MISSING

    def emit_or_keep(self, e: Expr, kept: Expr, value):
        """Emit a literal for a known value when the node's type allows."""
        ty = self.types[e]
        if ty.kind in _EMIT_KINDS and not ty.array:
            lit = make_literal(value, ty, e.span)
            if lit is not None:
                self.types[lit] = ty
                if isinstance(lit, Unary):
                    self.types[lit.operand] = ty
                return lit, value
        return kept, value

    def expr(self, e: Expr, env: _Env):
        lit = self.literal_value(e)
        if lit is not _MISSING:
            return e, lit
        if isinstance(e, Var):
            entry = env.table.get(e.name)
            if entry is None:
                return e, _MISSING
            if entry[0] == "copy":
                new = Var(entry[1], span=e.span)
                self.types[new] = self.types[e]
                return new, _MISSING
            return self.emit_or_keep(e, e, entry[1])
        if isinstance(e, Unary):
            inner, v = self.expr(e.operand, env)
            kept = self.rebuild(e, operand=inner)
            if v is _MISSING:
                return kept, _MISSING
            ty = self.types[e]
            if e.op == "!":
                return self.emit_or_keep(e, kept, not v)
            if ty.is_int_group:
                value = wrap64(-v) if ty.kind == "long" else wrap32(-v)
            else:
                value = -v if ty.kind == "double" else f32(-v)
            return self.emit_or_keep(e, kept, value)
        if isinstance(e, Binary):
            return self.binary(e, env)
        if isinstance(e, Index):
            arr, _ = self.expr(e.array, env)
            idx, _ = self.expr(e.index, env)
            return self.rebuild(e, array=arr, index=idx), _MISSING
        if isinstance(e, Call):
            args = [self.expr(a, env)[0] for a in e.args]
            return self.rebuild(e, args=args), _MISSING
        if isinstance(e, ArrayLit):
            elems = [self.expr(x, env)[0] for x in e.elems]
            return self.rebuild(e, elems=elems), _MISSING
        return e, _MISSING

    def binary(self, e: Binary, env: _Env):
        op = e.op
        if op in ("&&", "||"):
            left, lv = self.expr(e.left, env)
            if lv is not _MISSING:
                if (op == "&&") == bool(lv):
                    # true && B  /  false || B  ==>  B
                    return self.expr(e.right, env)
                value = bool(lv)
                lit = BoolLit(value, span=e.span)
                self.types[lit] = T_BOOL
                return lit, value
            right, rv = self.expr(e.right, env)
            if rv is not _MISSING and (op == "&&") == bool(rv):
                # A && true  /  A || false  ==>  A
                return left, _MISSING
            return self.rebuild(e, left=left, right=right), _MISSING
        left, lv = self.expr(e.left, env)
        right, rv = self.expr(e.right, env)
        kept = self.rebuild(e, left=left, right=right)
        if lv is _MISSING or rv is _MISSING:
            return kept, _MISSING
        if op in ("+", "-", "*", "/", "%"):
            ok, value = fold_binary(op, lv, rv, self.types[e])
            if not ok:
                return kept, _MISSING
            return self.emit_or_keep(e, kept, value)
        value = fold_compare(op, lv, rv)
        return self.emit_or_keep(e, kept, value)

    def rebuild(self, e: Expr, **changes):
        unchanged = True
        for k, v in changes.items():
            old = getattr(e, k)
            if isinstance(v, list):
                if any(a is not b for a, b in zip(v, old)):
                    unchanged = False
            elif v is not old:
                unchanged = False
        if unchanged:
            return e
        new = dataclasses.replace(e, **changes)
        self.types[new] = self.types[e]
        return new

    # -- statements --

    def record(self, env: _Env, name: str, rhs: Expr, value) -> None:
        ty = self.var_types.get(name)
        if value is not _MISSING:
            env.table[name] = ("const", value)
        elif isinstance(rhs, Var) and self.var_types.get(rhs.name) == ty:
            target = rhs.name
            entry = env.table.get(target)
            if entry is not None and entry[0] == "copy":
                target = entry[1]
            env.table[name] = ("copy", target)
        else:
            env.table.pop(name, None)

    def stmt(self, s: Stmt, env: _Env) -> Stmt:
        if isinstance(s, VarDecl):
            self.var_types[s.name] = s.decl_type
            if s.init is None:
                env.table.pop(s.name, None)
                return s
            init, v = self.expr(s.init, env)
            env.kill({s.name})
            self.record(env, s.name, init, v)
            return self.rebuild_stmt(s, init=init)
        if isinstance(s, Assign):
            value, v = self.expr(s.value, env)
            if isinstance(s.target, Var):
                name = s.target.name
                env.kill({name})
                if s.op == "=":
                    self.record(env, name, value, v)
                return self.rebuild_stmt(s, value=value)
            index, _ = self.expr(s.target.index, env)
            target = s.target
            if index is not s.target.index:
                target = dataclasses.replace(s.target, index=index)
                self.types[target] = self.types[s.target]
            return self.rebuild_stmt(s, target=target, value=value)
        if isinstance(s, ExprStmt):
            expr, _ = self.expr(s.expr, env)
            return self.rebuild_stmt(s, expr=expr)
        if isinstance(s, Return):
            value, _ = self.expr(s.value, env)
            return self.rebuild_stmt(s, value=value)
        if isinstance(s, Block):
            inner = env.clone()
            new = self.block(s, inner)
            names = {st.name for st in s.stmts if isinstance(st, VarDecl)}
            env.table = {k: v for k, v in inner.table.items()
                         if k not in names and (v[0] != "copy" or v[1] not in names)}
            return new
        if isinstance(s, If):
            cond, _ = self.expr(s.cond, env)
            if cond is not s.cond:
                self.edits.append(Edit(s.cond.span, "propagated constants in condition"))
            t_env = env.clone()
            then = self.block(s.then, t_env)
            e_env = env.clone()
            orelse = s.orelse
            if isinstance(s.orelse, If):
                orelse = self.stmt(s.orelse, e_env)
            elif s.orelse is not None:
                orelse = self.block(s.orelse, e_env)
            env.table = t_env.merge(e_env).table
            return self.rebuild_stmt(s, cond=cond, then=then, orelse=orelse)
        if isinstance(s, While):
            env.kill(written_names(s.body))
            cond, _ = self.expr(s.cond, env)
            if cond is not s.cond:
                self.edits.append(Edit(s.cond.span, "propagated constants in condition"))
            body = self.block(s.body, env.clone())
            return self.rebuild_stmt(s, cond=cond, body=body)
        if isinstance(s, For):
            killed = written_names(s.body)
            if s.step is not None:
                killed |= written_names(s.step)
            init = s.init
            if init is not None:
                init = self.stmt(init, env)
            env.kill(killed)
            cond = s.cond
            if cond is not None:
                cond, _ = self.expr(cond, env)
                if cond is not s.cond:
                    self.edits.append(Edit(s.cond.span,
                                           "propagated constants in condition"))
            body = self.block(s.body, env.clone())
            step = s.step
            if step is not None:
                step = self.stmt(step, env.clone())
            return self.rebuild_stmt(s, init=init, cond=cond, step=step, body=body)
        if isinstance(s, Switch):
            scrutinee, _ = self.expr(s.scrutinee, env)
            if scrutinee is not s.scrutinee:
                self.edits.append(Edit(s.scrutinee.span,
                                       "propagated constants in switch scrutinee"))
            branch_envs = []
            cases = []
            for case in s.cases:
                c_env = env.clone()
                body = [self.stmt(x, c_env) for x in case.body]
                branch_envs.append(c_env)
                if all(a is b for a, b in zip(body, case.body)):
                    cases.append(case)
                else:
                    cases.append(dataclasses.replace(case, body=body))
            default = s.default
            d_env = env.clone()
            if default is not None:
                default = [self.stmt(x, d_env) for x in default]
            branch_envs.append(d_env)
            merged = branch_envs[0]
            for b in branch_envs[1:]:
                merged = merged.merge(b)
            env.table = merged.table
            return self.rebuild_stmt(s, scrutinee=scrutinee, cases=cases,
                                     default=default)
        return s  # Break / Continue

    def rebuild_stmt(self, s: Stmt, **changes) -> Stmt:
        unchanged = True
        for k, v in changes.items():
            old = getattr(s, k)
            if isinstance(v, list):
                if len(v) != len(old) or any(a is not b for a, b in zip(v, old)):
                    unchanged = False
            elif v is not old:
                unchanged = False
        if unchanged:
            return s
        new = dataclasses.replace(s, **changes)
        if not isinstance(new, (Block, If, While, For, Switch)):
            self.edits.append(Edit(s.span, f"propagated constants in "
                                           f"{type(s).__name__.lower()}"))
        return new

    def block(self, b: Block, env: _Env) -> Block:
        stmts = [self.stmt(s, env) for s in b.stmts]
        if all(a is b_ for a, b_ in zip(stmts, b.stmts)):
            return b
        return dataclasses.replace(b, stmts=stmts)


def cvp(program: Program) -> TransformResult:
    """Constant/copy propagation plus constant folding."""
    pass_ = _Cvp(program)
    functions = []
    changed = False
    for f in program.functions:
        pass_.var_types = {p.name: p.type for p in f.params}
        body = pass_.block(f.body, _Env())
        if body is not f.body:
            changed = True
            functions.append(dataclasses.replace(f, body=body))
        else:
            functions.append(f)
    if not changed:
        return TransformResult("CVP", program, False)
    new = dataclasses.replace(program, functions=functions)
    assert not structurally_equal(new, program)
    return TransformResult("CVP", new, True, pass_.edits)
