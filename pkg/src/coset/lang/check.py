"""Static checks: name resolution and typing.

Rules: declaration before use, block scoping without shadowing, no
implicit narrowing (int widens to long, float widens to double, nothing
else converts), conditions are bool, array indices are int or long.
Numeric literals are polymorphic within their group and adopt the width
of their context (declared type, assignment target, or the non-literal
operand of a binary expression); defaults are int and double.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .ast import (
    ArrayLit, Assign, Binary, Block, BoolLit, Break, Call, Case, CharLit,
    Continue, Expr, ExprStmt, FloatLit, For, Function, If, Index, IntLit,
    Program, Return, Stmt, StringLit, Switch, Type, Unary, Var, VarDecl,
    While, T_BOOL, T_CHAR, T_DOUBLE, T_INT, T_LONG, T_STRING,
)
from .builtins import BUILTINS, CONSTANTS
from .diagnostics import ERROR, Diagnostic, MiniLangError

T_VOID = Type("<void>")
T_ERROR = Type("<error>")

ARITH_OPS = ("+", "-", "*", "/", "%")
REL_OPS = ("<", "<=", ">", ">=")
EQ_OPS = ("==", "!=")
LOGIC_OPS = ("&&", "||")

_WRAP = {32: lambda v: ((v + 2**31) % 2**32) - 2**31,
         64: lambda v: ((v + 2**63) % 2**64) - 2**63}


def widens_to(src: Type, dst: Type) -> bool:
    if T_ERROR in (src, dst):
        return True
    if src == dst:
        return True
    return (src, dst) in ((T_INT, T_LONG), (Type("float"), T_DOUBLE))


def _is_literalish(e: Expr) -> bool:
    if isinstance(e, (IntLit, FloatLit)):
        return True
    return isinstance(e, Unary) and e.op == "-" and _is_literalish(e.operand)


@dataclass
class CheckResult:
    diagnostics: list[Diagnostic]
    types: dict[Expr, Type] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.diagnostics


class _Checker:
    def __init__(self, program: Program):
        self.program = program
        self.diags: list[Diagnostic] = []
        self.types: dict[Expr, Type] = {}
        self.funcs = {f.name: f for f in program.functions}
        self.scopes: list[dict[str, Type]] = []
        self.ret_type: Type = T_VOID
        self.loop_depth = 0
        self.switch_loop_depth = 0  # loop_depth at the innermost switch

    # -- bookkeeping --

    def error(self, span, msg: str) -> Type:
        self.diags.append(Diagnostic(ERROR, span, msg, "type"))
        return T_ERROR

    def lookup(self, name: str) -> Optional[Type]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def declare(self, span, name: str, ty: Type) -> None:
        if name in self.funcs or name in BUILTINS or name in CONSTANTS:
            self.error(span, f"'{name}' is already a function or builtin name")
            return
        if self.lookup(name) is not None:
            self.error(span, f"redeclaration of '{name}' (shadowing is not allowed)")
            return
        self.scopes[-1][name] = ty

    def put(self, e: Expr, ty: Type) -> Type:
        self.types[e] = ty
        return ty

    # -- program level --

    def run(self) -> CheckResult:
        for f in self.program.functions:
            if f.name in BUILTINS or f.name in CONSTANTS:
                self.error(f.span, f"function name '{f.name}' collides with a builtin")
        for f in self.program.functions:
            self.check_function(f)
        return CheckResult(self.diags, self.types)

    def check_function(self, f: Function) -> None:
        self.scopes = [{}]
        self.ret_type = f.ret_type
        seen = set()
        for p in f.params:
            if p.name in seen:
                self.error(p.span, f"duplicate parameter '{p.name}'")
                continue
            seen.add(p.name)
            self.declare(p.span, p.name, p.type)
        self.check_block(f.body)

    # -- statements --

    def check_block(self, block: Block) -> None:
        self.scopes.append({})
        for s in block.stmts:
            self.check_stmt(s)
        self.scopes.pop()

    def check_stmt(self, s: Stmt) -> None:
        if isinstance(s, VarDecl):
            if s.init is not None:
                ty = self.expr(s.init, expected=s.decl_type)
                if not widens_to(ty, s.decl_type):
                    self.error(s.span,
                               f"cannot initialize {s.decl_type} '{s.name}' "
                               f"from {ty} (narrowing)")
            elif s.decl_type.array:
                self.error(s.span, "array variables must be initialized")
            self.declare(s.span, s.name, s.decl_type)
        elif isinstance(s, Assign):
            self.check_assign(s)
        elif isinstance(s, ExprStmt):
            self.expr(s.expr)
        elif isinstance(s, Return):
            ty = self.expr(s.value, expected=self.ret_type)
            if not widens_to(ty, self.ret_type):
                self.error(s.span, f"return type {ty} does not widen to {self.ret_type}")
        elif isinstance(s, Break):
            if self.loop_depth == 0:
                self.error(s.span, "'break' outside a loop")
            elif self.loop_depth == self.switch_loop_depth:
                self.error(s.span, "'break' directly inside a switch case")
        elif isinstance(s, Continue):
            if self.loop_depth == 0:
                self.error(s.span, "'continue' outside a loop")
            elif self.loop_depth == self.switch_loop_depth:
                self.error(s.span, "'continue' directly inside a switch case")
        elif isinstance(s, Block):
            self.check_block(s)
        elif isinstance(s, If):
            self.check_cond(s.cond)
            self.check_block(s.then)
            if isinstance(s.orelse, If):
                self.check_stmt(s.orelse)
            elif s.orelse is not None:
                self.check_block(s.orelse)
        elif isinstance(s, While):
            self.check_cond(s.cond)
            self.loop_depth += 1
            self.check_block(s.body)
            self.loop_depth -= 1
        elif isinstance(s, For):
            self.scopes.append({})
            if s.init is not None:
                self.check_stmt(s.init)
            if s.cond is not None:
                self.check_cond(s.cond)
            if s.step is not None:
                self.check_stmt(s.step)
            self.loop_depth += 1
            self.check_block(s.body)
            self.loop_depth -= 1
            self.scopes.pop()
        elif isinstance(s, Switch):
            self.check_switch(s)
        else:
            raise TypeError(f"unknown statement {type(s).__name__}")

    def check_assign(self, s: Assign) -> None:
        if isinstance(s.target, Var):
            ty = self.lookup(s.target.name)
            if ty is None:
                if s.target.name in CONSTANTS:
                    self.error(s.target.span, f"'{s.target.name}' is a builtin constant")
                else:
                    self.error(s.target.span, f"undeclared variable '{s.target.name}'")
                ty = T_ERROR
            self.put(s.target, ty)
        else:
            ty = self.expr(s.target)
        if s.op == "=":
            vty = self.expr(s.value, expected=ty)
            if not widens_to(vty, ty):
                self.error(s.span, f"cannot assign {vty} to {ty} (narrowing)")
            return
        if isinstance(s.target, Index):
            self.error(s.span, "compound assignment requires a variable target")
            return
        if not ty.is_numeric and ty is not T_ERROR:
            self.error(s.span, f"compound assignment needs a numeric target, got {ty}")
            return
        if s.op == "%=" and ty.is_float_group:
            self.error(s.span, "'%' is not defined for floating types")
        vty = self.expr(s.value, expected=ty)
        if not widens_to(vty, ty):
            self.error(s.span, f"cannot combine {ty} with {vty} (narrowing)")

    def check_cond(self, e: Expr) -> None:
        ty = self.expr(e, expected=T_BOOL)
        if ty not in (T_BOOL, T_ERROR):
            self.error(e.span, f"condition must be bool, got {ty}")

    def check_switch(self, s: Switch) -> None:
        sty = self.expr(s.scrutinee)
        if sty not in (T_INT, T_LONG, T_CHAR, T_ERROR):
            self.error(s.scrutinee.span,
                       f"switch scrutinee must be int, long or char, got {sty}")
        seen: dict[object, Case] = {}
        for case in s.cases:
            value = self.case_value(case, sty)
            if value is not None:
                if value in seen:
                    self.error(case.span, f"duplicate case label {value!r}")
                seen[value] = case
        outer = self.switch_loop_depth
        self.switch_loop_depth = self.loop_depth
        for case in s.cases:
            self.scopes.append({})
            for inner in case.body:
                self.check_stmt(inner)
            self.scopes.pop()
        if s.default is not None:
            self.scopes.append({})
            for inner in s.default:
                self.check_stmt(inner)
            self.scopes.pop()
        self.switch_loop_depth = outer

    def case_value(self, case: Case, sty: Type):
        label = case.label
        neg = False
        if isinstance(label, Unary) and label.op == "-":
            neg, label = True, label.operand
        if isinstance(label, IntLit):
            self.put(case.label, sty if sty in (T_INT, T_LONG) else T_INT)
            if isinstance(case.label, Unary):
                self.put(label, self.types[case.label])
            if sty == T_CHAR:
                self.error(case.label.span, "char switch requires char case labels")
                return None
            value = -label.value if neg else label.value
            return _WRAP[64 if sty == T_LONG else 32](value)
        if isinstance(label, CharLit) and not neg:
            self.put(label, T_CHAR)
            if sty in (T_INT, T_LONG):
                self.error(label.span, "numeric switch requires numeric case labels")
                return None
            return label.value
        self.error(case.label.span, "case label must be an int or char literal")
        return None

    # -- expressions --

    def expr(self, e: Expr, expected: Optional[Type] = None) -> Type:
        return self.put(e, self._expr(e, expected))

    def _expr(self, e: Expr, expected: Optional[Type]) -> Type:
        if isinstance(e, IntLit):
            if expected is not None and expected.is_int_group:
                return expected
            return T_INT
        if isinstance(e, FloatLit):
            if expected is not None and expected.is_float_group:
                return expected
            return T_DOUBLE
        if isinstance(e, BoolLit):
            return T_BOOL
        if isinstance(e, CharLit):
            return T_CHAR
        if isinstance(e, StringLit):
            return T_STRING
        if isinstance(e, Var):
            ty = self.lookup(e.name)
            if ty is not None:
                return ty
            if e.name in CONSTANTS:
                return CONSTANTS[e.name][0]
            if e.name in self.funcs or e.name in BUILTINS:
                return self.error(e.span, f"'{e.name}' is a function, not a variable")
            return self.error(e.span, f"undeclared variable '{e.name}'")
        if isinstance(e, ArrayLit):
            return self.array_lit(e, expected)
        if isinstance(e, Unary):
            return self.unary(e, expected)
        if isinstance(e, Binary):
            return self.binary(e, expected)
        if isinstance(e, Index):
            aty = self.expr(e.array)
            ity = self.expr(e.index, expected=T_INT)
            if ity not in (T_INT, T_LONG, T_ERROR):
                self.error(e.index.span, f"array index must be int or long, got {ity}")
            if aty == T_ERROR:
                return T_ERROR
            if not aty.array:
                return self.error(e.array.span, f"cannot index non-array type {aty}")
            return aty.elem()
        if isinstance(e, Call):
            return self.call(e)
        raise TypeError(f"unknown expression {type(e).__name__}")

    def array_lit(self, e: ArrayLit, expected: Optional[Type]) -> Type:
        if expected is not None and expected.array:
            elem = expected.elem()
            for x in e.elems:
                ty = self.expr(x, expected=elem)
                if not widens_to(ty, elem):
                    self.error(x.span, f"array element {ty} does not widen to {elem}")
            return expected
        if not e.elems:
            return self.error(e.span, "cannot infer the type of an empty array literal")
        tys = [self.expr(x) for x in e.elems]
        elem = tys[0]
        for ty in tys[1:]:
            if widens_to(elem, ty):
                elem = ty
        for x, ty in zip(e.elems, tys):
            if not widens_to(ty, elem):
                self.error(x.span, f"array element {ty} does not match {elem}")
        if elem.array:
            return self.error(e.span, "arrays of arrays are not supported")
        return Type(elem.kind, array=True)

    def unary(self, e: Unary, expected: Optional[Type]) -> Type:
        if e.op == "!":
            ty = self.expr(e.operand, expected=T_BOOL)
            if ty not in (T_BOOL, T_ERROR):
                return self.error(e.span, f"'!' needs a bool operand, got {ty}")
            return T_BOOL
        ty = self.expr(e.operand,
                       expected=expected if expected and expected.is_numeric else None)
        if ty == T_ERROR:
            return T_ERROR
        if not ty.is_numeric:
            return self.error(e.span, f"'-' needs a numeric operand, got {ty}")
        return ty

    def binary(self, e: Binary, expected: Optional[Type]) -> Type:
        op = e.op
        if op in LOGIC_OPS:
            for side in (e.left, e.right):
                ty = self.expr(side, expected=T_BOOL)
                if ty not in (T_BOOL, T_ERROR):
                    self.error(side.span, f"'{op}' needs bool operands, got {ty}")
            return T_BOOL
        hint = expected if op in ARITH_OPS and expected and expected.is_numeric else None
        lty = self.expr(e.left, expected=hint)
        rty = self.expr(e.right, expected=hint)
        if T_ERROR in (lty, rty):
            return T_ERROR if op in ARITH_OPS else T_BOOL
        if op in ARITH_OPS:
            joined = self.join_numeric(e, lty, rty)
            if joined == T_ERROR:
                return T_ERROR
            if op == "%" and joined.is_float_group:
                return self.error(e.span, "'%' is not defined for floating types")
            return joined
        if op in REL_OPS:
            if lty == T_CHAR and rty == T_CHAR:
                return T_BOOL
            if self.join_numeric(e, lty, rty) == T_ERROR:
                return T_ERROR
            return T_BOOL
        assert op in EQ_OPS
        if lty == rty and not lty.array:
            return T_BOOL
        if lty.is_numeric and rty.is_numeric:
            if self.join_numeric(e, lty, rty) == T_ERROR:
                return T_ERROR
            return T_BOOL
        return self.error(e.span, f"cannot compare {lty} with {rty}")

    def join_numeric(self, e: Binary, lty: Type, rty: Type) -> Type:
        if not (lty.is_numeric and rty.is_numeric):
            return self.error(e.span, f"operator '{e.op}' needs numeric operands, "
                                      f"got {lty} and {rty}")
        same_group = (lty.is_int_group == rty.is_int_group)
        if not same_group:
            return self.error(e.span, f"cannot mix {lty} and {rty} "
                                      "(integer and floating groups do not convert)")
        if lty == rty:
            return lty
        # A bare literal adopts the width of the concrete operand.
        if _is_literalish(e.left) and not _is_literalish(e.right):
            self.retype_literal(e.left, rty)
            return rty
        if _is_literalish(e.right) and not _is_literalish(e.left):
            self.retype_literal(e.right, lty)
            return lty
        return T_LONG if lty.is_int_group else T_DOUBLE

    def retype_literal(self, e: Expr, ty: Type) -> None:
        self.types[e] = ty
        if isinstance(e, Unary):
            self.retype_literal(e.operand, ty)

    def call(self, e: Call) -> Type:
        if e.name in self.funcs:
            f = self.funcs[e.name]
            if len(e.args) != len(f.params):
                return self.error(e.span, f"'{e.name}' takes {len(f.params)} "
                                          f"argument(s), got {len(e.args)}")
            for arg, p in zip(e.args, f.params):
                ty = self.expr(arg, expected=p.type)
                if not widens_to(ty, p.type):
                    self.error(arg.span, f"argument {ty} does not widen to {p.type}")
            return f.ret_type
        if e.name not in BUILTINS:
            return self.error(e.span, f"call to unknown function '{e.name}'")
        b = BUILTINS[e.name]
        if len(e.args) not in b.arities:
            return self.error(e.span, f"'{e.name}' takes {' or '.join(map(str, b.arities))} "
                                      f"argument(s), got {len(e.args)}")
        if e.name == "Print":
            self.expr(e.args[0])
            return T_VOID
        if e.name in ("GetNumericValue", "ToInt"):
            ty = self.expr(e.args[0], expected=T_CHAR)
            if ty not in (T_CHAR, T_ERROR):
                return self.error(e.args[0].span, f"'{e.name}' needs a char, got {ty}")
            return T_INT
        # Remaining builtins take an array first.
        aty = self.expr(e.args[0])
        if aty == T_ERROR:
            return T_ERROR
        if not aty.array:
            return self.error(e.args[0].span, f"'{e.name}' needs an array, got {aty}")
        if e.name == "Sort" and len(e.args) == 2:
            cty = self.expr(e.args[1], expected=T_STRING)
            if cty not in (T_STRING, T_ERROR):
                self.error(e.args[1].span, f"sort comparer must be a string, got {cty}")
        if e.name == "ElementAt":
            ity = self.expr(e.args[1], expected=T_INT)
            if ity not in (T_INT, T_LONG, T_ERROR):
                self.error(e.args[1].span, f"index must be int or long, got {ity}")
        if b.returns == "elem":
            return aty.elem()
        if b.returns == "int":
            return T_INT
        return T_VOID


def check(program: Program) -> CheckResult:
    """Full static check; returns diagnostics plus a type table."""
    return _Checker(program).run()


def validate(program: Program) -> list[Diagnostic]:
    """Diagnostics only; empty means the program is well-typed."""
    return check(program).diagnostics


def typed(program: Program) -> CheckResult:
    """Check and raise if invalid; used by consumers needing types."""
    result = check(program)
    if not result.ok:
        raise MiniLangError(result.diagnostics)
    return result
