"""AST-to-bytecode compiler.

Both execution kernels (pure Python and the optional C extension)
interpret the same flat instruction stream: triples ``op, a, b`` stored
in a single int list. Statement boundaries are explicit STEP
instructions; writes that represent observable state changes use the
SNAP variants so kernels can record name-agnostic trace events.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..lang.ast import (
    ArrayLit, Assign, Binary, Block, BoolLit, Break, Call, CharLit, Continue,
    Expr, ExprStmt, FloatLit, For, Function, If, Index, IntLit, Program,
    Return, Stmt, StringLit, Switch, Type, Unary, Var, VarDecl, While,
    T_BOOL, T_CHAR, T_DOUBLE, T_FLOAT, T_INT, T_LONG, T_STRING,
)
from ..lang.builtins import CONSTANTS
from ..lang.check import CheckResult, typed
from .numerics import f32, wrap32, wrap64

# Opcodes (stride-3 encoding: op, a, b).
STEP = 0
CONST = 1       # a: constant index
LOAD = 2        # a: slot
STORE = 3       # a: slot (silent write: declarations' zero-init, temps)
STORE_SNAP = 4  # a: slot (traced write)
SNAP = 5        # a: slot (trace event after in-place array mutation)
POP = 6
NEWARR = 7      # a: element count
INDEX = 8
STOREIDX = 9
ADD_I = 10      # a: width (0 = 32-bit, 1 = 64-bit)
SUB_I = 11
MUL_I = 12
DIV_I = 13
MOD_I = 14
NEG_I = 15
ADD_F = 16      # a: width (0 = float32, 1 = float64)
SUB_F = 17
MUL_F = 18
DIV_F = 19
NEG_F = 20
LT = 21
LE = 22
GT = 23
GE = 24
EQ = 25
NE = 26
NOT = 27
JMP = 28        # a: target instruction index
JF = 29
JT = 30
CALL = 31       # a: function index, b: argc
CALLB = 32      # a: builtin id, b: argc
RET = 33
HOOK = 34       # a: loop id, b: slot observed at the iteration boundary

OP_NAMES = {v: k for k, v in list(globals().items()) if isinstance(v, int)}

# Builtin ids for CALLB.
B_SORT = 0
B_MIN = 1
B_MAX = 2
B_LENGTH = 3
B_ELEMENTAT = 4
B_GETNUM = 5
B_PRINT = 6
B_TOINT = 7

BUILTIN_IDS = {"Sort": B_SORT, "Min": B_MIN, "Max": B_MAX, "Length": B_LENGTH,
               "ElementAt": B_ELEMENTAT, "GetNumericValue": B_GETNUM,
               "Print": B_PRINT, "ToInt": B_TOINT}

_ZERO = {T_INT.kind: 0, T_LONG.kind: 0, T_FLOAT.kind: 0.0, T_DOUBLE.kind: 0.0,
         T_BOOL.kind: False, T_CHAR.kind: "\0", T_STRING.kind: ""}


@dataclass
class CodeFunction:
    name: str
    n_params: int
    n_slots: int
    code: list[int]
    consts: tuple
    zeros: tuple  # initial slot values (None for array slots)


@dataclass
class CodeProgram:
    functions: list[CodeFunction]
    entry_params: tuple[Type, ...]
    entry_ret: Type
    hooked_loops: int = 0
    hook_slot: int = -1


class _FunctionCompiler:
    def __init__(self, types: dict[Expr, Type], func_ids: dict[str, int],
                 func: Function):
        self.types = types
        self.func_ids = func_ids
        self.func = func
        self.code: list[int] = []
        self.consts: list = []
        self.const_ids: dict = {}
        self.scopes: list[dict[str, int]] = [{}]
        self.slot_types: list[Type] = []
        # (continue target or None, break patch sites, continue patch sites)
        self.loop_stack: list[list] = []
        self.hook_loops: list[While | For] = []
        self.hook_slot = -1

    # -- emit helpers --

    def emit(self, op: int, a: int = 0, b: int = 0) -> int:
        at = len(self.code)
        self.code.extend((op, a, b))
        return at

    def here(self) -> int:
        return len(self.code)

    def patch(self, at: int, target: int) -> None:
        self.code[at + 1] = target

    def const(self, value) -> int:
        key = (type(value).__name__, value)
        if key not in self.const_ids:
            self.const_ids[key] = len(self.consts)
            self.consts.append(value)
        return self.const_ids[key]

    # -- slots --

    def new_slot(self, name: str, ty: Type) -> int:
        slot = len(self.slot_types)
        self.slot_types.append(ty)
        self.scopes[-1][name] = slot
        return slot

    def hidden_slot(self, ty: Type) -> int:
        slot = len(self.slot_types)
        self.slot_types.append(ty)
        return slot

    def slot_of(self, name: str) -> int:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        raise KeyError(name)

    # -- driver --

    def compile(self) -> CodeFunction:
        for p in self.func.params:
            self.new_slot(p.name, p.type)
        self.block(self.func.body)
        # Falling off the end is a defined runtime fault.
        self.emit(RET, -1)
        zeros = tuple(None if t.array else _ZERO[t.kind] for t in self.slot_types)
        return CodeFunction(self.func.name, len(self.func.params),
                            len(self.slot_types), self.code,
                            tuple(self.consts), zeros)

    # -- statements --

    def block(self, b: Block) -> None:
        self.scopes.append({})
        for s in b.stmts:
            self.stmt(s)
        self.scopes.pop()

    def stmt(self, s: Stmt) -> None:
        if isinstance(s, VarDecl):
            self.emit(STEP)
            slot = self.new_slot(s.name, s.decl_type)
            if s.init is not None:
                self.expr(s.init)
                self.emit(STORE_SNAP, slot)
            else:
                # Declarations without initializers establish the zero
                # default silently: no trace event, so reordering two bare
                # declarations cannot change the trace.
                self.emit(CONST, self.const(_ZERO[s.decl_type.kind]))
                self.emit(STORE, slot)
        elif isinstance(s, Assign):
            self.emit(STEP)
            self.assign(s)
        elif isinstance(s, ExprStmt):
            self.emit(STEP)
            ty = self.expr(s.expr, allow_void=True)
            if ty is not None:
                self.emit(POP)
            if s.expr.name == "Sort" and isinstance(s.expr.args[0], Var):
                self.emit(SNAP, self.slot_of(s.expr.args[0].name))
        elif isinstance(s, Return):
            self.emit(STEP)
            self.expr(s.value)
            self.emit(RET)
        elif isinstance(s, Break):
            self.emit(STEP)
            self.loop_stack[-1][1].append(self.emit(JMP))
        elif isinstance(s, Continue):
            self.emit(STEP)
            target = self.loop_stack[-1][0]
            if target is None:
                self.loop_stack[-1][2].append(self.emit(JMP))
            else:
                self.emit(JMP, target)
        elif isinstance(s, Block):
            self.block(s)
        elif isinstance(s, If):
            self.if_stmt(s)
        elif isinstance(s, While):
            self.while_stmt(s)
        elif isinstance(s, For):
            self.for_stmt(s)
        elif isinstance(s, Switch):
            self.switch_stmt(s)
        else:
            raise TypeError(f"unknown statement {type(s).__name__}")

    def assign(self, s: Assign) -> None:
        if isinstance(s.target, Var):
            slot = self.slot_of(s.target.name)
            if s.op == "=":
                self.expr(s.value)
            else:
                self.emit(LOAD, slot)
                self.expr(s.value)
                ty = self.types[s.target]
                self.arith_op(s.op[0], ty)
            self.emit(STORE_SNAP, slot)
        else:
            arr = s.target.array
            assert isinstance(arr, Var)
            slot = self.slot_of(arr.name)
            self.emit(LOAD, slot)
            self.expr(s.target.index)
            self.expr(s.value)
            self.emit(STOREIDX)
            self.emit(SNAP, slot)

    def arith_op(self, op: str, ty: Type) -> None:
        w = 1 if ty.kind in (T_LONG.kind, T_DOUBLE.kind) else 0
        table = {"+": ADD_I, "-": SUB_I, "*": MUL_I, "/": DIV_I, "%": MOD_I} \
            if ty.is_int_group else {"+": ADD_F, "-": SUB_F, "*": MUL_F, "/": DIV_F}
        self.emit(table[op], w)

    def if_stmt(self, s: If) -> None:
        self.emit(STEP)
        self.expr(s.cond)
        jf = self.emit(JF)
        self.block(s.then)
        if s.orelse is None:
            self.patch(jf, self.here())
            return
        jend = self.emit(JMP)
        self.patch(jf, self.here())
        if isinstance(s.orelse, If):
            self.stmt(s.orelse)
        else:
            self.block(s.orelse)
        self.patch(jend, self.here())

    def loop_head(self, node) -> None:
        self.emit(STEP)
        if node in self.hook_loops:
            self.emit(HOOK, self.hook_loops.index(node), self.hook_slot)

    def while_stmt(self, s: While) -> None:
        head = self.here()
        self.loop_head(s)
        self.expr(s.cond)
        jf = self.emit(JF)
        self.loop_stack.append([head, [], []])
        self.block(s.body)
        self.emit(JMP, head)
        _, breaks, _ = self.loop_stack.pop()
        end = self.here()
        self.patch(jf, end)
        for at in breaks:
            self.patch(at, end)

    def for_stmt(self, s: For) -> None:
        self.scopes.append({})
        if s.init is not None:
            self.stmt(s.init)
        head = self.here()
        self.loop_head(s)
        jf = -1
        if s.cond is not None:
            self.expr(s.cond)
            jf = self.emit(JF)
        # `continue` jumps to the step statement, known only afterwards.
        self.loop_stack.append([None, [], []])
        self.block(s.body)
        _, breaks, continues = self.loop_stack.pop()
        for at in continues:
            self.patch(at, self.here())
        if s.step is not None:
            self.emit(STEP)
            self.assign(s.step)
        self.emit(JMP, head)
        end = self.here()
        if jf >= 0:
            self.patch(jf, end)
        for at in breaks:
            self.patch(at, end)
        self.scopes.pop()

    def switch_stmt(self, s: Switch) -> None:
        self.emit(STEP)
        sty = self.types[s.scrutinee]
        if isinstance(s.scrutinee, Var):
            scrut_slot = self.slot_of(s.scrutinee.name)
        else:
            scrut_slot = self.hidden_slot(sty)
            self.expr(s.scrutinee)
            self.emit(STORE, scrut_slot)
        case_jumps = []
        for case in s.cases:
            self.emit(LOAD, scrut_slot)
            self.expr(case.label)
            self.emit(EQ)
            case_jumps.append(self.emit(JT))
        jdefault = self.emit(JMP)
        ends = []
        for at, case in zip(case_jumps, s.cases):
            self.patch(at, self.here())
            self.scopes.append({})
            for inner in case.body:
                self.stmt(inner)
            self.scopes.pop()
            ends.append(self.emit(JMP))
        self.patch(jdefault, self.here())
        if s.default is not None:
            self.scopes.append({})
            for inner in s.default:
                self.stmt(inner)
            self.scopes.pop()
        end = self.here()
        for at in ends:
            self.patch(at, end)

    # -- expressions --

    def expr(self, e: Expr, allow_void: bool = False):
        """Emit code leaving the value on the stack; returns the type
        (None for void calls in statement position)."""
        if isinstance(e, IntLit):
            ty = self.types[e]
            wrap = wrap64 if ty == T_LONG else wrap32
            self.emit(CONST, self.const(wrap(e.value)))
            return ty
        if isinstance(e, FloatLit):
            ty = self.types[e]
            value = f32(e.value) if ty == T_FLOAT else e.value
            self.emit(CONST, self.const(value))
            return ty
        if isinstance(e, BoolLit):
            self.emit(CONST, self.const(e.value))
            return T_BOOL
        if isinstance(e, CharLit):
            self.emit(CONST, self.const(e.value))
            return T_CHAR
        if isinstance(e, StringLit):
            self.emit(CONST, self.const(e.value))
            return T_STRING
        if isinstance(e, Var):
            if e.name in CONSTANTS and not self._is_local(e.name):
                ty, value = CONSTANTS[e.name]
                self.emit(CONST, self.const(value))
                return ty
            self.emit(LOAD, self.slot_of(e.name))
            return self.types[e]
        if isinstance(e, ArrayLit):
            for x in e.elems:
                self.expr(x)
            self.emit(NEWARR, len(e.elems))
            return self.types[e]
        if isinstance(e, Index):
            self.expr(e.array)
            self.expr(e.index)
            self.emit(INDEX)
            return self.types[e]
        if isinstance(e, Unary):
            self.expr(e.operand)
            if e.op == "!":
                self.emit(NOT)
            else:
                ty = self.types[e]
                if ty.is_int_group:
                    self.emit(NEG_I, 1 if ty == T_LONG else 0)
                else:
                    self.emit(NEG_F, 1 if ty == T_DOUBLE else 0)
            return self.types[e]
        if isinstance(e, Binary):
            return self.binary(e)
        if isinstance(e, Call):
            return self.call(e, allow_void)
        raise TypeError(f"unknown expression {type(e).__name__}")

    def _is_local(self, name: str) -> bool:
        return any(name in scope for scope in self.scopes)

    def binary(self, e: Binary):
        op = e.op
        if op == "&&":
            self.expr(e.left)
            jf = self.emit(JF)
            self.expr(e.right)
            jend = self.emit(JMP)
            self.patch(jf, self.here())
            self.emit(CONST, self.const(False))
            self.patch(jend, self.here())
            return T_BOOL
        if op == "||":
            self.expr(e.left)
            jt = self.emit(JT)
            self.expr(e.right)
            jend = self.emit(JMP)
            self.patch(jt, self.here())
            self.emit(CONST, self.const(True))
            self.patch(jend, self.here())
            return T_BOOL
        self.expr(e.left)
        self.expr(e.right)
        if op in ("+", "-", "*", "/", "%"):
            ty = self.types[e]
            self.arith_op(op, ty)
            return ty
        table = {"<": LT, "<=": LE, ">": GT, ">=": GE, "==": EQ, "!=": NE}
        self.emit(table[op])
        return T_BOOL

    def call(self, e: Call, allow_void: bool = False):
        for arg in e.args:
            self.expr(arg)
        if e.name in BUILTIN_IDS:
            bid = BUILTIN_IDS[e.name]
            self.emit(CALLB, bid, len(e.args))
            returns_value = e.name not in ("Sort", "Print")
        else:
            self.emit(CALL, self.func_ids[e.name], len(e.args))
            returns_value = True
        if not returns_value:
            if not allow_void:
                raise AssertionError("void call in value position")
            return None
        return self.types.get(e)


def _top_level_nest_loops(func: Function) -> list:
    """Loops at loop-depth zero in the body that contain another loop."""
    from ..lang.ast import walk as ast_walk

    found = []

    def scan(stmts):
        for s in stmts:
            if isinstance(s, (While, For)):
                inner = [n for n in ast_walk(s.body) if isinstance(n, (While, For))]
                if inner:
                    found.append(s)
                continue  # anything deeper is not outermost
            if isinstance(s, Block):
                scan(s.stmts)
            elif isinstance(s, If):
                scan(s.then.stmts)
                node = s.orelse
                while isinstance(node, If):
                    scan(node.then.stmts)
                    node = node.orelse
                if node is not None:
                    scan(node.stmts)
            elif isinstance(s, Switch):
                for case in s.cases:
                    scan(case.body)
                if s.default is not None:
                    scan(s.default)

    scan(func.body.stmts)
    return found


def compile_program(program: Program, result: CheckResult | None = None,
                    hook_loops: bool = False) -> CodeProgram:
    """Compile a validated program; raises MiniLangError when invalid."""
    if result is None:
        result = typed(program)
    types = result.types
    func_ids = {f.name: i for i, f in enumerate(program.functions)}
    functions = []
    hooked = 0
    hook_slot = -1
    for i, f in enumerate(program.functions):
        fc = _FunctionCompiler(types, func_ids, f)
        if hook_loops and i == 0:
            arr_slot = next((j for j, p in enumerate(f.params) if p.type.array), -1)
            if arr_slot >= 0:
                fc.hook_loops = _top_level_nest_loops(f)
                fc.hook_slot = arr_slot
                hooked = len(fc.hook_loops)
                hook_slot = arr_slot
        functions.append(fc.compile())
    entry = program.entry
    return CodeProgram(functions, tuple(p.type for p in entry.params),
                       entry.ret_type, hooked, hook_slot)
