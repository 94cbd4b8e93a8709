"""Deterministic pretty-printer.

Output format (fixed, so line counts and golden files are stable):
4-space indent, LF line endings, one statement per line, `{` on the
header line, `}` on its own line, single blank line between functions.
Re-parsing the output yields a structurally identical AST.
"""

from __future__ import annotations

import numpy as np

from .ast import (
    ArrayLit, Assign, Binary, Block, BoolLit, Break, Call, CharLit, Continue,
    Expr, ExprStmt, FloatLit, For, Function, If, Index, IntLit, Program,
    Return, Stmt, StringLit, Switch, Unary, Var, VarDecl, While,
)
from .lexer import escape_char, escape_string

_PREC = {"||": 1, "&&": 2, "==": 3, "!=": 3, "<": 4, "<=": 4, ">": 4,
         ">=": 4, "+": 5, "-": 5, "*": 6, "/": 6, "%": 6}
_UNARY_PREC = 7
_ATOM_PREC = 8

INDENT = "    "


def format_float(value: float) -> str:
    """Shortest decimal literal that parses back to the same double."""
    text = repr(value)
    if "e" in text or "E" in text or "." not in text:
        text = np.format_float_positional(value, unique=True, trim="0")
        if text.endswith("."):
            text += "0"
        if text.startswith("."):
            text = "0" + text
    return text


def expr_to_source(expr: Expr) -> str:
    return _expr(expr, 0)


def _expr(e: Expr, parent_prec: int) -> str:
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, FloatLit):
        return format_float(e.value)
    if isinstance(e, BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, CharLit):
        return f"'{escape_char(e.value)}'"
    if isinstance(e, StringLit):
        return f'"{escape_string(e.value)}"'
    if isinstance(e, ArrayLit):
        return "[" + ", ".join(_expr(x, 0) for x in e.elems) + "]"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Call):
        return e.name + "(" + ", ".join(_expr(a, 0) for a in e.args) + ")"
    if isinstance(e, Index):
        return _expr(e.array, _ATOM_PREC) + "[" + _expr(e.index, 0) + "]"
    if isinstance(e, Unary):
        text = e.op + _expr(e.operand, _UNARY_PREC)
        return f"({text})" if parent_prec > _UNARY_PREC else text
    if isinstance(e, Binary):
        prec = _PREC[e.op]
        # Left-associative: the right operand needs parens at equal precedence.
        text = f"{_expr(e.left, prec)} {e.op} {_expr(e.right, prec + 1)}"
        return f"({text})" if parent_prec > prec else text
    raise TypeError(f"unknown expression node {type(e).__name__}")


def _simple_stmt(s: Stmt) -> str:
    """Statement text without terminator, for for-headers."""
    if isinstance(s, VarDecl):
        text = f"{s.decl_type} {s.name}"
        if s.init is not None:
            text += f" = {_expr(s.init, 0)}"
        return text
    if isinstance(s, Assign):
        return f"{_expr(s.target, 0)} {s.op} {_expr(s.value, 0)}"
    raise TypeError(f"not a simple statement: {type(s).__name__}")


class _Printer:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def emit(self, depth: int, text: str) -> None:
        self.lines.append(INDENT * depth + text)

    def stmt(self, s: Stmt, depth: int) -> None:
        if isinstance(s, (VarDecl, Assign)):
            self.emit(depth, _simple_stmt(s) + ";")
        elif isinstance(s, ExprStmt):
            self.emit(depth, _expr(s.expr, 0) + ";")
        elif isinstance(s, Return):
            self.emit(depth, f"return {_expr(s.value, 0)};")
        elif isinstance(s, Break):
            self.emit(depth, "break;")
        elif isinstance(s, Continue):
            self.emit(depth, "continue;")
        elif isinstance(s, Block):
            self.emit(depth, "{")
            self.body(s, depth + 1)
            self.emit(depth, "}")
        elif isinstance(s, If):
            self.if_chain(s, depth, "if")
        elif isinstance(s, While):
            self.emit(depth, f"while ({_expr(s.cond, 0)}) {{")
            self.body(s.body, depth + 1)
            self.emit(depth, "}")
        elif isinstance(s, For):
            init = _simple_stmt(s.init) if s.init is not None else ""
            cond = _expr(s.cond, 0) if s.cond is not None else ""
            step = _simple_stmt(s.step) if s.step is not None else ""
            self.emit(depth, f"for ({init}; {cond}; {step}) {{")
            self.body(s.body, depth + 1)
            self.emit(depth, "}")
        elif isinstance(s, Switch):
            self.emit(depth, f"switch ({_expr(s.scrutinee, 0)}) {{")
            for case in s.cases:
                self.emit(depth + 1, f"case {_expr(case.label, 0)}:")
                for inner in case.body:
                    self.stmt(inner, depth + 2)
            if s.default is not None:
                self.emit(depth + 1, "default:")
                for inner in s.default:
                    self.stmt(inner, depth + 2)
            self.emit(depth, "}")
        else:
            raise TypeError(f"unknown statement node {type(s).__name__}")

    def if_chain(self, s: If, depth: int, head: str) -> None:
        self.emit(depth, f"{head} ({_expr(s.cond, 0)}) {{")
        self.body(s.then, depth + 1)
        node = s.orelse
        while isinstance(node, If):
            self.emit(depth, f"}} else if ({_expr(node.cond, 0)}) {{")
            self.body(node.then, depth + 1)
            node = node.orelse
        if node is not None:
            self.emit(depth, "} else {")
            self.body(node, depth + 1)
        self.emit(depth, "}")

    def body(self, block: Block, depth: int) -> None:
        for s in block.stmts:
            self.stmt(s, depth)

    def function(self, f: Function) -> None:
        params = ", ".join(f"{p.type} {p.name}" for p in f.params)
        self.emit(0, f"{f.ret_type} {f.name}({params}) {{")
        self.body(f.body, 1)
        self.emit(0, "}")


def to_source(program: Program) -> str:
    """Render a program as canonical MiniLang source text."""
    pr = _Printer()
    for i, f in enumerate(program.functions):
        if i:
            pr.lines.append("")
        pr.function(f)
    return "\n".join(pr.lines) + "\n"


def loc_count(program: Program) -> int:
    """Number of lines in the canonical rendering."""
    return len(to_source(program).splitlines())
