"""MiniLang front end: grammar, AST, parsing, validation, printing."""

from . import ast
from .ast import (  # noqa: F401
    ArrayLit, Assign, Binary, Block, BoolLit, Break, Call, Case, CharLit,
    Continue, Expr, ExprStmt, FloatLit, For, Function, If, Index, IntLit,
    Node, Param, Program, Return, Span, Stmt, StringLit, Switch, Type,
    Unary, Var, VarDecl, While, structurally_equal, walk,
)
from .builtins import ASCENDING, BUILTINS, CONSTANTS, DESCENDING  # noqa: F401
from .check import CheckResult, check, typed, validate  # noqa: F401
from .diagnostics import Diagnostic, MiniLangError  # noqa: F401
from .parser import parse  # noqa: F401
from .printer import expr_to_source, loc_count, to_source  # noqa: F401

__all__ = [
    "ast", "parse", "to_source", "expr_to_source", "loc_count",
    "validate", "check", "typed", "CheckResult",
    "Diagnostic", "MiniLangError", "structurally_equal", "walk",
    "BUILTINS", "CONSTANTS", "ASCENDING", "DESCENDING",
]
