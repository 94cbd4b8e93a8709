"""Recursive-descent parser producing a MiniLang AST.

Errors are reported with a span and the set of expected tokens.
"""

from __future__ import annotations

from .ast import (
    ArrayLit, Assign, Binary, Block, BoolLit, Break, Call, Case, CharLit,
    Continue, Expr, ExprStmt, FloatLit, For, Function, If, Index, IntLit,
    Param, Program, Return, Span, Stmt, StringLit, Switch, Type, Unary, Var,
    VarDecl, While, SCALAR_KINDS,
)
from .diagnostics import ERROR, Diagnostic, MiniLangError
from .lexer import (
    CHARLIT, EOF, FLOATLIT, IDENT, INTLIT, STRINGLIT, Token, tokenize,
)

TYPE_KEYWORDS = frozenset(SCALAR_KINDS)

ASSIGN_OPS = ("=", "+=", "-=", "*=", "/=", "%=")

_STMT_START = "a statement"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.pos = 0

    # -- token plumbing --

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def at(self, *kinds: str) -> bool:
        return self.peek().kind in kinds

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def expect(self, *kinds: str) -> Token:
        tok = self.peek()
        if tok.kind in kinds:
            return self.advance()
        raise self.fail(*kinds)

    def fail(self, *expected: str) -> MiniLangError:
        tok = self.peek()
        got = "end of input" if tok.kind == EOF else repr(tok.text)
        want = " or ".join(f"'{k}'" if len(k) <= 2 or k in TYPE_KEYWORDS
                           or k[0].isalpha() else k for k in expected)
        msg = f"expected {want}, found {got}" if expected else f"unexpected {got}"
        return MiniLangError(
            [Diagnostic(ERROR, tok.span, msg, "parse")], self.text)

    def span_from(self, lo: int) -> Span:
        return Span(lo, self.toks[self.pos - 1].hi if self.pos else lo)

    # -- grammar --

    def program(self) -> Program:
        functions = []
        while not self.at(EOF):
            functions.append(self.function())
        if not functions:
            raise self.fail("a function definition")
        seen: dict[str, Function] = {}
        for f in functions:
            if f.name in seen:
                raise MiniLangError([Diagnostic(
                    ERROR, f.span, f"duplicate function name '{f.name}'",
                    "parse")], self.text)
            seen[f.name] = f
        return Program(functions, span=Span(0, len(self.text)))

    def function(self) -> Function:
        lo = self.peek().lo
        ret = self.type_name()
        name = self.expect(IDENT).text
        self.expect("(")
        params: list[Param] = []
        if not self.at(")"):
            while True:
                plo = self.peek().lo
                ptype = self.type_name()
                pname = self.expect(IDENT).text
                params.append(Param(ptype, pname, span=self.span_from(plo)))
                if not self.at(","):
                    break
                self.advance()
        self.expect(")")
        body = self.block()
        return Function(ret, name, params, body, span=self.span_from(lo))

    def type_name(self) -> Type:
        tok = self.expect(*TYPE_KEYWORDS)
        if self.at("["):
            self.advance()
            self.expect("]")
            return Type(tok.kind, array=True)
        return Type(tok.kind)

    def block(self) -> Block:
        lo = self.expect("{").lo
        stmts = []
        while not self.at("}"):
            stmts.append(self.statement())
        self.expect("}")
        return Block(stmts, span=self.span_from(lo))

    def statement(self) -> Stmt:
        tok = self.peek()
        if tok.kind == "{":
            return self.block()
        if tok.kind in TYPE_KEYWORDS:
            stmt = self.var_decl()
            self.expect(";")
            return stmt
        if tok.kind == "if":
            return self.if_stmt()
        if tok.kind == "switch":
            return self.switch_stmt()
        if tok.kind == "while":
            lo = self.advance().lo
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            body = self.block()
            return While(cond, body, span=self.span_from(lo))
        if tok.kind == "for":
            return self.for_stmt()
        if tok.kind == "break":
            lo = self.advance().lo
            self.expect(";")
            return Break(span=self.span_from(lo))
        if tok.kind == "continue":
            lo = self.advance().lo
            self.expect(";")
            return Continue(span=self.span_from(lo))
        if tok.kind == "return":
            lo = self.advance().lo
            value = self.expression()
            self.expect(";")
            return Return(value, span=self.span_from(lo))
        if tok.kind == IDENT:
            stmt = self.assign_or_call()
            self.expect(";")
            return stmt
        raise self.fail(_STMT_START)

    def var_decl(self) -> VarDecl:
        lo = self.peek().lo
        decl_type = self.type_name()
        name = self.expect(IDENT).text
        init = None
        if self.at("="):
            self.advance()
            init = self.expression()
        return VarDecl(decl_type, name, init, span=self.span_from(lo))

    def assign_or_call(self) -> Stmt:
        lo = self.peek().lo
        expr = self.postfix()
        if self.at(*ASSIGN_OPS):
            if not isinstance(expr, (Var, Index)):
                raise self.fail("an assignable target")
            op = self.advance().kind
            value = self.expression()
            return Assign(expr, op, value, span=self.span_from(lo))
        if isinstance(expr, Call):
            return ExprStmt(expr, span=self.span_from(lo))
        raise self.fail(*ASSIGN_OPS, "(")

    def if_stmt(self) -> If:
        lo = self.expect("if").lo
        self.expect("(")
        cond = self.expression()
        self.expect(")")
        then = self.block()
        orelse = None
        if self.at("else"):
            self.advance()
            orelse = self.if_stmt() if self.at("if") else self.block()
        return If(cond, then, orelse, span=self.span_from(lo))

    def switch_stmt(self) -> Switch:
        lo = self.expect("switch").lo
        self.expect("(")
        scrutinee = self.expression()
        self.expect(")")
        self.expect("{")
        cases: list[Case] = []
        default = None
        while not self.at("}"):
            if self.at("case"):
                clo = self.advance().lo
                label = self.case_label()
                self.expect(":")
                body = self.case_body()
                cases.append(Case(label, body, span=self.span_from(clo)))
            elif self.at("default"):
                if default is not None:
                    raise self.fail("}")
                self.advance()
                self.expect(":")
                default = self.case_body()
            else:
                raise self.fail("case", "default", "}")
        self.expect("}")
        return Switch(scrutinee, cases, default, span=self.span_from(lo))

    def case_label(self) -> Expr:
        if self.at("-"):
            lo = self.advance().lo
            tok = self.expect(INTLIT)
            lit = IntLit(int(tok.text), span=tok.span)
            return Unary("-", lit, span=self.span_from(lo))
        if self.at(INTLIT):
            tok = self.advance()
            return IntLit(int(tok.text), span=tok.span)
        if self.at(CHARLIT):
            tok = self.advance()
            return CharLit(tok.text, span=tok.span)
        raise self.fail(INTLIT, CHARLIT)

    def case_body(self) -> list[Stmt]:
        stmts = []
        while not self.at("case", "default", "}"):
            stmts.append(self.statement())
        return stmts

    def for_stmt(self) -> For:
        lo = self.expect("for").lo
        self.expect("(")
        init = None
        if not self.at(";"):
            init = (self.var_decl() if self.peek().kind in TYPE_KEYWORDS
                    else self.simple_assign())
        self.expect(";")
        cond = None if self.at(";") else self.expression()
        self.expect(";")
        step = None if self.at(")") else self.simple_assign()
        self.expect(")")
        body = self.block()
        return For(init, cond, step, body, span=self.span_from(lo))

    def simple_assign(self) -> Assign:
        stmt = self.assign_or_call()
        if not isinstance(stmt, Assign):
            raise self.fail(*ASSIGN_OPS)
        return stmt

    # -- expressions, by descending precedence --

    def expression(self) -> Expr:
        return self.binary(0)

    _LEVELS = (("||",), ("&&",), ("==", "!="), ("<", "<=", ">", ">="),
               ("+", "-"), ("*", "/", "%"))

    def binary(self, level: int) -> Expr:
        if level == len(self._LEVELS):
            return self.unary()
        lo = self.peek().lo
        left = self.binary(level + 1)
        while self.at(*self._LEVELS[level]):
            op = self.advance().kind
            right = self.binary(level + 1)
            left = Binary(op, left, right, span=self.span_from(lo))
        return left

    def unary(self) -> Expr:
        if self.at("-", "!"):
            tok = self.advance()
            operand = self.unary()
            return Unary(tok.kind, operand, span=self.span_from(tok.lo))
        return self.postfix()

    def postfix(self) -> Expr:
        expr = self.primary()
        while self.at("["):
            self.advance()
            index = self.expression()
            self.expect("]")
            expr = Index(expr, index, span=Span(expr.span.lo,
                                                self.toks[self.pos - 1].hi))
        return expr

    def primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == INTLIT:
            self.advance()
            return IntLit(int(tok.text), span=tok.span)
        if tok.kind == FLOATLIT:
            self.advance()
            return FloatLit(float(tok.text), span=tok.span)
        if tok.kind in ("true", "false"):
            self.advance()
            return BoolLit(tok.kind == "true", span=tok.span)
        if tok.kind == CHARLIT:
            self.advance()
            return CharLit(tok.text, span=tok.span)
        if tok.kind == STRINGLIT:
            self.advance()
            return StringLit(tok.text, span=tok.span)
        if tok.kind == IDENT:
            self.advance()
            if self.at("("):
                self.advance()
                args = []
                if not self.at(")"):
                    while True:
                        args.append(self.expression())
                        if not self.at(","):
                            break
                        self.advance()
                self.expect(")")
                return Call(tok.text, args, span=self.span_from(tok.lo))
            return Var(tok.text, span=tok.span)
        if tok.kind == "(":
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        if tok.kind == "[":
            self.advance()
            elems = []
            if not self.at("]"):
                while True:
                    elems.append(self.expression())
                    if not self.at(","):
                        break
                    self.advance()
            self.expect("]")
            return ArrayLit(elems, span=self.span_from(tok.lo))
        raise self.fail("an expression")


def parse(text: str) -> Program:
    """Parse MiniLang source; raises MiniLangError with diagnostics."""
    return _Parser(text).program()
