"""Tokenizer for MiniLang source text."""

from __future__ import annotations

from dataclasses import dataclass

from .ast import Span
from .diagnostics import ERROR, Diagnostic, MiniLangError

KEYWORDS = frozenset({
    "int", "long", "float", "double", "bool", "char", "string",
    "true", "false", "if", "else", "switch", "case", "default",
    "while", "for", "break", "continue", "return",
})

# Longest first so '<=' wins over '<', '&&' over error, etc.
PUNCT = (
    "+=", "-=", "*=", "/=", "%=", "==", "!=", "<=", ">=", "&&", "||",
    "{", "}", "(", ")", "[", "]", ";", ":", ",",
    "+", "-", "*", "/", "%", "<", ">", "=", "!",
)

IDENT = "ident"
INTLIT = "intlit"
FLOATLIT = "floatlit"
CHARLIT = "charlit"
STRINGLIT = "stringlit"
EOF = "eof"

_ESCAPES = {"n": "\n", "t": "\t", "\\": "\\", "'": "'", '"': '"', "0": "\0"}
_UNESCAPES = {"\n": "\\n", "\t": "\\t", "\\": "\\\\"}


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT/INTLIT/... or the punct/keyword text itself
    text: str
    lo: int
    hi: int

    @property
    def span(self) -> Span:
        return Span(self.lo, self.hi)


def _err(pos: int, msg: str) -> MiniLangError:
    return MiniLangError([Diagnostic(ERROR, Span(pos, pos + 1), msg, "lex")])


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c == "/" and text.startswith("//", i):
            j = text.find("\n", i)
            i = n if j < 0 else j + 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(Token(FLOATLIT, text[i:j], i, j))
            else:
                toks.append(Token(INTLIT, text[i:j], i, j))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(Token(word if word in KEYWORDS else IDENT, word, i, j))
            i = j
            continue
        if c == "'":
            j, ch = _read_quoted(text, i, "'")
            if len(ch) != 1:
                raise _err(i, "character literal must hold exactly one character")
            toks.append(Token(CHARLIT, ch, i, j))
            i = j
            continue
        if c == '"':
            j, s = _read_quoted(text, i, '"')
            toks.append(Token(STRINGLIT, s, i, j))
            i = j
            continue
        for p in PUNCT:
            if text.startswith(p, i):
                toks.append(Token(p, p, i, i + len(p)))
                i += len(p)
                break
        else:
            raise _err(i, f"unexpected character {c!r}")
    toks.append(Token(EOF, "", n, n))
    return toks


def _read_quoted(text: str, i: int, quote: str) -> tuple[int, str]:
    j = i + 1
    out: list[str] = []
    while j < len(text) and text[j] != quote:
        if text[j] == "\n":
            break
        if text[j] == "\\":
            if j + 1 >= len(text) or text[j + 1] not in _ESCAPES:
                raise _err(j, "unknown escape sequence")
            out.append(_ESCAPES[text[j + 1]])
            j += 2
        else:
            out.append(text[j])
            j += 1
    if j >= len(text) or text[j] != quote:
        raise _err(i, "unterminated literal")
    return j + 1, "".join(out)


def escape_char(ch: str) -> str:
    if ch == "'":
        return "\\'"
    if ch == "\0":
        return "\\0"
    return _UNESCAPES.get(ch, ch)


def escape_string(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\0":
            out.append("\\0")
        else:
            out.append(_UNESCAPES.get(ch, ch))
    return "".join(out)
