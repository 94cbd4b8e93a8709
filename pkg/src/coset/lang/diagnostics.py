"""Diagnostics with source spans."""

from __future__ import annotations

from dataclasses import dataclass

from .ast import Span

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    span: Span
    message: str
    code: str

    def render(self, source: str | None = None) -> str:
        if source is None:
            return f"{self.severity}[{self.code}]: {self.message}"
        line = source.count("\n", 0, self.span.lo) + 1
        bol = source.rfind("\n", 0, self.span.lo) + 1
        col = self.span.lo - bol + 1
        return f"{line}:{col}: {self.severity}[{self.code}]: {self.message}"


class MiniLangError(Exception):
    """Raised for unparsable or ill-typed input; carries diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic], source: str | None = None):
        self.diagnostics = list(diagnostics)
        self.source = source
        super().__init__("; ".join(d.render(source) for d in self.diagnostics))
