"""Transform kinds, contracts, and the result record."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..lang.ast import Program, Span

PRESERVING = "preserving"
APPROXIMATING = "approximating"
CHANGING = "changing"

# Contract per kind: preserving passes must leave observable behavior
# (return value, prints, fault kind) identical on every input.
CONTRACTS: dict[str, str] = {
    "CVP": PRESERVING,
    "DCE": PRESERVING,
    "LU": PRESERVING,
    "HOIST": PRESERVING,
    "VR": PRESERVING,
    "NCS": PRESERVING,
    "CFR": PRESERVING,
    "CSU": PRESERVING,
    "TYPE_APPROX": APPROXIMATING,
    "API_APPROX": APPROXIMATING,
    "STRIP_ERROR_HANDLING": CHANGING,
}

PRESERVING_KINDS = tuple(k for k, c in CONTRACTS.items() if c == PRESERVING)
APPROXIMATING_KINDS = tuple(k for k, c in CONTRACTS.items() if c == APPROXIMATING)


@dataclass(frozen=True)
class Edit:
    span: Span          # site in the input program's source
    description: str


@dataclass
class TransformResult:
    kind: str
    program: Program
    applicable: bool
    edits: list[Edit] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def contract(self) -> str:
        return CONTRACTS[self.kind]


def inapplicable(kind: str, program: Program, **config) -> TransformResult:
    return TransformResult(kind, program, False, [], dict(config))
