"""Source-to-source transformation suite with semantic contracts."""

from __future__ import annotations

from ..lang.ast import Program
from .approx import approximate_types, substitute_api
from .base import (  # noqa: F401
    APPROXIMATING, APPROXIMATING_KINDS, CHANGING, CONTRACTS, Edit,
    PRESERVING, PRESERVING_KINDS, TransformResult,
)
from .cfr import remove_control_flags
from .csu import unify_control_statements
from .cvp import cvp
from .dce import dce
from .guards import leading_guards, strip_error_handling
from .hoist import hoist
from .ncs import simplify_nested_conditions
from .rename import rename_variables
from .unroll import loop_unroll

ALL_KINDS = tuple(CONTRACTS)

_APPLIERS = {
    "CVP": lambda p, **cfg: cvp(p),
    "DCE": lambda p, **cfg: dce(p),
    "LU": lambda p, **cfg: loop_unroll(p, factor=cfg.get("factor", 2)),
    "HOIST": lambda p, **cfg: hoist(p),
    "VR": lambda p, **cfg: rename_variables(p, seed=cfg.get("seed", 0),
                                            mapping=cfg.get("mapping")),
    "NCS": lambda p, **cfg: simplify_nested_conditions(p),
    "CFR": lambda p, **cfg: remove_control_flags(p),
    "CSU": lambda p, **cfg: unify_control_statements(
        p, direction=cfg.get("direction", "all")),
    "TYPE_APPROX": lambda p, **cfg: approximate_types(
        p, mode=cfg.get("mode", "int_to_long")),
    "API_APPROX": lambda p, **cfg: substitute_api(
        p, expand_index=cfg.get("expand_index", False)),
    "STRIP_ERROR_HANDLING": lambda p, **cfg: strip_error_handling(p),
}


def apply(kind: str, program: Program, **config) -> TransformResult:
    """Apply a transformation by kind name."""
    if kind not in _APPLIERS:
        raise ValueError(f"unknown transform kind {kind!r}; "
                         f"expected one of {', '.join(ALL_KINDS)}")
    return _APPLIERS[kind](program, **config)


__all__ = [
    "apply", "ALL_KINDS", "CONTRACTS", "PRESERVING", "APPROXIMATING",
    "CHANGING", "PRESERVING_KINDS", "APPROXIMATING_KINDS", "Edit",
    "TransformResult", "cvp", "dce", "loop_unroll", "hoist",
    "rename_variables", "simplify_nested_conditions", "remove_control_flags",
    "unify_control_statements", "approximate_types", "substitute_api",
    "strip_error_handling", "leading_guards",
]
