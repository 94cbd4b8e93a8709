"""Builtin function catalog and builtin constants."""

from __future__ import annotations

from dataclasses import dataclass

from .ast import T_INT, T_STRING, Type


@dataclass(frozen=True)
class Builtin:
    name: str
    arities: tuple[int, ...]
    pure: bool          # no observable side effect (output or mutation)
    total: bool         # cannot fault on well-typed input
    mutates_arg0: bool = False
    returns: str = "void"  # 'void' | 'int' | 'elem'


BUILTINS: dict[str, Builtin] = {b.name: b for b in (
    # Sort(a) must behave exactly like Sort(a, ASC) on every input.
    Builtin("Sort", (1, 2), pure=False, total=True, mutates_arg0=True),
    Builtin("Min", (1,), pure=True, total=False, returns="elem"),
    Builtin("Max", (1,), pure=True, total=False, returns="elem"),
    Builtin("Length", (1,), pure=True, total=True, returns="int"),
    # ElementAt(a, i) must agree with a[i], including the bounds fault.
    Builtin("ElementAt", (2,), pure=True, total=False, returns="elem"),
    Builtin("GetNumericValue", (1,), pure=True, total=True, returns="int"),
    Builtin("Print", (1,), pure=False, total=True),
    Builtin("ToInt", (1,), pure=True, total=True, returns="int"),
)}

# Comparer constants accepted by the two-argument Sort.
CONSTANTS: dict[str, tuple[Type, str]] = {
    "ASC": (T_STRING, "ASC"),
    "DESC": (T_STRING, "DESC"),
}

ASCENDING = "ASC"
DESCENDING = "DESC"


def is_builtin_name(name: str) -> bool:
    return name in BUILTINS or name in CONSTANTS


def numeric_value_of_char(ch: str) -> int:
    """Digit value of a character; -1 for any non-digit."""
    return ord(ch) - 48 if "0" <= ch <= "9" else -1
