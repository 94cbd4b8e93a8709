"""Deterministic interpreter with trace recording and size accounting.

Two interchangeable kernels execute the compiled bytecode: an optional
C extension built from ``_kernel.pyx`` and a pure-Python fallback. The
extension is used when importable unless ``COSET_PURE_PY`` is set to a
non-empty value. Both produce bit-identical results; ``tests``
and ``benchmarks/bench_kernels.py`` compare them.
"""

from __future__ import annotations

import os
import weakref
from dataclasses import dataclass
from typing import Optional, Sequence

from ..lang.ast import Program, Type
from ..lang.printer import format_float, loc_count
from . import kernel_py
from .bytecode import CodeProgram, compile_program
from .numerics import f32, wrap32, wrap64

DEFAULT_STEP_LIMIT = 10_000_000

BYTES_PER_LINE = 15
BYTES_PER_STATE_CHANGE = 20

FAULT_DIV_ZERO = kernel_py.FAULT_DIV_ZERO
FAULT_OOB = kernel_py.FAULT_OOB
FAULT_TIMEOUT = kernel_py.FAULT_TIMEOUT
FAULT_STACK = kernel_py.FAULT_STACK
FAULT_NO_RETURN = kernel_py.FAULT_NO_RETURN

if os.environ.get("COSET_PURE_PY"):
    _kernel_mod = kernel_py
else:
    try:
        from . import _kernel as _kernel_mod  # type: ignore[attr-defined]
    except ImportError:
        _kernel_mod = kernel_py


def active_kernel() -> str:
    """Name of the kernel executing programs: 'c' or 'python'."""
    return _kernel_mod.KERNEL_NAME


def kernels() -> dict[str, object]:
    """All importable kernels, keyed by name."""
    out = {kernel_py.KERNEL_NAME: kernel_py}
    try:
        from . import _kernel  # type: ignore[attr-defined]
        out[_kernel.KERNEL_NAME] = _kernel
    except ImportError:
        pass
    return out


@dataclass(frozen=True)
class Outcome:
    status: str             # 'returned' or 'faulted'
    value: object           # return value (None when faulted)
    prints: tuple           # values passed to Print, in order
    fault: Optional[str]    # fault kind when faulted
    fault_step: int         # statement count at the fault, -1 otherwise
    steps: int              # executed statement count

    @property
    def returned(self) -> bool:
        return self.status == "returned"


@dataclass(frozen=True)
class Snapshot:
    step: int   # statement count when the write happened
    slot: int   # name-agnostic slot id, ordered by first traced write
    value: object

    def __iter__(self):
        return iter((self.step, self.slot, self.value))


@dataclass(frozen=True)
class Trace:
    snapshots: tuple[Snapshot, ...]
    step_total: int

    def state_events(self, include_bool: bool = True) -> tuple:
        """(slot, value) stream; optionally without bool-valued writes.

        This is the stable view used for transform-invariance checks:
        it carries no statement counters, and dropping bool writes makes
        it insensitive to control-flag removal.
        """
        return tuple((s.slot, s.value) for s in self.snapshots
                     if include_bool or not isinstance(s.value, bool))


@dataclass(frozen=True)
class ExecResult:
    outcome: Outcome
    trace: Optional[Trace]
    hook_events: tuple      # (loop_id, array state) per iteration boundary
    final_params: tuple     # entry argument values after execution


class UsageError(ValueError):
    """Bad entry arguments or malformed API use."""


_CODE_CACHE: "weakref.WeakKeyDictionary[Program, dict]" = weakref.WeakKeyDictionary()


def compiled(program: Program, hook_loops: bool = False) -> CodeProgram:
    per_prog = _CODE_CACHE.setdefault(program, {})
    if hook_loops not in per_prog:
        per_prog[hook_loops] = compile_program(program, hook_loops=hook_loops)
    return per_prog[hook_loops]


def _coerce_scalar(ty: Type, v, where: str):
    kind = ty.kind
    if kind in ("int", "long"):
        if isinstance(v, bool) or not isinstance(v, int):
            raise UsageError(f"{where}: expected {kind}, got {v!r}")
        return wrap64(v) if kind == "long" else wrap32(v)
    if kind in ("float", "double"):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise UsageError(f"{where}: expected {kind}, got {v!r}")
        return f32(float(v)) if kind == "float" else float(v)
    if kind == "bool":
        if not isinstance(v, bool):
            raise UsageError(f"{where}: expected bool, got {v!r}")
        return v
    if kind == "char":
        if not isinstance(v, str) or len(v) != 1:
            raise UsageError(f"{where}: expected a single character, got {v!r}")
        return v
    if kind == "string":
        if not isinstance(v, str):
            raise UsageError(f"{where}: expected string, got {v!r}")
        return v
    raise UsageError(f"{where}: unsupported type {ty}")


def coerce_args(param_types: Sequence[Type], args: Sequence) -> list:
    if len(args) != len(param_types):
        raise UsageError(f"entry takes {len(param_types)} argument(s), "
                         f"got {len(args)}")
    out = []
    for i, (ty, v) in enumerate(zip(param_types, args)):
        where = f"argument {i}"
        if ty.array:
            if not isinstance(v, (list, tuple)):
                raise UsageError(f"{where}: expected an array, got {v!r}")
            elem = ty.elem()
            out.append([_coerce_scalar(elem, x, where) for x in v])
        else:
            out.append(_coerce_scalar(ty, v, where))
    return out


def execute(program_or_code, args: Sequence, *,
            step_limit: int = DEFAULT_STEP_LIMIT,
            record_trace: bool = False,
            hook_loops: bool = False) -> ExecResult:
    """Full execution result, including trace and hook events on request."""
    if isinstance(program_or_code, CodeProgram):
        cp = program_or_code
    else:
        cp = compiled(program_or_code, hook_loops=hook_loops)
    runtime_args = coerce_args(cp.entry_params, args)
    (status, value, prints, fault, fault_step, steps, events, hook_events,
     final_params) = _kernel_mod.execute(cp, runtime_args, step_limit,
                                         record_trace, hook_loops)
    outcome = Outcome("faulted" if status else "returned",
                      None if status else value, tuple(prints), fault,
                      fault_step, steps)
    tr = None
    if record_trace:
        tr = Trace(tuple(Snapshot(*e) for e in events), steps)
    return ExecResult(outcome, tr, tuple(hook_events), final_params)


def run(program_or_code, args: Sequence,
        step_limit: int = DEFAULT_STEP_LIMIT) -> Outcome:
    """Execute the entry function; deterministic in (program, input)."""
    return execute(program_or_code, args, step_limit=step_limit).outcome


def trace(program_or_code, args: Sequence,
          step_limit: int = DEFAULT_STEP_LIMIT) -> Trace:
    """Execute and record the name-agnostic state-change trace."""
    return execute(program_or_code, args, step_limit=step_limit,
                   record_trace=True).trace


def normalized_size(x) -> int:
    """Byte-normalized size: 15 bytes per source line, 20 per state change."""
    if isinstance(x, Program):
        return loc_count(x) * BYTES_PER_LINE
    if isinstance(x, Trace):
        return len(x.snapshots) * BYTES_PER_STATE_CHANGE
    raise TypeError("normalized_size takes a Program or a Trace")


# --- trace serialization (versioned line format) --------------------------

TRACE_FORMAT_HEADER = "coset-trace 1"


def render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format_float(v) if v == v and abs(v) != float("inf") else repr(v)
    if isinstance(v, str):
        from ..lang.lexer import escape_char, escape_string
        if len(v) == 1:
            return f"'{escape_char(v)}'"
        return f'"{escape_string(v)}"'
    if isinstance(v, (tuple, list)):
        return "[" + ", ".join(render_value(x) for x in v) + "]"
    raise TypeError(f"cannot render {v!r}")


def trace_to_lines(tr: Trace) -> list[str]:
    lines = [TRACE_FORMAT_HEADER, f"steps {tr.step_total}"]
    lines.extend(f"{s.step},{s.slot},{render_value(s.value)}"
                 for s in tr.snapshots)
    return lines


def trace_to_text(tr: Trace) -> str:
    return "\n".join(trace_to_lines(tr)) + "\n"
