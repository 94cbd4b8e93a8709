"""Pure-Python bytecode kernel.

Reference implementation of the execution semantics; the optional C
extension (`_kernel`) must produce bit-identical results. Keep the two
dispatch loops in sync when changing anything here.
"""

from __future__ import annotations

from .bytecode import (
    ADD_F, ADD_I, B_ELEMENTAT, B_GETNUM, B_LENGTH, B_MAX, B_MIN, B_PRINT,
    B_SORT, B_TOINT, CALL, CALLB, CONST, CodeProgram, DIV_F, DIV_I, EQ, GE,
    GT, HOOK, INDEX, JF, JMP, JT, LE, LOAD, LT, MOD_I, MUL_F, MUL_I, NE,
    NEG_F, NEG_I, NEWARR, NOT, POP, RET, SNAP, STEP, STORE, STOREIDX,
    STORE_SNAP, SUB_F, SUB_I,
)
from .numerics import f32, idiv, imod, wrap32, wrap64

KERNEL_NAME = "python"

MAX_CALL_DEPTH = 4000

FAULT_DIV_ZERO = "division-by-zero"
FAULT_OOB = "out-of-bounds"
FAULT_TIMEOUT = "timeout"
FAULT_STACK = "stack-overflow"
FAULT_NO_RETURN = "missing-return"


def _freeze(v):
    return tuple(v) if type(v) is list else v


def execute(cp: CodeProgram, args: list, step_limit: int,
            record_trace: bool, record_hooks: bool):
    """Run the entry function on already-coerced argument values.

    Returns (status, value, prints, fault, fault_step, steps, events,
    hook_events, final_params) where status is 0 for a normal return and
    1 for a fault.
    """
    funcs = cp.functions
    entry = funcs[0]
    slots = list(entry.zeros)
    slots[:entry.n_params] = args
    entry_slots = slots
    n_entry_params = entry.n_params
    trace_ids = list(range(entry.n_params)) + [-1] * (entry.n_slots - entry.n_params)
    next_tid = entry.n_params

    code = entry.code
    consts = entry.consts
    ip = 0
    steps = 0
    stack: list = []
    frames: list = []  # saved (code, consts, slots, trace_ids, next_tid, ip)
    prints: list = []
    events: list = [] if record_trace else None
    hook_events: list = [] if record_hooks else None

    fault = None
    value = None

    while True:
        op = code[ip]
        a = code[ip + 1]
        ip += 3

        if op == STEP:
            steps += 1
            if steps > step_limit:
                fault = FAULT_TIMEOUT
                break
        elif op == LOAD:
            stack.append(slots[a])
        elif op == CONST:
            stack.append(consts[a])
        elif op == LT:
            b = stack.pop()
            stack[-1] = stack[-1] < b
        elif op == LE:
            b = stack.pop()
            stack[-1] = stack[-1] <= b
        elif op == GT:
            b = stack.pop()
            stack[-1] = stack[-1] > b
        elif op == GE:
            b = stack.pop()
            stack[-1] = stack[-1] >= b
        elif op == EQ:
            b = stack.pop()
            stack[-1] = stack[-1] == b
        elif op == NE:
            b = stack.pop()
            stack[-1] = stack[-1] != b
        elif op == JF:
            if not stack.pop():
                ip = a
        elif op == JT:
            if stack.pop():
                ip = a
        elif op == JMP:
            ip = a
        elif op == ADD_I:
            b = stack.pop()
            v = stack[-1] + b
            stack[-1] = wrap64(v) if a else wrap32(v)
        elif op == SUB_I:
            b = stack.pop()
            v = stack[-1] - b
            stack[-1] = wrap64(v) if a else wrap32(v)
        elif op == MUL_I:
            b = stack.pop()
            v = stack[-1] * b
            stack[-1] = wrap64(v) if a else wrap32(v)
        elif op == DIV_I:
            b = stack.pop()
            if b == 0:
                fault = FAULT_DIV_ZERO
                break
            v = idiv(stack[-1], b)
            stack[-1] = wrap64(v) if a else wrap32(v)
        elif op == MOD_I:
            b = stack.pop()
            if b == 0:
                fault = FAULT_DIV_ZERO
                break
            stack[-1] = imod(stack[-1], b)
        elif op == NEG_I:
            v = -stack[-1]
            stack[-1] = wrap64(v) if a else wrap32(v)
        elif op == ADD_F:
            b = stack.pop()
            v = stack[-1] + b
            stack[-1] = v if a else f32(v)
        elif op == SUB_F:
            b = stack.pop()
            v = stack[-1] - b
            stack[-1] = v if a else f32(v)
        elif op == MUL_F:
            b = stack.pop()
            v = stack[-1] * b
            stack[-1] = v if a else f32(v)
        elif op == DIV_F:
            b = stack.pop()
            if b == 0.0:
                fault = FAULT_DIV_ZERO
                break
            v = stack[-1] / b
            stack[-1] = v if a else f32(v)
        elif op == NEG_F:
            stack[-1] = -stack[-1]
        elif op == NOT:
            stack[-1] = not stack[-1]
        elif op == STORE:
            slots[a] = stack.pop()
        elif op == STORE_SNAP:
            v = stack.pop()
            slots[a] = v
            if events is not None:
                tid = trace_ids[a]
                if tid < 0:
                    tid = trace_ids[a] = next_tid
                    next_tid += 1
                events.append((steps, tid, _freeze(v)))
            elif trace_ids[a] < 0:
                trace_ids[a] = next_tid
                next_tid += 1
        elif op == SNAP:
            if events is not None:
                tid = trace_ids[a]
                if tid < 0:
                    tid = trace_ids[a] = next_tid
                    next_tid += 1
                events.append((steps, tid, _freeze(slots[a])))
            elif trace_ids[a] < 0:
                trace_ids[a] = next_tid
                next_tid += 1
        elif op == INDEX:
            i = stack.pop()
            arr = stack[-1]
            if i < 0 or i >= len(arr):
                fault = FAULT_OOB
                break
            stack[-1] = arr[i]
        elif op == STOREIDX:
            v = stack.pop()
            i = stack.pop()
            arr = stack.pop()
            if i < 0 or i >= len(arr):
                fault = FAULT_OOB
                break
            arr[i] = v
        elif op == NEWARR:
            if a:
                arr = stack[-a:]
                del stack[-a:]
            else:
                arr = []
            stack.append(arr)
        elif op == POP:
            stack.pop()
        elif op == CALLB:
            nargs = code[ip - 1]  # b operand
            if a == B_LENGTH:
                stack[-1] = len(stack[-1])
            elif a == B_ELEMENTAT:
                i = stack.pop()
                arr = stack[-1]
                if i < 0 or i >= len(arr):
                    fault = FAULT_OOB
                    break
                stack[-1] = arr[i]
            elif a == B_PRINT:
                prints.append(_freeze(stack.pop()))
            elif a == B_SORT:
                reverse = False
                if nargs == 2:
                    reverse = stack.pop() == "DESC"
                arr = stack.pop()
                arr.sort(reverse=reverse)
            elif a == B_MIN:
                arr = stack[-1]
                if not arr:
                    fault = FAULT_OOB
                    break
                stack[-1] = min(arr)
            elif a == B_MAX:
                arr = stack[-1]
                if not arr:
                    fault = FAULT_OOB
                    break
                stack[-1] = max(arr)
            elif a == B_GETNUM:
                ch = stack[-1]
                stack[-1] = ord(ch) - 48 if "0" <= ch <= "9" else -1
            else:  # B_TOINT
                stack[-1] = ord(stack[-1])
        elif op == CALL:
            if len(frames) >= MAX_CALL_DEPTH:
                fault = FAULT_STACK
                break
            nargs = code[ip - 1]
            frames.append((code, consts, slots, trace_ids, next_tid, ip))
            f = funcs[a]
            new_slots = list(f.zeros)
            if nargs:
                new_slots[:nargs] = stack[-nargs:]
                del stack[-nargs:]
            slots = new_slots
            trace_ids = list(range(f.n_params)) + [-1] * (f.n_slots - f.n_params)
            next_tid = f.n_params
            code = f.code
            consts = f.consts
            ip = 0
        elif op == RET:
            if a == -1:
                fault = FAULT_NO_RETURN
                break
            if not frames:
                value = stack.pop()
                break
            code, consts, slots, trace_ids, next_tid, ip = frames.pop()
        elif op == HOOK:
            if hook_events is not None:
                hook_events.append((a, _freeze(slots[code[ip - 1]])))
        else:
            raise RuntimeError(f"bad opcode {op}")

    status = 1 if fault else 0
    final_params = tuple(_freeze(entry_slots[i]) for i in range(n_entry_params))
    return (status, _freeze(value), prints, fault, steps if fault else -1,
            steps, events if events is not None else [],
            hook_events if hook_events is not None else [], final_params)
