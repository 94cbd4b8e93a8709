"""Width-exact arithmetic shared by the interpreter and constant folding.

int wraps at 32 bits, long at 64 bits (two's complement); float values
are kept as Python floats holding exactly-rounded binary32 results, so
float arithmetic computed in binary64 and rounded once per operation is
identical to a native float32 ALU.
"""

from __future__ import annotations

import math
import struct

_F32 = struct.Struct("<f")
_PACK = _F32.pack
_UNPACK = _F32.unpack

INT32_MIN, INT32_MAX = -(2**31), 2**31 - 1
INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1


def wrap32(v: int) -> int:
    return ((v + 0x80000000) & 0xFFFFFFFF) - 0x80000000


def wrap64(v: int) -> int:
    return ((v + 0x8000000000000000) & 0xFFFFFFFFFFFFFFFF) - 0x8000000000000000


def f32(v: float) -> float:
    """Round a double to the nearest binary32 value."""
    try:
        return _UNPACK(_PACK(v))[0]
    except OverflowError:
        return math.inf if v > 0 else -math.inf


def idiv(a: int, b: int) -> int:
    """C-style integer division: truncates toward zero."""
    q = abs(a) // abs(b)
    return q if (a < 0) == (b < 0) else -q


def imod(a: int, b: int) -> int:
    """C-style remainder: takes the sign of the dividend."""
    r = abs(a) % abs(b)
    return -r if a < 0 else r
