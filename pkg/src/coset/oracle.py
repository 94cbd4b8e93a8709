"""Semantic oracles: differential equivalence, label properties,
complexity estimation.

The differential checker runs two programs on a shared input suite and
compares observable behavior: return value, printed values, and fault
kind. The property checkers decide label-defining semantic properties
dynamically, over recorded traces and loop-boundary snapshots.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .lang import parse
from .lang.ast import Program
from .lang.printer import expr_to_source
from . import interp
from .interp import DEFAULT_STEP_LIMIT, ExecResult, Outcome, execute
from .transforms import TransformResult
from .transforms.base import APPROXIMATING, CHANGING, PRESERVING

EXACT = "exact"
APPROX = "approximating"
EXPECT_DIVERGENCE = "expect-divergence"


def _norm(v):
    if isinstance(v, bool):
        return ("bool", v)
    if isinstance(v, int):
        return ("int", v)
    if isinstance(v, float):
        return ("float", v)
    if isinstance(v, str):
        return ("str", v)
    if isinstance(v, (tuple, list)):
        return ("array", tuple(_norm(x) for x in v))
    return ("none", None)


def outcome_key(o: Outcome):
    """The compared part of an outcome: value, prints, fault kind."""
    return (o.status, _norm(o.value), tuple(_norm(p) for p in o.prints), o.fault)


def outcomes_equal(a: Outcome, b: Outcome) -> bool:
    return outcome_key(a) == outcome_key(b)


@dataclass(frozen=True)
class InputResult:
    index: int
    equal: bool
    left: Outcome
    right: Outcome


@dataclass
class EquivalenceVerdict:
    mode: str
    results: list[InputResult] = field(default_factory=list)

    @property
    def divergent_indices(self) -> list[int]:
        return [r.index for r in self.results if not r.equal]

    @property
    def witness(self) -> Optional[InputResult]:
        for r in self.results:
            if not r.equal:
                return r
        return None

    expected_divergent: Optional[frozenset] = None

    @property
    def passed(self) -> bool:
        div = set(self.divergent_indices)
        if self.mode == EXACT:
            return not div
        if self.mode == APPROX:
            return True  # divergences are flagged, never a failure by themselves
        if self.expected_divergent is not None:
            return bool(div) and div == set(self.expected_divergent)
        return bool(div)

    @property
    def flagged(self) -> list[int]:
        return self.divergent_indices if self.mode == APPROX else []


def differential_check(left: Program, right: Program, inputs: Sequence,
                       mode: str = EXACT,
                       expected_divergent: Optional[set] = None,
                       step_limit: int = DEFAULT_STEP_LIMIT) -> EquivalenceVerdict:
    """Run both programs on every input and compare outcomes.

    A timeout is an outcome like any other and is compared by kind.
    """
    if mode not in (EXACT, APPROX, EXPECT_DIVERGENCE):
        raise ValueError(f"unknown mode {mode!r}")
    if not inputs:
        raise ValueError("differential_check needs at least one input")
    lc = interp.compiled(left)
    rc = interp.compiled(right)
    verdict = EquivalenceVerdict(mode, expected_divergent=(
        frozenset(expected_divergent) if expected_divergent is not None else None))
    for i, args in enumerate(inputs):
        lo = interp.run(lc, args, step_limit)
        ro = interp.run(rc, args, step_limit)
        verdict.results.append(InputResult(i, outcomes_equal(lo, ro), lo, ro))
    return verdict


def guard_triggering_inputs(program: Program, guard_conditions: Sequence[str],
                            inputs: Sequence) -> set[int]:
    """Indices of inputs that fire at least one leading guard clause.

    Decided by executing a probe function built from the entry signature
    and the guard conditions themselves.
    """
    entry = program.entry
    params = ", ".join(f"{p.type} {p.name}" for p in entry.params)
    lines = [f"int __guard_probe({params}) {{"]
    for cond in guard_conditions:
        lines.append(f"    if ({cond}) {{")
        lines.append("        return 1;")
        lines.append("    }")
    lines.append("    return 0;")
    lines.append("}")
    probe = parse("\n".join(lines))
    out = set()
    for i, args in enumerate(inputs):
        o = interp.run(probe, args)
        if o.returned and o.value == 1:
            out.add(i)
    return out


def verify_transform(original: Program, result: TransformResult,
                     inputs: Sequence,
                     step_limit: int = DEFAULT_STEP_LIMIT) -> EquivalenceVerdict:
    """Check a transform result against its declared contract."""
    contract = result.contract
    if contract == PRESERVING:
        return differential_check(original, result.program, inputs, EXACT,
                                  step_limit=step_limit)
    if contract == APPROXIMATING:
        return differential_check(original, result.program, inputs, APPROX,
                                  step_limit=step_limit)
    assert contract == CHANGING
    expected = guard_triggering_inputs(
        original, result.config.get("guard_conditions", []), inputs)
    return differential_check(original, result.program, inputs,
                              EXPECT_DIVERGENCE, expected_divergent=expected,
                              step_limit=step_limit)


# --- label properties ------------------------------------------------------

LINEAR = "LINEAR"
LINEARITHMIC = "LINEARITHMIC"
QUADRATIC = "QUADRATIC"
OTHER = "OTHER"

SLOPE_BINS = ((0.8, 1.25, LINEAR), (1.25, 1.7, LINEARITHMIC),
              (1.7, 2.3, QUADRATIC))


@dataclass(frozen=True)
class ComplexityClass:
    label: str
    slope: float
    mean_steps: tuple = ()

    def __eq__(self, other):
        if isinstance(other, str):
            return self.label == other
        if isinstance(other, ComplexityClass):
            return self.label == other.label and self.slope == other.slope
        return NotImplemented

    def __hash__(self):
        return hash(self.label)


def _complexity_args(program: Program, n: int, rng: random.Random) -> list:
    args: list = []
    saw_array = False
    for p in interp.compiled(program).entry_params:
        if p.array and p.kind in ("int", "long") and not saw_array:
            args.append([rng.randrange(0, 2 * n) for _ in range(n)])
            saw_array = True
        elif not p.array and p.kind in ("int", "long"):
            args.append(rng.randrange(0, 2 * n))
        else:
            raise interp.UsageError(
                "complexity estimation needs an entry taking one int array "
                "plus optional int scalars")
    if not saw_array:
        raise interp.UsageError("entry has no int array parameter")
    return args


def estimate_complexity(program: Program,
                        sizes: Sequence[int] = (8, 16, 32, 64, 128),
                        trials: int = 3, seed: int = 0,
                        step_limit: int = DEFAULT_STEP_LIMIT) -> ComplexityClass:
    """Fit the log-log growth of executed statements on random inputs."""
    means = []
    for n in sizes:
        counts = []
        for t in range(trials):
            rng = random.Random(seed * 1_000_003 + n * 101 + t)
            args = _complexity_args(program, n, rng)
            out = interp.run(program, args, step_limit)
            if out.fault == interp.FAULT_TIMEOUT:
                return ComplexityClass(OTHER, float("nan"), ())
            counts.append(out.steps)
        means.append(sum(counts) / len(counts))
    slope = float(np.polyfit(np.log(np.asarray(sizes, dtype=float)),
                             np.log(np.maximum(np.asarray(means), 1.0)), 1)[0])
    for lo, hi, label in SLOPE_BINS:
        if lo <= slope < hi or (label == QUADRATIC and slope == hi):
            return ComplexityClass(label, slope, tuple(means))
    return ComplexityClass(OTHER, slope, tuple(means))


def _final_array(res: ExecResult):
    out = res.outcome
    if isinstance(out.value, tuple):
        return out.value
    for v in res.final_params:
        if isinstance(v, tuple):
            return v
    return None


def check_sorted_postcondition(program: Program, suites: Sequence) -> Optional[bool]:
    """True iff on every input the final/returned array is sorted.

    Vacuously true for empty and singleton arrays; None when the program
    has no array to check.
    """
    saw_array = False
    for args in suites:
        res = execute(program, args)
        if res.outcome.status == "faulted":
            return False
        arr = _final_array(res)
        if arr is None:
            continue
        saw_array = True
        if any(arr[i] > arr[i + 1] for i in range(len(arr) - 1)):
            return False
    return True if saw_array else None


def _boundary_states(program: Program, args):
    """(loop count, states per loop id) at iteration boundaries of the
    entry's outermost nest loops; states is None when the run faulted."""
    cp = interp.compiled(program, hook_loops=True)
    if cp.hooked_loops == 0:
        return 0, None
    res = execute(cp, args, hook_loops=True)
    if res.outcome.status == "faulted":
        return cp.hooked_loops, None
    states: dict[int, list[tuple]] = {}
    for loop_id, state in res.hook_events:
        states.setdefault(loop_id, []).append(state)
    return cp.hooked_loops, states


def _suffix_sorted(arr: tuple, i: int) -> bool:
    n = len(arr)
    lo = max(1, n - i)
    return all(arr[j - 1] <= arr[j] for j in range(lo, n))


def _check_loop_invariant(program: Program, suites: Sequence,
                          holds) -> Optional[bool]:
    """Existential over outermost nest loops, universal over inputs and
    iteration counts; None when the entry has no loop nest. A loop not
    reached on some input passes vacuously for that input."""
    ok_loops: Optional[set[int]] = None
    for args in suites:
        n_loops, states = _boundary_states(program, args)
        if n_loops == 0:
            return None
        if states is None:  # faulted run certifies nothing
            return False
        passing = {lid for lid in range(n_loops)
                   if holds(states.get(lid, []))}
        ok_loops = passing if ok_loops is None else (ok_loops & passing)
        if not ok_loops:
            return False
    return bool(ok_loops)


def check_bubble_invariant(program: Program, suites: Sequence) -> Optional[bool]:
    """Outer-loop invariant: after i iterations the last i elements form
    a sorted suffix of maxima."""

    def holds(seq: list[tuple]) -> bool:
        return all(_suffix_sorted(state, i)
                   for i, state in enumerate(seq) if i >= 1)

    return _check_loop_invariant(program, suites, holds)


def check_prefix_minima_invariant(program: Program,
                                  suites: Sequence) -> Optional[bool]:
    """Selection-style invariant: after i iterations the first i slots
    hold the i smallest values, in sorted order."""

    def holds(seq: list[tuple]) -> bool:
        if not seq:
            return True
        ref = sorted(seq[0])
        for i, state in enumerate(seq):
            if i == 0:
                continue
            k = min(i, len(state))
            if list(state[:k]) != ref[:k]:
                return False
        return True

    return _check_loop_invariant(program, suites, holds)


def check_adjacent_swaps(program: Program, suites: Sequence) -> bool:
    """True iff every array mutation is an adjacent transposition (seen
    as a two-write exchange of neighboring positions) and at least one
    such swap happens across the suite."""
    swaps = 0
    for args in suites:
        res = execute(program, args, record_trace=True)
        if res.outcome.status == "faulted":
            return False
        per_slot: dict[int, list[tuple]] = {}
        # Parameter slots never get a declaration snapshot; seed their
        # history with the pristine argument value.
        for i, arg in enumerate(args):
            if isinstance(arg, (list, tuple)):
                per_slot[i] = [tuple(arg)]
        for snap in res.trace.snapshots:
            if isinstance(snap.value, tuple):
                per_slot.setdefault(snap.slot, []).append(snap.value)
        for seq in per_slot.values():
            i = 1
            while i < len(seq):
                prev, cur = seq[i - 1], seq[i]
                if prev == cur or len(prev) != len(cur):
                    i += 1
                    continue
                if i + 1 < len(seq) and len(seq[i + 1]) == len(prev):
                    base, after = prev, seq[i + 1]
                    diff = [k for k in range(len(base)) if base[k] != after[k]]
                    if (len(diff) == 2 and diff[1] == diff[0] + 1
                            and base[diff[0]] == after[diff[1]]
                            and base[diff[1]] == after[diff[0]]):
                        swaps += 1
                        i += 2
                        continue
                return False
    return swaps > 0


def _first_array(args) -> Optional[tuple]:
    for a in args:
        if isinstance(a, (list, tuple)):
            return tuple(a)
    return None


def check_returns_extremum(program: Program, suites: Sequence,
                           which: str) -> bool:
    fn = max if which == "max" else min
    checked = False
    for args in suites:
        arr = _first_array(args)
        if arr is None or not arr:
            continue
        out = interp.run(program, args)
        if not out.returned or out.value != fn(arr):
            return False
        checked = True
    return checked


def check_search_contract(program: Program, suites: Sequence) -> bool:
    """Entry (array, key): returns an index of key when present, a
    negative sentinel otherwise."""
    checked = False
    for args in suites:
        arr = _first_array(args)
        if arr is None or len(args) < 2:
            return False
        key = args[1] if not isinstance(args[1], (list, tuple)) else None
        if key is None:
            return False
        if not arr:
            continue
        out = interp.run(program, args)
        if not out.returned or not isinstance(out.value, int):
            return False
        if key in arr:
            if not (0 <= out.value < len(arr) and arr[out.value] == key):
                return False
        elif out.value >= 0:
            return False
        checked = True
    return checked


VOWELS = frozenset("aeiou")


def check_vowel_contract(program: Program, suites: Sequence) -> bool:
    checked = False
    for args in suites:
        if len(args) != 1 or not isinstance(args[0], str):
            return False
        out = interp.run(program, args)
        want = 1 if args[0] in VOWELS else 0
        if not out.returned or out.value != want:
            return False
        checked = True
    return checked


def check_returns_range(program: Program, suites: Sequence) -> bool:
    """Entry (array): returns max - min on non-empty inputs."""
    checked = False
    for args in suites:
        arr = _first_array(args)
        if arr is None:
            return False
        if not arr:
            continue
        out = interp.run(program, args)
        if not out.returned or out.value != max(arr) - min(arr):
            return False
        checked = True
    return checked


# --- property registry -----------------------------------------------------

@dataclass(frozen=True)
class PropertySpec:
    """A decidable, execution-based semantic property."""

    id: str                       # P1 .. P11
    param: Optional[str] = None   # P1 target complexity class
    sizes: tuple = (8, 16, 32, 64)
    trials: int = 2
    seed: int = 0

    def describe(self) -> str:
        if self.id == "P1":
            return f"time complexity {self.param}"
        return PROPERTY_DESCRIPTIONS[self.id]


PROPERTY_DESCRIPTIONS = {
    "P1": "time complexity class",
    "P2": "post-condition: array sorted",
    "P3": "outer-loop invariant: sorted suffix of maxima",
    "P5": "outer-loop invariant: fixed sorted prefix of minima",
    "P6": "all array mutations are adjacent swaps",
    "P7": "returns the array maximum",
    "P8": "returns the array minimum",
    "P9": "search contract: index of key or negative sentinel",
    "P10": "vowel classification contract",
    "P11": "returns max - min of the array",
}

PROPERTY_IDS = tuple(PROPERTY_DESCRIPTIONS)


def evaluate_property(spec: PropertySpec, program: Program,
                      inputs: Sequence) -> Optional[bool]:
    """True/False, or None when the property does not apply."""
    pid = spec.id
    if pid == "P1":
        try:
            cls = estimate_complexity(program, spec.sizes, spec.trials, spec.seed)
        except interp.UsageError:
            return None
        return cls.label == spec.param
    if pid == "P2":
        return check_sorted_postcondition(program, inputs)
    if pid == "P3":
        return check_bubble_invariant(program, inputs)
    if pid == "P5":
        return check_prefix_minima_invariant(program, inputs)
    if pid == "P6":
        return check_adjacent_swaps(program, inputs)
    if pid == "P7":
        return check_returns_extremum(program, inputs, "max")
    if pid == "P8":
        return check_returns_extremum(program, inputs, "min")
    if pid == "P9":
        return check_search_contract(program, inputs)
    if pid == "P10":
        return check_vowel_contract(program, inputs)
    if pid == "P11":
        return check_returns_range(program, inputs)
    raise ValueError(f"unknown property {pid!r}")
