"""Program templates and the label catalog.

Each label renders from a Style: a choice of identifier pool, loop
style, declaration placement (inline vs. hoisted bare declarations at
the top, whose order is a label-invariant permutation axis), guard
clause presence, temp-variable style, and a few label-specific axes
(builtin-Sort vs. manual sort, ElementAt vs. indexing, control-flag
loop form, switch vs. if chain). Every axis preserves the label's
defining semantic properties; the generator certifies that per entry.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace

# --- label catalog ---------------------------------------------------------

@dataclass(frozen=True)
class LabelDef:
    name: str
    task: str
    specs: tuple  # ((property id, expected value), ...) — all must hold


LABELS: dict[str, LabelDef] = {ld.name: ld for ld in (
    LabelDef("Bubblesort", "sorting",
             (("P1", "QUADRATIC"), ("P2", True), ("P3", True),
              ("P5", False), ("P6", True))),
    LabelDef("Insertionsort", "sorting",
             (("P1", "QUADRATIC"), ("P2", True), ("P3", False),
              ("P5", False), ("P6", False))),
    LabelDef("Selectionsort", "sorting",
             (("P1", "QUADRATIC"), ("P2", True), ("P3", False),
              ("P5", True), ("P6", False))),
    LabelDef("Flagsort", "sorting",
             (("P1", "QUADRATIC"), ("P2", True), ("P3", False),
              ("P5", True), ("P6", True))),
    LabelDef("Difference", "difference",
             (("P2", True), ("P11", True))),
    LabelDef("LinearSearch", "search",
             (("P1", "LINEAR"), ("P9", True))),
    LabelDef("BinarySearch", "search",
             (("P1", "OTHER"), ("P9", True))),
    LabelDef("MaxScan", "aggregate",
             (("P1", "LINEAR"), ("P7", True), ("P8", False))),
    LabelDef("MinScan", "aggregate",
             (("P1", "LINEAR"), ("P7", False), ("P8", True))),
    LabelDef("VowelCheck", "classify",
             (("P10", True),)),
)}

TASKS = ("sorting", "difference", "search", "aggregate", "classify")


def labels_for_task(task: str) -> list[str]:
    return [name for name, ld in LABELS.items() if ld.task == task]


# --- styles ----------------------------------------------------------------

@dataclass
class Style:
    pool: int = 0            # identifier pool index
    fname: int = 0           # function-name variant index
    loop: str = "for"        # outer counted-loop style: 'for' | 'while'
    hoisted: bool = False    # bare declarations at the top
    decl_perm: int = 0       # permutation of the hoisted declarations
    guard: bool = False      # leading guard clause
    two_temps: bool = False  # swap via two temporaries
    paranoid: bool = False   # redundant bounds check around the swap (NCS site)
    named_zero: bool = False # named 0 constant for loop starts (CVP site)
    dead_var: bool = False   # unused local (DCE site)
    builtin_sort: bool = False  # Difference: call Sort instead of manual loops
    element_at: bool = False    # read via ElementAt (API site)
    flag_loop: bool = False     # LinearSearch: flag-controlled while (CFR site)
    switch_form: bool = False   # VowelCheck: switch instead of if chain
    result_var: bool = False    # VowelCheck: accumulate into a local
    step_assign: bool = False   # write `i = i + 1` instead of `i += 1`


# role name pools; index [pool][role]
_POOLS: dict[str, list[dict[str, str]]] = {
    "sorting": [
        dict(a="a", n="n", i="i", j="j", t="t", u="u", z="zero", d="unused",
             f="flag", k="key"),
        dict(a="arr", n="len", i="outer", j="inner", t="tmp", u="tmp2",
             z="base", d="scratch", f="swapped", k="cur"),
        dict(a="data", n="size", i="pass1", j="pos", t="hold", u="hold2",
             z="start", d="extra", f="moved", k="val"),
        dict(a="items", n="count", i="round1", j="slot", t="carry", u="carry2",
             z="first", d="spare", k="elem", f="dirty"),
        dict(a="nums", n="total", i="row", j="col", t="left", u="right",
             z="nil", d="junk", f="again", k="probe"),
    ],
    "difference": [
        dict(a="a", b="b", n="n", i="i", j="j", t="temp1", u="temp2",
             z="zero", d="unused"),
        dict(a="arr", b="copy1", n="len", i="outer", j="inner", t="low",
             u="high", z="base", d="scratch"),
        dict(a="values", b="sorted1", n="size", i="step1", j="walk", t="a1",
             u="b1", z="start", d="extra"),
        dict(a="input1", b="work", n="count", i="p", j="q", t="tl", u="tr",
             z="first", d="spare"),
    ],
    "search": [
        dict(a="a", k="key", i="i", x="idx", f="found", lo="lo", hi="hi",
             m="mid", z="zero", d="unused"),
        dict(a="arr", k="target", i="pos", x="where", f="seen", lo="low",
             hi="high", m="middle", z="base", d="scratch"),
        dict(a="items", k="needle", i="cursor", x="spot", f="hit", lo="left",
             hi="right", m="center", z="start", d="extra"),
        dict(a="data", k="wanted", i="scan", x="place", f="done", lo="begin",
             hi="end", m="half", z="first", d="spare"),
    ],
    "aggregate": [
        dict(a="a", b="best", i="i", z="zero", d="unused"),
        dict(a="arr", b="acc", i="pos", z="base", d="scratch"),
        dict(a="nums", b="champ", i="walk", z="start", d="extra"),
        dict(a="values", b="pick", i="step1", z="first", d="spare"),
    ],
    "classify": [
        dict(c="c", r="r", d="unused"),
        dict(c="ch", r="result", d="scratch"),
        dict(c="letter", r="flagv", d="extra"),
        dict(c="sym", r="score", d="spare"),
    ],
}

_FNAMES: dict[str, list[str]] = {
    "Bubblesort": ["BubbleSort", "SortBubble", "BubbleArrange"],
    "Insertionsort": ["InsertionSort", "SortInsertion", "InsertArrange"],
    "Selectionsort": ["SelectionSort", "SortSelection", "SelectArrange"],
    "Flagsort": ["FlagSort", "SweepSort", "SortUntilClean"],
    "Difference": ["Difference", "RangeOf", "SpreadOf"],
    "LinearSearch": ["LinearSearch", "FindLinear", "ScanFor"],
    "BinarySearch": ["BinarySearch", "FindBinary", "BisectFor"],
    "MaxScan": ["MaxScan", "FindMax", "LargestOf"],
    "MinScan": ["MinScan", "FindMin", "SmallestOf"],
    "VowelCheck": ["VowelCheck", "IsVowel", "VowelScore"],
}


def pool_count(label: str) -> int:
    return len(_POOLS[LABELS[label].task])


# --- rendering -------------------------------------------------------------

class _W:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.depth = 0

    def line(self, text: str) -> None:
        self.lines.append("    " * self.depth + text)

    def open(self, head: str) -> None:
        self.line(head + " {")
        self.depth += 1

    def close(self, tail: str = "}") -> None:
        self.depth -= 1
        self.line(tail)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _perm(items: list[str], k: int) -> list[str]:
    perms = list(itertools.permutations(items))
    return list(perms[k % len(perms)])


def _zero(st: Style, names) -> str:
    return names["z"] if st.named_zero else "0"


def _incr(st: Style, v: str, delta: str = "1") -> str:
    return f"{v} = {v} + {delta};" if st.step_assign else f"{v} += {delta};"


def _hoist_prelude(w: _W, st: Style, decls: list[tuple[str, str]],
                   assigns: list[str]) -> None:
    """Bare declarations (permuted) followed by their assignments."""
    names = [f"{ty} {nm};" for ty, nm in decls]
    for line in _perm(names, st.decl_perm):
        w.line(line)
    for line in assigns:
        w.line(line)


def _counted_loop(w: _W, st: Style, var: str, start: str, cond: str,
                  body, declared: bool = False, step: str | None = None) -> None:
    """Counted ascending loop in the style's loop form."""
    stepper = step if step is not None else (
        f"{var} = {var} + 1" if st.step_assign else f"{var} += 1")
    if st.loop == "for":
        init = f"{var} = {start}" if declared else f"int {var} = {start}"
        w.open(f"for ({init}; {cond}; {stepper})")
        body()
        w.close()
    else:
        if declared:
            w.line(f"{var} = {start};")
        else:
            w.line(f"int {var} = {start};")
        w.open(f"while ({cond})")
        body()
        w.line(stepper + ";")
        w.close()


def _swap(w: _W, st: Style, names, arr: str, left: str, right: str) -> None:
    t, u = names["t"], names["u"]
    if st.two_temps:
        w.line(f"int {t} = {arr}[{left}];")
        w.line(f"int {u} = {arr}[{right}];")
        w.line(f"{arr}[{left}] = {u};")
        w.line(f"{arr}[{right}] = {t};")
    else:
        w.line(f"int {t} = {arr}[{left}];")
        w.line(f"{arr}[{left}] = {arr}[{right}];")
        w.line(f"{arr}[{right}] = {t};")


def _guarded_swap(w: _W, st: Style, names, arr: str, left: str, right: str,
                  bound: str) -> None:
    def swap_if():
        w.open(f"if ({arr}[{left}] > {arr}[{right}])")
        _swap(w, st, names, arr, left, right)
        w.close()

    if st.paranoid:
        w.open(f"if ({right} < {bound})")
        swap_if()
        w.close()
    else:
        swap_if()


def _read(st: Style, arr: str, idx: str) -> str:
    return f"ElementAt({arr}, {idx})" if st.element_at else f"{arr}[{idx}]"


def render(label: str, st: Style) -> str:
    names = _POOLS[LABELS[label].task][st.pool % pool_count(label)]
    fname = _FNAMES[label][st.fname % len(_FNAMES[label])]
    w = _W()
    _RENDERERS[label](w, st, names, fname)
    return w.text()


def _r_bubble(w: _W, st: Style, nm, fname: str) -> None:
    a, n, i, j = nm["a"], nm["n"], nm["i"], nm["j"]
    w.open(f"int[] {fname}(int[] {a})")
    decls = [("int", n), ("int", i)]
    if st.dead_var:
        decls.append(("int", nm["d"]))
    assigns = [f"{n} = Length({a});"]
    if st.named_zero:
        decls.append(("int", nm["z"]))
        assigns.append(f"{nm['z']} = 0;")
    if st.hoisted:
        _hoist_prelude(w, st, decls, assigns)
    else:
        w.line(f"int {n} = Length({a});")
        if st.named_zero:
            w.line(f"int {nm['z']} = 0;")
        if st.dead_var:
            w.line(f"int {nm['d']} = 0;")
    z = _zero(st, nm)

    def inner():
        def body():
            _guarded_swap(w, st, nm, a, j, f"{j} + 1", n)
        _counted_loop(w, st, j, z, f"{j} < {n} - {i} - 1", body)

    _counted_loop(w, st, i, z, f"{i} < {n}", inner, declared=st.hoisted)
    w.line(f"return {a};")
    w.close()


def _r_insertion(w: _W, st: Style, nm, fname: str) -> None:
    a, n, i, j, key = nm["a"], nm["n"], nm["i"], nm["j"], nm["k"]
    w.open(f"int[] {fname}(int[] {a})")
    if st.hoisted:
        decls = [("int", n), ("int", i)]
        if st.dead_var:
            decls.append(("int", nm["d"]))
        _hoist_prelude(w, st, decls, [f"{n} = Length({a});"])
    else:
        w.line(f"int {n} = Length({a});")
        if st.dead_var:
            w.line(f"int {nm['d']} = 0;")

    def body():
        w.line(f"int {key} = {a}[{i}];")
        w.line(f"int {j} = {i} - 1;")
        w.open(f"while ({j} >= 0 && {a}[{j}] > {key})")
        w.line(f"{a}[{j} + 1] = {a}[{j}];")
        w.line(f"{j} = {j} - 1;")
        w.close()
        w.line(f"{a}[{j} + 1] = {key};")

    _counted_loop(w, st, i, "1", f"{i} < {n}", body, declared=st.hoisted)
    w.line(f"return {a};")
    w.close()


def _r_selection(w: _W, st: Style, nm, fname: str) -> None:
    a, n, i, j, m = nm["a"], nm["n"], nm["i"], nm["j"], nm["k"]
    w.open(f"int[] {fname}(int[] {a})")
    if st.hoisted:
        decls = [("int", n), ("int", i)]
        if st.dead_var:
            decls.append(("int", nm["d"]))
        _hoist_prelude(w, st, decls, [f"{n} = Length({a});"])
    else:
        w.line(f"int {n} = Length({a});")
        if st.dead_var:
            w.line(f"int {nm['d']} = 0;")
    z = _zero(st, nm) if st.named_zero and not st.hoisted else "0"

    def body():
        w.line(f"int {m} = {i};")

        def scan():
            w.open(f"if ({a}[{j}] < {a}[{m}])")
            w.line(f"{m} = {j};")
            w.close()

        _counted_loop(w, st, j, f"{i} + 1", f"{j} < {n}", scan)
        _swap(w, st, nm, a, m, i)

    _counted_loop(w, st, i, z, f"{i} < {n} - 1", body, declared=st.hoisted)
    w.line(f"return {a};")
    w.close()


def _r_flagsort(w: _W, st: Style, nm, fname: str) -> None:
    a, n, j, flag = nm["a"], nm["n"], nm["j"], nm["f"]
    w.open(f"int[] {fname}(int[] {a})")
    if st.hoisted:
        decls = [("int", n)]
        if st.dead_var:
            decls.append(("int", nm["d"]))
        _hoist_prelude(w, st, decls, [f"{n} = Length({a});"])
    else:
        w.line(f"int {n} = Length({a});")
        if st.dead_var:
            w.line(f"int {nm['d']} = 0;")
    w.line(f"bool {flag} = true;")
    w.open(f"while ({flag})")
    w.line(f"{flag} = false;")
    step = f"{j} = {j} - 1" if st.step_assign else f"{j} += -1"
    if st.loop == "for":
        w.open(f"for (int {j} = {n} - 1; {j} >= 1; {step})")
    else:
        w.line(f"int {j} = {n} - 1;")
        w.open(f"while ({j} >= 1)")
    w.open(f"if ({a}[{j} - 1] > {a}[{j}])")
    t = nm["t"]
    w.line(f"int {t} = {a}[{j} - 1];")
    w.line(f"{a}[{j} - 1] = {a}[{j}];")
    w.line(f"{a}[{j}] = {t};")
    w.line(f"{flag} = true;")
    w.close()
    if st.loop != "for":
        w.line(step + ";")
    w.close()
    w.close()
    w.line(f"return {a};")
    w.close()


def _r_difference(w: _W, st: Style, nm, fname: str) -> None:
    a, b, n, i, j = nm["a"], nm["b"], nm["n"], nm["i"], nm["j"]
    w.open(f"int {fname}(int[] {a})")
    if st.guard:
        w.open(f"if (Length({a}) == 0)")
        w.line("return 0;")
        w.close()
    w.line(f"int[] {b} = {a};")
    if st.builtin_sort:
        w.line(f"Sort({b});")
    else:
        if st.hoisted:
            decls = [("int", n), ("int", i)]
            if st.dead_var:
                decls.append(("int", nm["d"]))
            _hoist_prelude(w, st, decls, [f"{n} = Length({b});"])
        else:
            w.line(f"int {n} = Length({b});")
            if st.dead_var:
                w.line(f"int {nm['d']} = 0;")

        def inner():
            def body():
                _guarded_swap(w, st, nm, b, j, f"{j} + 1", n)
            _counted_loop(w, st, j, "0", f"{j} < {n} - {i} - 1", body)

        _counted_loop(w, st, i, "0", f"{i} < {n}", inner, declared=st.hoisted)
    last = _read(st, b, f"Length({b}) - 1")
    first = _read(st, b, "0")
    w.line(f"return {last} - {first};")
    w.close()


def _r_linear_search(w: _W, st: Style, nm, fname: str) -> None:
    a, k, i = nm["a"], nm["k"], nm["i"]
    w.open(f"int {fname}(int[] {a}, int {k})")
    if st.guard:
        w.open(f"if (Length({a}) == 0)")
        w.line("return -2;")
        w.close()
    if st.flag_loop:
        x, flag = nm["x"], nm["f"]
        w.line(f"int {x} = -1;")
        w.line(f"int {i} = 0;")
        w.line(f"bool {flag} = false;")
        w.open(f"while (!{flag} && {i} < Length({a}))")
        w.open(f"if ({_read(st, a, i)} == {k})")
        w.line(f"{x} = {i};")
        w.line(f"{flag} = true;")
        w.close()
        w.open_else()
        w.line(_incr(st, i))
        w.close()
        w.close()
        w.line(f"return {x};")
    else:
        def body():
            w.open(f"if ({_read(st, a, i)} == {k})")
            w.line(f"return {i};")
            w.close()

        z = _zero(st, nm)
        if st.named_zero and not st.hoisted:
            w.line(f"int {nm['z']} = 0;")
        if st.hoisted:
            decls = [("int", i)]
            if st.dead_var:
                decls.append(("int", nm["d"]))
            _hoist_prelude(w, st, decls, [])
        _counted_loop(w, st, i, z, f"{i} < Length({a})", body,
                      declared=st.hoisted)
        w.line("return -1;")
    w.close()


def _r_binary_search(w: _W, st: Style, nm, fname: str) -> None:
    a, k, lo, hi, m = nm["a"], nm["k"], nm["lo"], nm["hi"], nm["m"]
    w.open(f"int {fname}(int[] {a}, int {k})")
    if st.guard:
        w.open(f"if (Length({a}) == 0)")
        w.line("return -2;")
        w.close()
    if st.hoisted:
        decls = [("int", lo), ("int", hi)]
        if st.dead_var:
            decls.append(("int", nm["d"]))
        _hoist_prelude(w, st, decls,
                       [f"{lo} = 0;", f"{hi} = Length({a}) - 1;"])
    else:
        w.line(f"int {lo} = 0;")
        w.line(f"int {hi} = Length({a}) - 1;")
        if st.dead_var:
            w.line(f"int {nm['d']} = 0;")
    w.open(f"while ({lo} <= {hi})")
    w.line(f"int {m} = ({lo} + {hi}) / 2;")
    read = _read(st, a, m)
    w.open(f"if ({read} == {k})")
    w.line(f"return {m};")
    w.close()
    w.open_else(f"if ({read} < {k})")
    w.line(f"{lo} = {m} + 1;")
    w.close()
    w.open_else()
    w.line(f"{hi} = {m} - 1;")
    w.close()
    w.close()
    w.line("return -1;")
    w.close()


def _r_scan(which: str):
    op = ">" if which == "max" else "<"

    def r(w: _W, st: Style, nm, fname: str) -> None:
        a, best, i = nm["a"], nm["b"], nm["i"]
        w.open(f"int {fname}(int[] {a})")
        if st.guard:
            w.open(f"if (Length({a}) == 0)")
            w.line("return -1;")
            w.close()
        if st.hoisted:
            decls = [("int", best), ("int", i)]
            if st.dead_var:
                decls.append(("int", nm["d"]))
            _hoist_prelude(w, st, decls, [f"{best} = {a}[0];"])
        else:
            w.line(f"int {best} = {a}[0];")
            if st.dead_var:
                w.line(f"int {nm['d']} = 0;")

        def body():
            w.open(f"if ({_read(st, a, i)} {op} {best})")
            w.line(f"{best} = {a}[{i}];")
            w.close()

        _counted_loop(w, st, i, "1", f"{i} < Length({a})", body,
                      declared=st.hoisted)
        w.line(f"return {best};")
        w.close()

    return r


_VOWELS = "aeiou"


def _r_vowel(w: _W, st: Style, nm, fname: str) -> None:
    c = nm["c"]
    w.open(f"int {fname}(char {c})")
    use_result = st.result_var or st.hoisted
    r = nm["r"]
    if use_result:
        if st.hoisted:
            decls = [("int", r)]
            if st.dead_var:
                decls.append(("int", nm["d"]))
            _hoist_prelude(w, st, decls, [f"{r} = 0;"])
        else:
            w.line(f"int {r} = 0;")
            if st.dead_var:
                w.line(f"int {nm['d']} = 0;")
    hit = f"{r} = 1;" if use_result else "return 1;"
    if st.switch_form:
        w.open(f"switch ({c})")
        for v in _VOWELS:
            w.line(f"case '{v}':")
            w.depth += 1
            w.line(hit)
            w.depth -= 1
        w.line("default:")
        w.depth += 1
        w.line(f"{r} = 0;" if use_result else "return 0;")
        w.depth -= 1
        w.close()
    elif st.paranoid:
        node = f"if ({c} == '{_VOWELS[0]}')"
        w.open(node)
        w.line(hit)
        w.close()
        for v in _VOWELS[1:]:
            w.open_else(f"if ({c} == '{v}')")
            w.line(hit)
            w.close()
    else:
        cond = " || ".join(f"{c} == '{v}'" for v in _VOWELS)
        w.open(f"if ({cond})")
        w.line(hit)
        w.close()
    w.line(f"return {r};" if use_result else "return 0;")
    w.close()


_RENDERERS = {
    "Bubblesort": _r_bubble,
    "Insertionsort": _r_insertion,
    "Selectionsort": _r_selection,
    "Flagsort": _r_flagsort,
    "Difference": _r_difference,
    "LinearSearch": _r_linear_search,
    "BinarySearch": _r_binary_search,
    "MaxScan": _r_scan("max"),
    "MinScan": _r_scan("min"),
    "VowelCheck": _r_vowel,
}


# --- style sampling --------------------------------------------------------

def draw_style(label: str, rng: random.Random) -> Style:
    ld = LABELS[label]
    st = Style(
        pool=rng.randrange(pool_count(label)),
        fname=rng.randrange(len(_FNAMES[label])),
        loop=rng.choice(("for", "while")),
        hoisted=rng.random() < 0.35,
        decl_perm=rng.randrange(6),
        two_temps=rng.random() < 0.4,
        paranoid=rng.random() < 0.3,
        named_zero=rng.random() < 0.3,
        dead_var=rng.random() < 0.3,
        step_assign=rng.random() < 0.4,
    )
    if ld.task in ("difference", "search", "aggregate"):
        st.guard = rng.random() < 0.5
    if label == "Difference":
        st.builtin_sort = rng.random() < 0.4
        st.element_at = rng.random() < 0.35
    if label in ("LinearSearch", "BinarySearch", "MaxScan", "MinScan"):
        st.element_at = rng.random() < 0.25
    if label == "LinearSearch":
        st.flag_loop = rng.random() < 0.4
        if st.flag_loop:
            st.hoisted = False
    if label == "VowelCheck":
        st.switch_form = rng.random() < 0.4
        st.result_var = rng.random() < 0.5
    return st


def witness_styles(label: str, rng: random.Random) -> list[Style]:
    """First four styles: a statement-permutation twin pair and an
    alpha-renaming twin pair."""
    base = draw_style(label, rng)
    base.hoisted = True
    base.dead_var = True
    base.decl_perm = 0
    if label == "LinearSearch":
        base.flag_loop = False
    twin = replace(base, decl_perm=1)
    second = draw_style(label, rng)
    second.hoisted = False
    renamed = replace(second, pool=(second.pool + 1) % pool_count(label))
    return [base, twin, second, renamed]


# --- input suites ----------------------------------------------------------

def _rand_array(rng: random.Random, size: int) -> list[int]:
    return [rng.randrange(0, 25) for _ in range(size)]


def task_suite(task: str, seed: int, guarded: bool) -> list[list]:
    """Argument vectors for one entry; guard-bearing variants also get
    the guard-triggering empty input."""
    rng = random.Random(f"suite:{seed}:{task}")
    if task == "sorting":
        suite = [[[]], [[7]], [[1, 2, 3, 4]], [[5, 4, 3, 2, 1]],
                 [[2, 2, 1, 3, 1]], [[3, 1, 2]]]
        suite += [[_rand_array(rng, rng.randrange(5, 9))] for _ in range(3)]
        return suite
    if task in ("difference", "aggregate"):
        suite = [[[9]], [[1, 2, 3, 4]], [[5, 4, 3, 2, 1]], [[2, 2, 1, 3, 1]]]
        suite += [[_rand_array(rng, rng.randrange(5, 9))] for _ in range(3)]
        if guarded:
            suite.insert(0, [[]])
        return suite
    if task == "search":
        arrays = [[1, 3, 5, 7], [2, 4, 6, 8, 10, 12], [5], [0, 1, 2, 3, 4, 5, 6, 7]]
        suite = []
        for arr in arrays:
            suite.append([list(arr), arr[0]])
            suite.append([list(arr), arr[-1]])
            suite.append([list(arr), 99])
        suite.append([[], 3])
        extra = sorted(set(_rand_array(rng, 7)))
        suite.append([extra, extra[len(extra) // 2]])
        suite.append([extra, -5])
        return suite
    if task == "classify":
        return [["a"], ["e"], ["i"], ["o"], ["u"], ["b"], ["k"], ["z"],
                ["q"], ["7"]]
    raise ValueError(f"unknown task {task!r}")
