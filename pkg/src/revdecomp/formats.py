"""Text formats: function specs, permutation specs and the REAL circuit subset.

Function spec::

    # comment
    vars 3
    tt 0x51                      (or)   anf x1*x2*x3 + x1 + 1

Bit ``a`` of the hex value is ``f(a)`` with ``x1`` on the least significant
bit of ``a``.

Permutation spec::

    perm 2
    0 3 2 1

REAL subset: only ``t<k>`` gates; ``-name`` is a negative control.  The
``.inputs`` entry of a free line is ``x<i>`` when it carries variable
``x_i``; ``-`` in ``.inputs``/``.outputs`` means "no label".
"""

from __future__ import annotations

import re
from typing import Union

from .boolfn import Anf, TruthTable, anf_from_tt, format_anf, parse_anf, tt_from_anf
from .circuit import Circuit, Line, MpmctGate, Permutation


class FormatError(ValueError):
    """Parse failure; ``lineno`` is 1-based or ``None`` when not tied to a line."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


# -- function specs ---------------------------------------------------------

FunctionSpec = Union[TruthTable, Anf]


def parse_function_spec(text: str) -> FunctionSpec:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty function spec")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "vars":
        raise FormatError(f"expected 'vars <n>', got {head!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"bad variable count {parts[1]!r}", lineno) from None
    if len(lines) != 2:
        raise FormatError("expected exactly one 'tt' or 'anf' line after 'vars'", lines[-1][0] if len(lines) > 2 else lineno)
    lineno, body = lines[1]
    kind, _, rest = body.partition(" ")
    rest = rest.strip()
    try:
        if kind == "tt":
            value = int(rest, 16)
            return TruthTable.from_int(n, value)
        if kind == "anf":
            return parse_anf(n, rest)
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None
    raise FormatError(f"expected 'tt' or 'anf', got {kind!r}", lineno)


def write_function_spec(f: FunctionSpec) -> str:
    if isinstance(f, TruthTable):
        return f"vars {f.n}\ntt {f.to_hex()}\n"
    return f"vars {f.n}\nanf {format_anf(f)}\n"


def as_truth_table(f: FunctionSpec) -> TruthTable:
    return f if isinstance(f, TruthTable) else tt_from_anf(f)


def as_anf(f: FunctionSpec) -> Anf:
    return f if isinstance(f, Anf) else anf_from_tt(f)


# -- permutation specs ------------------------------------------------------


def parse_permutation_spec(text: str) -> Permutation:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty permutation spec")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "perm":
        raise FormatError(f"expected 'perm <n>', got {head!r}", lineno)
    try:
        n = int(parts[1])
        images = [int(tok) for _, line in lines[1:] for tok in line.split()]
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None
    try:
        return Permutation(n, tuple(images))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_permutation_spec(p: Permutation) -> str:
    return f"perm {p.n}\n" + " ".join(map(str, p.images)) + "\n"


# -- REAL subset ------------------------------------------------------------

_GATE_RE = re.compile(r"t(\d+)$")
_VAR_RE = re.compile(r"x(\d+)$")
_HEADER_KEYS = (".version", ".numvars", ".variables", ".inputs", ".outputs", ".constants", ".garbage")


def write_real(c: Circuit) -> str:
    names = [ln.name for ln in c.lines]
    for name in names:
        if not name or name.startswith("-") or any(ch.isspace() for ch in name) or name.startswith("."):
            raise ValueError(f"line name {name!r} cannot be written to REAL")
    inputs = []
    for ln in c.lines:
        if ln.is_constant or ln.var is None:
            inputs.append("-")
        else:
            inputs.append(f"x{ln.var}")
    outputs = [ln.output if ln.output is not None else "-" for ln in c.lines]
    constants = "".join("-" if ln.constant is None else str(ln.constant) for ln in c.lines)
    garbage = "".join("1" if ln.garbage else "-" for ln in c.lines)
    out = [
        ".version 1.0",
        f".numvars {c.width}",
        ".variables " + " ".join(names),
        ".inputs " + " ".join(inputs),
        ".outputs " + " ".join(outputs),
        f".constants {constants}",
        f".garbage {garbage}",
        ".begin",
    ]
    for g in c.gates:
        ctrls = [("-" if j in g.neg_controls else "") + names[j] for j in sorted(g.controls)]
        out.append(f"t{g.num_controls + 1} " + " ".join(ctrls + [names[g.target]]))
    out.append(".end")
    return "\n".join(out) + "\n"


def read_real(text: str) -> Circuit:
    header: dict[str, tuple[int, list[str]]] = {}
    gates: list[MpmctGate] = []
    in_body = False
    ended = False
    names: list[str] = []
    index: dict[str, int] = {}
    for lineno, line in _content_lines(text):
        tokens = line.split()
        key = tokens[0]
        if ended:
            raise FormatError(f"content after .end: {line!r}", lineno)
        if not in_body:
            if key == ".begin":
                names, index = _check_header(header, lineno)
                in_body = True
            elif key in _HEADER_KEYS:
                if key in header:
                    raise FormatError(f"duplicate header {key}", lineno)
                header[key] = (lineno, tokens[1:])
            else:
                raise FormatError(f"unexpected header line {line!r}", lineno)
            continue
        if key == ".end":
            ended = True
            continue
        match = _GATE_RE.match(key)
        if not match:
            raise FormatError(f"unknown gate tag {key!r}", lineno)
        arity = int(match.group(1))
        operands = tokens[1:]
        if arity < 1 or len(operands) != arity:
            raise FormatError(f"gate {key} expects {arity} operands, got {len(operands)}", lineno)
        pos, neg = set(), set()
        for tok in operands[:-1]:
            negated = tok.startswith("-")
            name = tok[1:] if negated else tok
            if name not in index:
                raise FormatError(f"unknown line {name!r}", lineno)
            (neg if negated else pos).add(index[name])
        target = operands[-1]
        if target not in index:
            raise FormatError(f"unknown target line {target!r}", lineno)
        try:
            gates.append(MpmctGate(index[target], frozenset(pos), frozenset(neg)))
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
    if not in_body:
        raise FormatError("missing .begin")
    if not ended:
        raise FormatError("missing .end")
    lines = _build_lines(header, names)
    return Circuit(tuple(lines), tuple(gates))


def _check_header(header, lineno):
    if ".numvars" not in header or ".variables" not in header:
        raise FormatError(".numvars and .variables are required before .begin", lineno)
    nl, vals = header[".numvars"]
    if len(vals) != 1 or not vals[0].isdigit():
        raise FormatError("malformed .numvars", nl)
    width = int(vals[0])
    vl, names = header[".variables"]
    if len(names) != width:
        raise FormatError(f".variables lists {len(names)} lines but .numvars is {width}", vl)
    if len(set(names)) != len(names):
        raise FormatError("duplicate line names in .variables", vl)
    for key in (".inputs", ".outputs"):
        if key in header and len(header[key][1]) != width:
            raise FormatError(f"{key} lists {len(header[key][1])} entries, expected {width}", header[key][0])
    for key, alphabet in ((".constants", "01-"), (".garbage", "1-")):
        if key in header:
            kl, vals = header[key]
            if len(vals) != 1 or len(vals[0]) != width or set(vals[0]) - set(alphabet):
                raise FormatError(f"malformed {key}", kl)
    return names, {name: j for j, name in enumerate(names)}


def _build_lines(header, names):
    width = len(names)
    inputs = header.get(".inputs", (None, ["-"] * width))[1]
    outputs = header.get(".outputs", (None, ["-"] * width))[1]
    constants = header.get(".constants", (None, ["-" * width]))[1][0]
    garbage = header.get(".garbage", (None, ["-" * width]))[1][0]
    lines = []
    for j, name in enumerate(names):
        const = None if constants[j] == "-" else int(constants[j])
        var = None
        match = _VAR_RE.match(inputs[j])
        if const is None and match:
            var = int(match.group(1))
        out = None if outputs[j] == "-" else outputs[j]
        try:
            lines.append(Line(name, const, var, out, garbage[j] == "1"))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return lines
