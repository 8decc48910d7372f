"""Mixed-polarity multiple-control Toffoli gates, circuits and permutations.

Circuit states are integers with line ``j`` on bit ``j``.  Whole-table
simulation is bit-sliced: each line holds a Python integer whose bit ``a``
is the line's value on input assignment ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .boolfn import TruthTable

MAX_ENUM_WIDTH = 20


@dataclass(frozen=True)
class MpmctGate:
    """Flip ``target`` when every positive control is 1 and every negative control is 0."""

    target: int
    pos_controls: frozenset[int] = frozenset()
    neg_controls: frozenset[int] = frozenset()

    def __post_init__(self):
        pos = frozenset(self.pos_controls)
        neg = frozenset(self.neg_controls)
        object.__setattr__(self, "pos_controls", pos)
        object.__setattr__(self, "neg_controls", neg)
        if pos & neg or self.target in pos or self.target in neg:
            raise ValueError("target and control sets must be pairwise disjoint")
        if self.target < 0 or any(c < 0 for c in pos | neg):
            raise ValueError("line indices must be non-negative")

    @property
    def controls(self) -> frozenset[int]:
        return self.pos_controls | self.neg_controls

    @property
    def num_controls(self) -> int:
        return len(self.pos_controls) + len(self.neg_controls)

    @property
    def kind(self) -> str:
        if self.neg_controls:
            return "mpmct"
        return {0: "not", 1: "cnot", 2: "toffoli"}.get(len(self.pos_controls), "mct")

    def lines(self) -> frozenset[int]:
        return self.controls | {self.target}


def not_gate(target: int) -> MpmctGate:
    return MpmctGate(target)


def cnot(control: int, target: int) -> MpmctGate:
    return MpmctGate(target, frozenset({control}))


def toffoli(c1: int, c2: int, target: int) -> MpmctGate:
    return MpmctGate(target, frozenset({c1, c2}))


@dataclass(frozen=True)
class Line:
    """Line metadata.

    ``constant`` is ``None`` for a free input line, else the 0/1 value the
    line starts with.  ``var`` is the 1-based variable index an input line
    carries.  ``output`` names a primary output; ``garbage`` marks a line
    whose final value is discarded.
    """

    name: str
    constant: int | None = None
    var: int | None = None
    output: str | None = None
    garbage: bool = False

    def __post_init__(self):
        if self.constant not in (None, 0, 1):
            raise ValueError(f"line constant must be 0, 1 or None, got {self.constant!r}")
        if self.output is not None and self.garbage:
            raise ValueError(f"line {self.name!r} cannot be both output and garbage")

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


@dataclass(frozen=True)
class Circuit:
    lines: tuple[Line, ...]
    gates: tuple[MpmctGate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "gates", tuple(self.gates))
        width = len(self.lines)
        for idx, g in enumerate(self.gates):
            if max(g.lines()) >= width:
                raise ValueError(f"gate {idx} references a line outside width {width}")
        names = [ln.name for ln in self.lines]
        if len(set(names)) != len(names):
            raise ValueError("line names must be unique")

    @classmethod
    def on_inputs(cls, n: int, gates: Iterable[MpmctGate] = ()) -> Circuit:
        """Circuit over free lines ``x1..xn`` that are also the outputs."""
        lines = tuple(Line(f"x{i}", var=i, output=f"x{i}") for i in range(1, n + 1))
        return cls(lines, tuple(gates))

    @property
    def width(self) -> int:
        return len(self.lines)

    def line_index(self, name: str) -> int:
        for j, ln in enumerate(self.lines):
            if ln.name == name:
                return j
        raise KeyError(name)

    def inverse(self) -> Circuit:
        return Circuit(self.lines, self.gates[::-1])

    def with_gates(self, gates: Iterable[MpmctGate]) -> Circuit:
        return Circuit(self.lines, tuple(gates))

    def constant_mask(self) -> int:
        return sum(ln.constant << j for j, ln in enumerate(self.lines) if ln.constant)

    def free_lines(self) -> list[int]:
        return [j for j, ln in enumerate(self.lines) if not ln.is_constant]


class CircuitBuilder:
    """Mutable accumulator used by the synthesis routines."""

    def __init__(self, lines: Iterable[Line] = ()):
        self.lines: list[Line] = list(lines)
        self.gates: list[MpmctGate] = []

    def add_line(self, line: Line) -> int:
        self.lines.append(line)
        return len(self.lines) - 1

    def add(self, gate: MpmctGate) -> None:
        self.gates.append(gate)

    def extend(self, gates: Iterable[MpmctGate]) -> None:
        self.gates.extend(gates)

    def build(self) -> Circuit:
        return Circuit(tuple(self.lines), tuple(self.gates))


def apply_gate(state: int, g: MpmctGate) -> int:
    for c in g.pos_controls:
        if not state >> c & 1:
            return state
    for c in g.neg_controls:
        if state >> c & 1:
            return state
    return state ^ (1 << g.target)


def simulate(c: Circuit, state: int) -> int:
    """Run ``c`` on one input pattern; constant lines must hold their declared value."""
    if state < 0 or state >> c.width:
        raise ValueError(f"state {state} does not fit width {c.width}")
    for j, ln in enumerate(c.lines):
        if ln.is_constant and (state >> j & 1) != ln.constant:
            raise ValueError(f"line {j} ({ln.name}) is constant {ln.constant} but input sets it to {state >> j & 1}")
    for g in c.gates:
        state = apply_gate(state, g)
    return state


def simulate_sliced(gates: Iterable[MpmctGate], values: Sequence[int], full: int) -> list[int]:
    """Bit-sliced simulation.

    ``values[j]`` packs line ``j`` over a batch of inputs; ``full`` is the
    all-ones mask of the batch.
    """
    vals = list(values)
    for g in gates:
        cond = full
        for c in g.pos_controls:
            cond &= vals[c]
        for c in g.neg_controls:
            cond &= ~vals[c]
        vals[g.target] ^= cond & full
    return vals


def _projection_slices(count: int) -> list[int]:
    """Slice ``i`` has bit ``a`` set iff bit ``i`` of ``a`` is set, over ``2**count`` inputs."""
    slices = []
    size = 1 << count
    for i in range(count):
        block = ((1 << (1 << i)) - 1) << (1 << i)
        period = 1 << (i + 1)
        reps = size // period
        # doubling instead of a Python loop over reps
        pattern = block
        done = 1
        while done < reps:
            pattern |= pattern << (period * done)
            done *= 2
        slices.append(pattern & ((1 << size) - 1))
    return slices


def _drive_free_lines(c: Circuit, free: list[int]) -> tuple[list[int], int]:
    full = (1 << (1 << len(free))) - 1
    values = [full if ln.constant == 1 else 0 for ln in c.lines]
    for j, s in zip(free, _projection_slices(len(free))):
        values[j] = s
    return values, full


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``{0, ..., 2**n - 1}``."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        size = 1 << self.n
        if len(images) != size:
            raise ValueError(f"permutation on {self.n} lines needs {size} images, got {len(images)}")
        if sorted(images) != list(range(size)):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> Permutation:
        return cls(n, tuple(rng.permutation(1 << n).tolist()))

    def __call__(self, a: int) -> int:
        return self.images[a]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for a, b in enumerate(self.images):
            inv[b] = a
        return Permutation(self.n, tuple(inv))

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(self.n, tuple(other.images[b] for b in self.images))

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.images))


def permutation_of(c: Circuit) -> Permutation:
    """Permutation realized on all ``2**width`` patterns, constant declarations ignored."""
    if c.width > MAX_ENUM_WIDTH:
        raise ValueError(f"width {c.width} exceeds enumeration limit {MAX_ENUM_WIDTH}")
    w = c.width
    full = (1 << (1 << w)) - 1
    vals = simulate_sliced(c.gates, _projection_slices(w), full)
    size = 1 << w
    images = np.zeros(size, dtype=np.int64)
    for j, v in enumerate(vals):
        raw = v.to_bytes((size + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
        images |= bits.astype(np.int64) << j
    return Permutation(w, tuple(images.tolist()))


@dataclass
class VerificationReport:
    correct: bool
    ancilla_ok: bool
    garbage_count: int
    gate_count: int
    line_count: int
    first_mismatch: int | None = None
    unrestored: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.correct and self.ancilla_ok

    def as_text(self) -> str:
        rows = [
            f"correct={str(self.correct).lower()}",
            f"ancilla_ok={str(self.ancilla_ok).lower()}",
            f"garbage_count={self.garbage_count}",
            f"gate_count={self.gate_count}",
            f"line_count={self.line_count}",
        ]
        if self.first_mismatch is not None:
            rows.append(f"first_mismatch={self.first_mismatch}")
        return "\n".join(rows)


def verify_realizes(c: Circuit, f: TruthTable, out_line: int) -> VerificationReport:
    """Check that ``out_line`` computes ``f`` with every untagged constant line restored.

    Free lines must carry exactly the variables ``x1..xn`` of ``f``.
    """
    if not 0 <= out_line < c.width:
        raise ValueError(f"output line {out_line} outside width {c.width}")
    free = c.free_lines()
    vars_ = [c.lines[j].var for j in free]
    if None in vars_ or sorted(vars_) != list(range(1, f.n + 1)):
        raise ValueError(f"free lines carry variables {vars_}, expected x1..x{f.n} once each")
    ordered = [j for _, j in sorted(zip(vars_, free))]
    values, full = _drive_free_lines(c, ordered)
    final = simulate_sliced(c.gates, values, full)
    diff = final[out_line] ^ f.to_int()
    first = (diff & -diff).bit_length() - 1 if diff else None
    unrestored = [
        j
        for j, ln in enumerate(c.lines)
        if ln.is_constant and j != out_line and ln.output is None and not ln.garbage and final[j] != values[j]
    ]
    return VerificationReport(
        correct=diff == 0,
        ancilla_ok=not unrestored,
        garbage_count=sum(ln.garbage for ln in c.lines),
        gate_count=len(c.gates),
        line_count=c.width,
        first_mismatch=first,
        unrestored=unrestored,
    )


@dataclass(frozen=True)
class Metrics:
    gate_count: int
    max_controls: int
    width: int
    ancilla_count: int
    garbage_count: int


def metrics(c: Circuit) -> Metrics:
    """Cost figures; an ancilla is an untagged constant line restored on every input."""
    free = c.free_lines()
    candidates = [j for j, ln in enumerate(c.lines) if ln.is_constant and ln.output is None and not ln.garbage]
    ancillas = 0
    if candidates:
        if len(free) > MAX_ENUM_WIDTH:
            raise ValueError(f"{len(free)} free lines exceed enumeration limit {MAX_ENUM_WIDTH}")
        values, full = _drive_free_lines(c, free)
        final = simulate_sliced(c.gates, values, full)
        ancillas = sum(final[j] == values[j] for j in candidates)
    return Metrics(
        gate_count=len(c.gates),
        max_controls=max((g.num_controls for g in c.gates), default=0),
        width=c.width,
        ancilla_count=ancillas,
        garbage_count=sum(ln.garbage for ln in c.lines),
    )
