"""Comparison synthesizers for full reversible functions.

``mmd_synthesize`` is basic unidirectional transformation-based synthesis.
``esop_young_synthesize`` factors a permutation into ``2n - 1`` single-target
gates and expands each control function monomial by monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolfn import Anf, TruthTable, anf_from_tt
from .circuit import Circuit, MpmctGate, Permutation

MAX_PERM_VARS = 12


def _as_permutation(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    images = tuple(p)
    n = max(len(images) - 1, 0).bit_length()
    return Permutation(n, images)


def _ones(x: int) -> frozenset[int]:
    return frozenset(i for i in range(x.bit_length()) if x >> i & 1)


def mmd_synthesize(p: Permutation | Sequence[int]) -> Circuit:
    """Transformation-based synthesis, output side, rows in ascending order.

    Row ``i`` with current image ``y`` is fixed by first setting the bits of
    ``i`` missing from ``y`` (controls: the 1-bits of ``y``) and then clearing
    the extra bits (controls: the 1-bits of ``i``).  Neither step disturbs
    rows below ``i``.  All controls are positive.
    """
    p = _as_permutation(p)
    n = p.n
    if n > MAX_PERM_VARS:
        raise ValueError(f"permutation on {n} lines exceeds limit {MAX_PERM_VARS}")
    table = list(p.images)
    found: list[MpmctGate] = []

    def emit(g: MpmctGate):
        found.append(g)
        ctrl = 0
        for c in g.pos_controls:
            ctrl |= 1 << c
        flip = 1 << g.target
        for x in range(len(table)):
            if table[x] & ctrl == ctrl:
                table[x] ^= flip

    for i in range(1 << n):
        y = table[i]
        if y == i:
            continue
        for b in sorted(_ones(i & ~y)):
            emit(MpmctGate(b, _ones(table[i])))
        for b in sorted(_ones(table[i] & ~i)):
            emit(MpmctGate(b, _ones(i)))
    # gates were applied after p, so the circuit runs them in reverse
    return Circuit.on_inputs(n, reversed(found))


@dataclass(frozen=True)
class SingleTargetGate:
    """``x_target <- x_target ^ control(other variables)``; ``target_var`` is 1-based."""

    target_var: int
    control: Anf

    def __post_init__(self):
        if self.control.support() & (1 << (self.target_var - 1)):
            raise ValueError(f"control function mentions its own target x{self.target_var}")

    def apply(self, a: int) -> int:
        return a ^ (self.control(a) << (self.target_var - 1))

    def permutation(self) -> Permutation:
        n = self.control.n
        return Permutation(n, tuple(self.apply(a) for a in range(1 << n)))

    def is_trivial(self) -> bool:
        return not self.control.monomials


def _split_on(images: list[int], n: int, t: int) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Find swap patterns ``R``, ``L`` on bit ``t`` so that ``L . p . R`` keeps bit ``t``.

    Returns the two swap tables (indexed by assignment, symmetric in bit
    ``t``) and the images of ``L . p . R``.  Positions are two-colored along
    the cycles formed by the input pairs ``{y, y^e}`` and the output pairs
    ``{p^-1(b), p^-1(b^e)}``; a position's color is the bit-``t`` value
    ``R`` sends it to.  Each cycle starts at its smallest position, colored
    with its own bit (no swap), and is walked along the input pair first.
    """
    size = 1 << n
    e = 1 << t
    inverse = [0] * size
    for a, b in enumerate(images):
        inverse[b] = a
    color = [-1] * size
    for start in range(size):
        if color[start] >= 0:
            continue
        y, c = start, (start >> t) & 1
        while color[y] < 0:
            color[y] = c
            partner = y ^ e
            color[partner] = c ^ 1
            # output pair of the partner's image
            y = inverse[images[partner] ^ e]
            c = color[partner] ^ 1
    swap_r = np.array([color[y] != (y >> t) & 1 for y in range(size)], dtype=np.uint8)
    swap_l = np.zeros(size, dtype=np.uint8)
    for y in range(size):
        b = images[y]
        swap_l[b] = color[y] != (b >> t) & 1
    rest = [0] * size
    for a in range(size):
        y = a ^ (int(swap_r[a]) << t)
        b = images[y]
        rest[a] = b ^ (int(swap_l[b]) << t)
    return swap_r, swap_l, rest


def young_decompose(p: Permutation | Sequence[int]) -> list[SingleTargetGate]:
    """Factor ``p`` into ``2n - 1`` single-target gates, listed in application order.

    Targets run ``x1, x2, ..., xn, ..., x2, x1``.  Gates with a zero control
    function are kept; callers prune them.
    """
    p = _as_permutation(p)
    n = p.n
    if n > MAX_PERM_VARS:
        raise ValueError(f"permutation on {n} lines exceeds limit {MAX_PERM_VARS}")
    if n == 0:
        return []
    images = list(p.images)
    right: list[SingleTargetGate] = []
    left: list[SingleTargetGate] = []
    for t in range(n - 1):
        swap_r, swap_l, images = _split_on(images, n, t)
        right.append(SingleTargetGate(t + 1, anf_from_tt(TruthTable(n, swap_r))))
        left.append(SingleTargetGate(t + 1, anf_from_tt(TruthTable(n, swap_l))))
    last = n - 1
    middle = np.array([(images[a] ^ a) >> last & 1 for a in range(1 << n)], dtype=np.uint8)
    centre = SingleTargetGate(n, anf_from_tt(TruthTable(n, middle)))
    return right + [centre] + left[::-1]


def compose_stgs(gates: Sequence[SingleTargetGate], n: int) -> Permutation:
    images = []
    for a in range(1 << n):
        for g in gates:
            a = g.apply(a)
        images.append(a)
    return Permutation(n, tuple(images))


def stg_to_mpmct(g: SingleTargetGate) -> list[MpmctGate]:
    """One gate per control monomial, on lines ``x1..xn`` (line ``i-1`` is ``x_i``)."""
    target = g.target_var - 1
    out = []
    for mask in g.control.sorted_terms():
        ctrls = frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)
        out.append(MpmctGate(target, ctrls))
    return out


def esop_young_synthesize(p: Permutation | Sequence[int]) -> Circuit:
    """Ancilla-free circuit: Young-subgroup factors expanded monomial by monomial."""
    p = _as_permutation(p)
    gates = []
    for stg in young_decompose(p):
        if stg.is_trivial():
            continue
        gates.extend(stg_to_mpmct(stg))
    return Circuit.on_inputs(p.n, gates)
