"""Single-output Boolean functions as truth tables and in algebraic normal form.

Assignments are encoded as integers with variable ``x_i`` on bit ``i - 1``
(``x1`` is the least significant bit).  ANF monomials use the same encoding:
a monomial is the mask of the variables it multiplies, and mask ``0`` is the
constant term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_VARS = 16

SHANNON = "shannon"
POSITIVE_DAVIO = "positive-davio"
NEGATIVE_DAVIO = "negative-davio"
VARIANTS = (SHANNON, POSITIVE_DAVIO, NEGATIVE_DAVIO)


def popcount(x: int) -> int:
    return bin(x).count("1")


def _check_nvars(n: int) -> None:
    if not 0 <= n <= MAX_VARS:
        raise ValueError(f"variable count must be in [0, {MAX_VARS}], got {n}")


def _check_var(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"variable index x{i} out of range for {n} variables")


def _moebius(bits: np.ndarray, n: int) -> np.ndarray:
    # GF(2) butterfly; the transform is its own inverse
    out = np.array(bits, dtype=np.uint8, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return out


class TruthTable:
    """Truth table of an ``n``-variable function; ``bits[a]`` is ``f(a)``."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: Iterable[int]):
        _check_nvars(n)
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"truth table for {n} variables needs {1 << n} bits, got {arr.size}")
        if np.any(arr > 1):
            raise ValueError("truth table entries must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.bits = arr

    @classmethod
    def from_int(cls, n: int, value: int) -> TruthTable:
        """Table whose bit ``a`` is bit ``a`` of ``value``."""
        _check_nvars(n)
        size = 1 << n
        if value < 0 or value >> size:
            raise ValueError(f"value does not fit in {size} bits")
        raw = value.to_bytes((size + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
        return cls(n, bits)

    @classmethod
    def from_callable(cls, n: int, fn) -> TruthTable:
        return cls(n, [int(bool(fn(a))) for a in range(1 << n)])

    @classmethod
    def constant(cls, n: int, value: int) -> TruthTable:
        return cls(n, np.full(1 << n, value & 1, dtype=np.uint8))

    @classmethod
    def projection(cls, n: int, i: int) -> TruthTable:
        _check_var(n, i)
        return cls(n, (np.arange(1 << n) >> (i - 1)) & 1)

    def to_int(self) -> int:
        return int.from_bytes(np.packbits(self.bits, bitorder="little").tobytes(), "little")

    def to_hex(self) -> str:
        return hex(self.to_int())

    def __call__(self, a: int) -> int:
        return int(self.bits[a])

    def __xor__(self, other: TruthTable) -> TruthTable:
        if self.n != other.n:
            raise ValueError("variable counts differ")
        return TruthTable(self.n, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, {self.to_hex()})"


@dataclass(frozen=True)
class Anf:
    """XOR of monomials, each given as a variable mask (``0`` is the constant 1)."""

    n: int
    monomials: frozenset[int]

    def __post_init__(self):
        _check_nvars(self.n)
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        limit = 1 << self.n
        for m in self.monomials:
            if not 0 <= m < limit:
                raise ValueError(f"monomial mask {m:#b} out of range for {self.n} variables")

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[int]) -> Anf:
        """Build from a term list where repeated terms cancel pairwise."""
        acc: set[int] = set()
        for t in terms:
            acc ^= {t}
        return cls(n, frozenset(acc))

    @classmethod
    def zero(cls, n: int) -> Anf:
        return cls(n, frozenset())

    @classmethod
    def one(cls, n: int) -> Anf:
        return cls(n, frozenset({0}))

    @classmethod
    def parse(cls, n: int, text: str) -> Anf:
        return parse_anf(n, text)

    def __xor__(self, other: Anf) -> Anf:
        if self.n != other.n:
            raise ValueError("variable counts differ")
        return Anf(self.n, self.monomials ^ other.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __call__(self, assignment: int) -> int:
        return evaluate(self, assignment)

    def support(self) -> int:
        """Mask of the variables that appear in some monomial."""
        s = 0
        for m in self.monomials:
            s |= m
        return s

    def is_constant(self) -> bool:
        return self.monomials <= {0}

    def sorted_terms(self) -> list[int]:
        return sorted(self.monomials, key=_term_key)

    def __str__(self) -> str:
        return format_anf(self)


def _term_key(mask: int):
    return (-popcount(mask), [i for i in range(mask.bit_length()) if mask >> i & 1])


def format_anf(f: Anf) -> str:
    """Render as e.g. ``x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1``; the zero function is ``0``."""
    if not f.monomials:
        return "0"
    parts = []
    for m in f.sorted_terms():
        if m == 0:
            parts.append("1")
        else:
            parts.append("*".join(f"x{i + 1}" for i in range(m.bit_length()) if m >> i & 1))
    return " + ".join(parts)


_VAR_RE = re.compile(r"x(\d+)$")


def parse_anf(n: int, text: str) -> Anf:
    """Parse the ``+``/``*`` ANF syntax produced by :func:`format_anf`.

    Repeated monomials cancel, repeated variables inside a monomial are
    idempotent, and ``0`` terms are ignored.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty ANF expression")
    terms = []
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ValueError(f"empty term in ANF expression {text!r}")
        if term == "0":
            continue
        mask = 0
        for factor in term.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            match = _VAR_RE.match(factor)
            if not match:
                raise ValueError(f"bad factor {factor!r} in ANF expression")
            i = int(match.group(1))
            _check_var(n, i)
            mask |= 1 << (i - 1)
        terms.append(mask)
    return Anf.from_terms(n, terms)


def anf_from_tt(tt: TruthTable) -> Anf:
    coeffs = _moebius(tt.bits, tt.n)
    return Anf(tt.n, frozenset(np.flatnonzero(coeffs).tolist()))


def tt_from_anf(anf: Anf) -> TruthTable:
    coeffs = np.zeros(1 << anf.n, dtype=np.uint8)
    if anf.monomials:
        coeffs[list(anf.monomials)] = 1
    return TruthTable(anf.n, _moebius(coeffs, anf.n))


def evaluate(anf: Anf, assignment: int) -> int:
    if not 0 <= assignment < (1 << anf.n):
        raise ValueError(f"assignment {assignment} out of range for {anf.n} variables")
    value = 0
    for m in anf.monomials:
        if m & assignment == m:
            value ^= 1
    return value


def degree(f: Anf) -> int:
    return max((popcount(m) for m in f.monomials), default=0)


def cofactor(f: Anf, i: int, polarity: int) -> Anf:
    """Cofactor of ``f`` at ``x_i = polarity``.

    Polarity 2 gives ``f_{x_i=0} ^ f_{x_i=1}`` (the Boolean derivative).
    The result keeps the ``n``-variable index space with ``x_i`` absent.
    """
    _check_var(f.n, i)
    bit = 1 << (i - 1)
    if polarity == 0:
        return Anf(f.n, frozenset(m for m in f.monomials if not m & bit))
    if polarity == 1:
        return Anf.from_terms(f.n, (m & ~bit for m in f.monomials))
    if polarity == 2:
        return Anf(f.n, frozenset(m & ~bit for m in f.monomials if m & bit))
    raise ValueError(f"polarity must be 0, 1 or 2, got {polarity}")


@dataclass(frozen=True)
class DecompositionParts:
    variant: str
    pivot: int
    part0: Anf
    part1: Anf


def decompose(f: Anf, i: int, variant: str) -> DecompositionParts:
    """Split ``f`` on ``x_i``.

    ========================  ==================  ==================
    variant                   part0               part1
    ========================  ==================  ==================
    ``shannon``               ``f_{x_i=0}``       ``f_{x_i=1}``
    ``positive-davio``        ``f_{x_i=0}``       ``f_{x_i=2}``
    ``negative-davio``        ``f_{x_i=1}``       ``f_{x_i=2}``
    ========================  ==================  ==================
    """
    if variant == SHANNON:
        p0, p1 = cofactor(f, i, 0), cofactor(f, i, 1)
    elif variant == POSITIVE_DAVIO:
        p0, p1 = cofactor(f, i, 0), cofactor(f, i, 2)
    elif variant == NEGATIVE_DAVIO:
        p0, p1 = cofactor(f, i, 1), cofactor(f, i, 2)
    else:
        raise ValueError(f"unknown decomposition variant {variant!r}")
    return DecompositionParts(variant, i, p0, p1)


def _times_literal(g: Anf, bit: int, negated: bool) -> Anf:
    terms = [m | bit for m in g.monomials]
    if negated:
        terms += list(g.monomials)
    return Anf.from_terms(g.n, terms)


def recompose(parts: DecompositionParts, n: int | None = None) -> Anf:
    """Inverse of :func:`decompose`."""
    p0, p1 = parts.part0, parts.part1
    n = p0.n if n is None else n
    bit = 1 << (parts.pivot - 1)
    if parts.variant == SHANNON:
        return _times_literal(p0, bit, True) ^ _times_literal(p1, bit, False)
    if parts.variant == POSITIVE_DAVIO:
        return p0 ^ _times_literal(p1, bit, False)
    if parts.variant == NEGATIVE_DAVIO:
        return p0 ^ _times_literal(p1, bit, True)
    raise ValueError(f"unknown decomposition variant {parts.variant!r}")


def divide_by_variable(f: Anf, i: int) -> tuple[Anf, Anf]:
    """Return ``(quotient, remainder)`` with ``f = x_i*quotient ^ remainder``."""
    parts = decompose(f, i, POSITIVE_DAVIO)
    return parts.part1, parts.part0
