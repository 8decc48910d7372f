"""Positive-Davio functional-decomposition synthesis into MCT circuits.

The function is divided by ``x_1, ..., x_k`` in turn, leaving ``2^k`` leaf
functions of the remaining ``m = n - k`` variables.  Every product of two or
more leaf variables is computed once on a zero-initialized bank line, each
leaf is XOR-assembled onto its own zero line, and the leaves are folded back
with one Toffoli per internal tree node.

Circuit layout: inputs ``x1..xn``, bank lines ``m_<mask>``, the optional
``a_all`` line (XOR of every non-constant leaf monomial), then leaf targets
``t_<path>``.  The result lands on ``t_0...0``, tagged as output ``f``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from itertools import combinations, product
from typing import Sequence

from .boolfn import Anf, TruthTable, anf_from_tt, divide_by_variable, popcount
from .bounds import bound_decomp_single
from .circuit import Circuit, CircuitBuilder, Line, MpmctGate, cnot, metrics, not_gate, toffoli


@dataclass(frozen=True)
class DecompPlan:
    n: int
    k: int
    split_vars: tuple[int, ...]
    leaf_vars: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.k < self.n:
            raise ValueError(f"decomposition depth must satisfy 0 <= k < n, got k={self.k}, n={self.n}")
        if len(self.split_vars) != self.k:
            raise ValueError("need exactly k split variables")
        if sorted(self.split_vars + self.leaf_vars) != list(range(1, self.n + 1)):
            raise ValueError("split and leaf variables must partition x1..xn")

    @property
    def m(self) -> int:
        return self.n - self.k


def default_plan(n: int, k: int | None = None) -> DecompPlan:
    """Split on ``x1..xk`` in index order; ``k`` defaults to ``n // 2``."""
    if k is None:
        k = n // 2
    return DecompPlan(n, k, tuple(range(1, k + 1)), tuple(range(k + 1, n + 1)))


@dataclass(frozen=True)
class DecompositionTree:
    """Leaves keyed by ``(i_1, ..., i_k)``; ``i_j = 1`` selects the quotient by ``split_vars[j-1]``."""

    plan: DecompPlan
    leaves: dict[tuple[int, ...], Anf]

    def recombine(self) -> Anf:
        level = dict(self.leaves)
        for j in range(self.plan.k, 0, -1):
            bit = 1 << (self.plan.split_vars[j - 1] - 1)
            nxt = {}
            for prefix in product((0, 1), repeat=j - 1):
                quotient, remainder = level[prefix + (1,)], level[prefix + (0,)]
                nxt[prefix] = Anf.from_terms(self.plan.n, [m | bit for m in quotient.monomials]) ^ remainder
            level = nxt
        return level[()]


def build_decomposition_tree(f: Anf, plan: DecompPlan) -> DecompositionTree:
    if f.n != plan.n:
        raise ValueError(f"plan is for {plan.n} variables, function has {f.n}")
    level = {(): f}
    for var in plan.split_vars:
        nxt = {}
        for path, g in level.items():
            quotient, remainder = divide_by_variable(g, var)
            nxt[path + (0,)] = remainder
            nxt[path + (1,)] = quotient
        level = nxt
    return DecompositionTree(plan, dict(sorted(level.items())))


@dataclass
class MintermBank:
    circuit: Circuit
    gates: tuple[MpmctGate, ...]
    leaf_vars: tuple[int, ...]
    input_line: dict[int, int]
    line_of: dict[int, int]
    all_xor_line: int | None = None

    @property
    def bank_lines(self) -> int:
        return len(self.line_of) + (self.all_xor_line is not None)

    def source_line(self, mask: int) -> int:
        """Line holding the product ``mask`` (a single variable is its input line)."""
        if popcount(mask) == 1:
            return self.input_line[mask.bit_length()]
        return self.line_of[mask]


def _leaf_masks(leaf_vars: Sequence[int]) -> list[int]:
    masks = []
    for size in range(2, len(leaf_vars) + 1):
        for combo in combinations(leaf_vars, size):
            masks.append(sum(1 << (v - 1) for v in combo))
    return masks


def build_minterm_bank(
    leaf_vars: Sequence[int], with_all_xor: bool = False, builder: CircuitBuilder | None = None
) -> MintermBank:
    """Compute every product of two or more of ``leaf_vars`` on fresh zero lines.

    One MCT gate per product: ``2^m - m - 1`` gates.  With ``with_all_xor``
    another line accumulates the XOR of all ``2^m - 1`` non-constant products
    using one CNOT each.  When ``builder`` is given its lines named ``x<i>``
    are used as inputs, otherwise a fresh circuit over ``leaf_vars`` is made.
    """
    leaf_vars = tuple(leaf_vars)
    if not leaf_vars:
        raise ValueError("need at least one leaf variable")
    if builder is None:
        builder = CircuitBuilder(Line(f"x{v}", var=v, output=f"x{v}") for v in leaf_vars)
    names = {ln.name: j for j, ln in enumerate(builder.lines)}
    input_line = {v: names[f"x{v}"] for v in leaf_vars}
    start = len(builder.gates)
    line_of = {}
    for mask in _leaf_masks(leaf_vars):
        line = builder.add_line(Line(f"m_{mask}", constant=0, garbage=True))
        line_of[mask] = line
        ctrls = frozenset(input_line[i + 1] for i in range(mask.bit_length()) if mask >> i & 1)
        builder.add(MpmctGate(line, ctrls))
    bank = MintermBank(None, (), leaf_vars, input_line, line_of)
    if with_all_xor:
        _add_all_xor(bank, builder)
    bank.gates = tuple(builder.gates[start:])
    bank.circuit = builder.build()
    return bank


def _add_all_xor(bank: MintermBank, builder: CircuitBuilder) -> None:
    line = builder.add_line(Line("a_all", constant=0, garbage=True))
    for v in bank.leaf_vars:
        builder.add(cnot(bank.input_line[v], line))
    for src in bank.line_of.values():
        builder.add(cnot(src, line))
    bank.all_xor_line = line


def leaf_cost(leaf: Anf, m: int, complement_available: bool) -> tuple[int, bool]:
    """Gate count of the cheaper assembly and whether it is the complement one.

    Direct assembly spends one gate per monomial.  Complement assembly copies
    the all-XOR line and cancels the non-constant monomials missing from the
    leaf; the constant term still costs a NOT.  Ties go to direct.
    """
    direct = len(leaf.monomials)
    if not complement_available:
        return direct, False
    nonconst = direct - (0 in leaf.monomials)
    complement = 1 + (2**m - 1 - nonconst) + (0 in leaf.monomials)
    if complement < direct:
        return complement, True
    return direct, False


def assemble_leaf(leaf: Anf, bank: MintermBank, target: int) -> list[MpmctGate]:
    """Gates XOR-ing ``leaf`` onto the zero-initialized ``target`` line."""
    allowed = sum(1 << (v - 1) for v in bank.leaf_vars)
    if leaf.support() & ~allowed:
        raise ValueError("leaf mentions a variable outside the bank's leaf variables")
    m = len(bank.leaf_vars)
    _, use_complement = leaf_cost(leaf, m, bank.all_xor_line is not None)
    gates = []
    if use_complement:
        gates.append(cnot(bank.all_xor_line, target))
        present = leaf.monomials
        missing = [v for v in bank.leaf_vars if (1 << (v - 1)) not in present]
        missing_lines = [bank.input_line[v] for v in missing]
        missing_lines += [line for mask, line in bank.line_of.items() if mask not in present]
        gates.extend(cnot(src, target) for src in missing_lines)
    else:
        for mask in leaf.sorted_terms():
            if mask:
                gates.append(cnot(bank.source_line(mask), target))
    if 0 in leaf.monomials:
        gates.append(not_gate(target))
    return gates


def combine(plan: DecompPlan, target_of: dict[tuple[int, ...], int], input_line: dict[int, int]) -> list[MpmctGate]:
    """Fold leaves bottom-up with ``Tof(x_j, f_p1, f_p0)``; ``2^k - 1`` gates.

    Node ``p`` of the tree lives on the target line of ``p`` padded with 0s.
    """
    gates = []
    k = plan.k
    for j in range(k, 0, -1):
        pad = (0,) * (k - j)
        ctrl = input_line[plan.split_vars[j - 1]]
        for prefix in product((0, 1), repeat=j - 1):
            hi = target_of[prefix + (1,) + pad]
            lo = target_of[prefix + (0,) + pad]
            gates.append(toffoli(ctrl, hi, lo))
    return gates


def implementation_bound(n: int, k: int) -> int:
    """Worst-case gate count of :func:`synthesize_decomp` for depth ``k``.

    Recombination, bank, all-XOR preamble and ``2^k`` leaves at
    ``2^(m-1) + 2`` gates each.
    """
    m = n - k
    return (2**k - 1) + (2**m - m - 1) + (2**m - 1) + 2**k * (2 ** (m - 1) + 2)


@dataclass(frozen=True)
class SynthesisReport:
    n: int
    k: int
    gates_measured: int
    bound_paper: int | None
    bound_impl: int
    lines: int
    ancilla: int
    garbage: int
    output_line: int

    @property
    def extra_lines(self) -> int:
        return self.lines - self.n

    def csv_row(self) -> list:
        return ["" if v is None else v for v in astuple(self)[:8]]


REPORT_HEADER = tuple(f.name for f in fields(SynthesisReport))[:8]


def report_csv(reports: Sequence[SynthesisReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def _path_name(path: tuple[int, ...]) -> str:
    return "t_" + ("".join(map(str, path)) if path else "root")


def synthesize_decomp(
    f: Anf | TruthTable, plan: DecompPlan | None = None, k: int | None = None
) -> tuple[Circuit, SynthesisReport]:
    """Synthesize a single-output function; returns the circuit and its report.

    ``bound_paper`` is the closed-form single-function bound, filled in only
    for even ``n`` at ``k = n/2``.
    """
    anf = anf_from_tt(f) if isinstance(f, TruthTable) else f
    n = anf.n
    if n < 1:
        raise ValueError("need at least one variable")
    if plan is None:
        plan = default_plan(n, k)
    elif k is not None and k != plan.k:
        raise ValueError("conflicting k and plan")

    builder = CircuitBuilder(Line(f"x{i}", var=i) for i in range(1, n + 1))
    input_line = {i: i - 1 for i in range(1, n + 1)}

    if anf.is_constant():
        out = builder.add_line(Line("f", constant=0, output="f"))
        if anf.monomials:
            builder.add(not_gate(out))
    else:
        tree = build_decomposition_tree(anf, plan)
        bank = build_minterm_bank(plan.leaf_vars, builder=builder)
        direct_total = sum(len(leaf) for leaf in tree.leaves.values())
        shared = (2**plan.m - 1) + sum(leaf_cost(leaf, plan.m, True)[0] for leaf in tree.leaves.values())
        if shared < direct_total:
            _add_all_xor(bank, builder)
        target_of = {}
        zero_path = (0,) * plan.k
        for path in tree.leaves:
            is_root = path == zero_path
            line = Line(_path_name(path), constant=0, output="f" if is_root else None, garbage=not is_root)
            target_of[path] = builder.add_line(line)
        for path, leaf in tree.leaves.items():
            builder.extend(assemble_leaf(leaf, bank, target_of[path]))
        builder.extend(combine(plan, target_of, input_line))
        out = target_of[zero_path]

    circuit = builder.build()
    stats = metrics(circuit)
    single = None
    if n % 2 == 0 and plan.k == n // 2 and plan.k >= 1:
        single = bound_decomp_single(n, plan.k)
    report = SynthesisReport(
        n=n,
        k=plan.k,
        gates_measured=stats.gate_count,
        bound_paper=single,
        bound_impl=implementation_bound(n, plan.k),
        lines=stats.width,
        ancilla=stats.ancilla_count,
        garbage=stats.garbage_count,
        output_line=out,
    )
    return circuit, report


def garbage_bound_check(report: SynthesisReport) -> bool:
    """Lines added on top of the inputs stay within ``2^(ceil(n/2) + 1) + n``."""
    n = report.n
    return report.extra_lines <= 2 ** (-(-n // 2) + 1) + n
