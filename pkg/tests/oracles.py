"""Brute-force reference implementations used as independent test oracles.

Nothing here calls the bit-sliced or butterfly code paths in the package.
"""

from itertools import product

from revdecomp.circuit import Circuit, Line, MpmctGate


def eval_monomials(monomials, assignment):
    """XOR over monomials of the AND of their variables."""
    value = 0
    for mask in monomials:
        if all(assignment >> i & 1 for i in range(mask.bit_length()) if mask >> i & 1):
            value ^= 1
    return value


def table_of(monomials, n):
    return [eval_monomials(monomials, a) for a in range(1 << n)]


def anf_by_subsets(bits, n):
    """Coefficient of monomial S is the XOR of f(T) over all T contained in S."""
    coeffs = set()
    for s in range(1 << n):
        acc = 0
        for t in range(s + 1):
            if t & s == t:
                acc ^= bits[t]
        if acc:
            coeffs.add(s)
    return coeffs


def run_gate_on_bits(bits, gate):
    """Gate on a list of 0/1 line values."""
    fire = all(bits[c] for c in gate.pos_controls) and not any(bits[c] for c in gate.neg_controls)
    out = list(bits)
    if fire:
        out[gate.target] ^= 1
    return out


def run_circuit_on_bits(circuit, bits):
    for g in circuit.gates:
        bits = run_gate_on_bits(bits, g)
    return bits


def bits_of(x, width):
    return [x >> j & 1 for j in range(width)]


def int_of(bits):
    return sum(b << j for j, b in enumerate(bits))


def brute_permutation(circuit):
    w = circuit.width
    return [int_of(run_circuit_on_bits(circuit, bits_of(a, w))) for a in range(1 << w)]


def brute_output_table(circuit, out_line, n):
    """Output line over all assignments, free lines fed by their variables, constants by their value."""
    table = []
    for a in range(1 << n):
        bits = []
        for ln in circuit.lines:
            if ln.constant is not None:
                bits.append(ln.constant)
            else:
                bits.append(a >> (ln.var - 1) & 1)
        table.append(run_circuit_on_bits(circuit, bits)[out_line])
    return table


def bank3_circuit():
    """The three-variable minterm circuit drawn gate by gate."""
    lines = [Line(f"x{i}", var=i) for i in (1, 2, 3)]
    lines += [Line(name, constant=0, output=name) for name in ("x1x2", "x1x3", "x2x3", "x1x2x3")]
    gates = [
        MpmctGate(3, frozenset({0, 1})),
        MpmctGate(4, frozenset({0, 2})),
        MpmctGate(5, frozenset({1, 2})),
        MpmctGate(6, frozenset({0, 1, 2})),
    ]
    return Circuit(tuple(lines), tuple(gates))


def combine_circuit():
    """One Toffoli with x1 and f1 as controls and f0 as target."""
    lines = (Line("x1", var=1), Line("f1", var=2), Line("f0", var=3, output="f"))
    return Circuit(lines, (MpmctGate(2, frozenset({0, 1})),))


def all_gates(width):
    """Every MPMCT gate on ``width`` lines."""
    gates = []
    for target in range(width):
        others = [j for j in range(width) if j != target]
        for roles in product((0, 1, 2), repeat=len(others)):
            pos = frozenset(j for j, r in zip(others, roles) if r == 1)
            neg = frozenset(j for j, r in zip(others, roles) if r == 2)
            gates.append(MpmctGate(target, pos, neg))
    return gates
