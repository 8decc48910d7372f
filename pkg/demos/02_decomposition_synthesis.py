"""Minterm bank and the full decomposition-based synthesis of one function.

Run: python3 demos/02_decomposition_synthesis.py
"""

import numpy as np

from revdecomp.boolfn import TruthTable, parse_anf
from revdecomp.formats import write_real
from revdecomp.synth_decomp import build_minterm_bank, implementation_bound, synthesize_decomp

# The bank computes every product of two or more leaf variables once.
bank = build_minterm_bank((1, 2, 3))
print(f"bank over x1..x3: {len(bank.gates)} gates, {bank.circuit.width} lines")
print(write_real(bank.circuit))

f = parse_anf(3, "x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1")
circuit, report = synthesize_decomp(f)
print(f"f = {f}")
print(f"k={report.k}: {report.gates_measured} gates on {report.lines} lines "
      f"(bound {report.bound_impl}), output on line {circuit.lines[report.output_line].name}")
print(write_real(circuit))

# A random 10-variable function, split on five variables.
rng = np.random.default_rng(0)
g = TruthTable(10, rng.integers(0, 2, 1 << 10))
_, report = synthesize_decomp(g)
print(f"random n=10: {report.gates_measured} gates, implementation bound "
      f"{implementation_bound(10, 5)}, single-output bound {report.bound_paper}")
