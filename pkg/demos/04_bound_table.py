"""Print the gate-count bound table and note where the decomposition bound wins or loses.

Run: python3 demos/04_bound_table.py
"""

from revdecomp.bounds import bound_decomp_total, bound_esop_total, bound_mmd_mct, fig3_table, rows_to_csv

print(rows_to_csv(fig3_table(2, 16)))

for n in (4, 6, 8, 10, 12):
    d, mmd, esop = bound_decomp_total(n), bound_mmd_mct(n), bound_esop_total(n)
    rival = f"ESOP {esop}" if esop is not None else f"MMD {mmd}"
    print(f"n={n:2d}: decomposition {d:6d} vs {rival}")
