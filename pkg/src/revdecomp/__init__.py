"""Reversible-logic synthesis by positive-Davio functional decomposition.

Also provides transformation-based and Young-subgroup/ESOP baselines, exact
circuit simulation, and closed-form gate-count bounds.
"""

from .baselines import (
    SingleTargetGate,
    compose_stgs,
    esop_young_synthesize,
    mmd_synthesize,
    stg_to_mpmct,
    young_decompose,
)
from .boolfn import (
    Anf,
    DecompositionParts,
    TruthTable,
    anf_from_tt,
    cofactor,
    decompose,
    degree,
    divide_by_variable,
    evaluate,
    recompose,
    tt_from_anf,
)
from .bounds import BoundRow, fig3_table
from .circuit import (
    Circuit,
    CircuitBuilder,
    Line,
    MpmctGate,
    Permutation,
    apply_gate,
    metrics,
    permutation_of,
    simulate,
    verify_realizes,
)
from .formats import read_real, write_real
from .synth_decomp import (
    DecompPlan,
    build_decomposition_tree,
    build_minterm_bank,
    default_plan,
    garbage_bound_check,
    implementation_bound,
    synthesize_decomp,
)

__version__ = "0.1.0"
