import itertools

import numpy as np
import pytest

from oracles import all_gates, brute_permutation
from revdecomp.baselines import (
    SingleTargetGate,
    compose_stgs,
    esop_young_synthesize,
    mmd_synthesize,
    stg_to_mpmct,
    young_decompose,
)
from revdecomp.boolfn import Anf, parse_anf
from revdecomp.bounds import bound_mmd_mct
from revdecomp.circuit import Circuit, Permutation, metrics, permutation_of


def test_mmd_identity():
    for n in range(1, 5):
        assert mmd_synthesize(Permutation.identity(n)).gates == ()


def test_mmd_single_cnot_matches_brute_force():
    target = [0, 3, 2, 1]
    # every single-gate width-2 circuit, checked by enumeration
    hits = [g for g in all_gates(2) if brute_permutation(Circuit.on_inputs(2, [g])) == target]
    assert len(hits) == 1 and hits[0].kind == "cnot"
    c = mmd_synthesize(target)
    assert c.gates == (hits[0],)


def test_mmd_rejects_non_bijections():
    with pytest.raises(ValueError):
        mmd_synthesize([0, 0, 1, 2])


@pytest.mark.parametrize("n", [4, 5, 6])
def test_mmd_random_within_bound(n):
    rng = np.random.default_rng(n)
    for _ in range(500 if n < 6 else 200):
        p = Permutation.random(n, rng)
        c = mmd_synthesize(p)
        assert c.width == n
        assert permutation_of(c) == p
        assert len(c.gates) <= bound_mmd_mct(n)


def test_mmd_small_sweep_against_oracle():
    for perm in itertools.islice(itertools.permutations(range(8)), 0, 40320, 997):
        c = mmd_synthesize(perm)
        assert brute_permutation(c) == list(perm)


def test_young_identity_has_zero_controls():
    stgs = young_decompose(Permutation.identity(3))
    assert len(stgs) == 5
    assert all(g.is_trivial() for g in stgs)
    assert esop_young_synthesize(Permutation.identity(3)).gates == ()


def test_young_single_stg():
    stg = SingleTargetGate(3, parse_anf(3, "x1*x2"))
    p = stg.permutation()
    stgs = young_decompose(p)
    assert compose_stgs(stgs, 3) == p
    c = esop_young_synthesize(p)
    assert permutation_of(c) == p and len(c.gates) <= 3


def test_young_target_order_and_recomposition_random_n4():
    rng = np.random.default_rng(44)
    for _ in range(50):
        p = Permutation.random(4, rng)
        stgs = young_decompose(p)
        assert [g.target_var for g in stgs] == [1, 2, 3, 4, 3, 2, 1]
        assert compose_stgs(stgs, 4) == p


def test_young_exhaustive_n3_recomposition():
    for perm in itertools.permutations(range(8)):
        p = Permutation(3, perm)
        assert compose_stgs(young_decompose(p), 3) == p


@pytest.mark.parametrize("n", [2, 5, 6, 7])
def test_esop_young_random(n):
    rng = np.random.default_rng(70 + n)
    for _ in range(30):
        p = Permutation.random(n, rng)
        c = esop_young_synthesize(p)
        assert permutation_of(c) == p
        stats = metrics(c)
        assert stats.width == n and stats.ancilla_count == 0
        assert len(c.gates) == sum(len(g.control) for g in young_decompose(p))


def test_stg_rejects_own_target():
    with pytest.raises(ValueError):
        SingleTargetGate(1, parse_anf(2, "x1*x2"))


def test_stg_to_mpmct_examples():
    gates = stg_to_mpmct(SingleTargetGate(3, parse_anf(3, "x1*x2")))
    assert len(gates) == 1 and gates[0].kind == "toffoli"
    gates = stg_to_mpmct(SingleTargetGate(1, Anf.one(3)))
    assert len(gates) == 1 and gates[0].kind == "not"
    assert len(stg_to_mpmct(SingleTargetGate(1, parse_anf(3, "x2*x3 + x2 + 1")))) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_stg_expansion_matches_definition(n):
    rng = np.random.default_rng(n)
    for t in range(1, n + 1):
        others = [m for m in range(1 << n) if not m & (1 << (t - 1))]
        monos = frozenset(int(m) for m in rng.choice(others, size=min(len(others), 5), replace=False))
        stg = SingleTargetGate(t, Anf(n, monos))
        c = Circuit.on_inputs(n, stg_to_mpmct(stg))
        assert permutation_of(c) == stg.permutation()
