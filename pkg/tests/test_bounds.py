from fractions import Fraction

import pytest

from revdecomp import bounds as B


def chain_oracle(n, k):
    """Unsimplified middle line of the inequality chain, in exact rationals."""
    m = n - k
    leaves = Fraction(2**k) * (Fraction(2**m - 1, 2) - 1)
    return (2**k - 1) + (2**m - m - 1) + leaves


def recurrence_by_linear_system(n):
    # alpha + 32 beta = 10, alpha + 16 beta = 4
    beta = Fraction(10 - 4, 32 - 16)
    alpha = 4 - 16 * beta
    return alpha + beta * 2**n


@pytest.mark.parametrize("n, expected", [(3, 17), (1, 1), (6, 321)])
def test_mmd_mct(n, expected):
    assert B.bound_mmd_mct(n) == expected


@pytest.mark.parametrize("n, expected", [(2, 4), (3, 13), (6, 264)])
def test_mmd_fredkin(n, expected):
    assert B.bound_mmd_fredkin(n) == expected


def test_mmd_fredkin_domain():
    with pytest.raises(ValueError):
        B.bound_mmd_fredkin(1)


@pytest.mark.parametrize("n, expected", [(1, 6), (3, 24), (8, 768)])
def test_bdd(n, expected):
    assert B.bound_bdd(n) == expected


def test_esop():
    assert (B.bound_esop_stg(8), B.bound_esop_total(8)) == (29, 435)
    assert (B.bound_esop_stg(10), B.bound_esop_total(10)) == (116, 2204)
    assert B.bound_esop_stg(7) is None and B.bound_esop_total(7) is None


def test_recurrence():
    assert B.bound_recurrence_closed(4) == B.bound_recurrence_iter(4) == 4
    assert B.bound_recurrence_closed(5) == B.bound_recurrence_iter(5) == 10
    assert B.bound_recurrence_closed(8) == 94
    for n in range(4, 21):
        assert B.bound_recurrence_iter(n) == B.bound_recurrence_closed(n) == recurrence_by_linear_system(n)
    with pytest.raises(ValueError):
        B.bound_recurrence_closed(3)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (6, 3, 31), (8, 4, 130)])
def test_decomp_single(n, k, expected):
    assert B.bound_decomp_single(n, k) == expected


def test_decomp_single_matches_chain():
    for n in range(2, 21):
        for k in range(1, n):
            assert B.bound_decomp_single(n, k) == chain_oracle(n, k)
    for n in range(4, 21, 2):
        assert B.bound_decomp_single(n, n // 2) == B.bound_decomp_single_closed(n)
    with pytest.raises(ValueError):
        B.bound_decomp_single(4, 4)
    with pytest.raises(ValueError):
        B.bound_decomp_single(4, 0)


@pytest.mark.parametrize("n, expected", [(4, 42), (8, 1950), (10, 9899)])
def test_decomp_total(n, expected):
    assert B.bound_decomp_total(n) == expected


def test_decomp_total_odd_undefined():
    assert B.bound_decomp_total(7) is None


def test_multiplicative_complexity():
    assert B.mc_lower(1) == 0
    assert B.mc_lower(3) == 2
    assert B.mc_random_upper(8) == 26
    with pytest.raises(ValueError):
        B.mc_random_upper(7)
    with pytest.raises(ValueError):
        B.mc_lower(0)


def test_fig3_rows():
    rows = {r.n: r for r in B.fig3_table(2, 12)}
    r8 = rows[8]
    assert (r8.mmd_mct, r8.bdd, r8.esop_total, r8.decomp_total) == (1793, 768, 435, 1950)
    assert (rows[6].mmd_mct, rows[6].decomp_total) == (321, 341)
    r3 = rows[3]
    assert r3.esop_stg is None and r3.esop_total is None and r3.decomp_single is None and r3.decomp_total is None
    for r in rows.values():
        assert (r.esop_total is not None) == (r.n >= 8)
        assert (r.decomp_total is not None) == (r.n % 2 == 0 and r.n >= 4)
        assert all(v > 0 for v in (r.mmd_mct, r.mmd_fredkin, r.bdd))


def test_fig3_csv_marks_undefined_as_empty():
    text = B.rows_to_csv(B.fig3_table(3, 3))
    header, row = text.strip().splitlines()
    assert header == "n,mmd_mct,mmd_fredkin,bdd,esop_stg,esop_total,nabilla_small,decomp_single,decomp_total"
    assert row == "3,17,13,24,,,,,"


def test_fig3_domain():
    with pytest.raises(ValueError):
        B.fig3_table(1, 4)
    with pytest.raises(ValueError):
        B.fig3_table(5, 4)
    with pytest.raises(ValueError):
        B.fig3_table(2, 33)


def test_ordering_claims():
    assert B.bound_decomp_total(6) > B.bound_mmd_mct(6)
    for n in (8, 10, 12):
        assert B.bound_decomp_total(n) > B.bound_esop_total(n)
    # small-n exception to the ordering
    assert B.bound_decomp_total(4) == 42 < B.bound_mmd_mct(4) == 49


def _increasing(fn, ns):
    values = [fn(n) for n in ns]
    return all(a < b for a, b in zip(values, values[1:]))


def test_calculators_increase():
    assert _increasing(B.bound_mmd_mct, range(1, 33))
    assert _increasing(B.bound_mmd_fredkin, range(2, 33))
    assert _increasing(B.bound_bdd, range(1, 33))
    assert _increasing(B.bound_esop_stg, range(8, 33))
    assert _increasing(B.bound_esop_total, range(8, 33))
    assert _increasing(B.bound_recurrence_closed, range(4, 33))
    assert _increasing(B.bound_decomp_total, range(4, 33, 2))
    assert _increasing(lambda n: B.bound_decomp_single(n, n // 2), range(4, 33, 2))
    assert _increasing(B.mc_random_upper, range(2, 33, 2))
    assert _increasing(B.mc_lower, range(1, 40))


def test_values_fit_64_bits():
    for row in B.fig3_table(2, 32):
        for v in vars(row).values():
            assert v is None or 0 <= v < 2**63
