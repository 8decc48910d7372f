"""Closed-form gate-count bounds for reversible synthesis methods.

Undefined values (a formula evaluated outside its stated domain) are
``None`` and serialize as empty CSV cells.
"""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields

MAX_N = 32


def _check_n(n: int, lo: int) -> None:
    if not lo <= n <= MAX_N:
        raise ValueError(f"n must be in [{lo}, {MAX_N}], got {n}")


def bound_mmd_mct(n: int) -> int:
    """Transformation-based synthesis over MPMCT gates: ``(n-1) 2^n + 1``."""
    _check_n(n, 1)
    return (n - 1) * 2**n + 1


def bound_mmd_fredkin(n: int) -> int:
    """Transformation-based synthesis over MPMCT plus Fredkin gates: ``(n-2) 2^n + 2 + n``."""
    _check_n(n, 2)
    return (n - 2) * 2**n + 2 + n


def bound_bdd(n: int) -> int:
    _check_n(n, 1)
    return 3 * 2**n


def bound_esop_stg(n: int) -> int | None:
    """MPMCT gates per single-target gate, ``29 * 2^(n-8)``; ``None`` below n = 8."""
    _check_n(n, 1)
    if n < 8:
        return None
    return 29 * 2 ** (n - 8)


def bound_esop_total(n: int) -> int | None:
    stg = bound_esop_stg(n)
    return None if stg is None else stg * (2 * n - 1)


def bound_recurrence_closed(n: int) -> int:
    """``3 * 2^(n-3) - 2``, the solution of ``f(n) = 2 f(n-1) + 2`` with ``f(4) = 4``."""
    _check_n(n, 4)
    return 3 * 2 ** (n - 3) - 2


def bound_recurrence_iter(n: int) -> int:
    _check_n(n, 4)
    value = 4
    for _ in range(5, n + 1):
        value = 2 * value + 2
    return value


def bound_decomp_single(n: int, k: int) -> int:
    """MCT gates for one function after ``k`` positive-Davio steps.

    ``(2^k - 1) + (2^(n-k) - (n-k) - 1) + 2^(n-1) - 3 * 2^(k-1)``: the
    recombination gadgets, the minterm bank over the remaining variables and
    the XOR assembly of the ``2^k`` leaves.
    """
    _check_n(n, 2)
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n, got k={k}, n={n}")
    m = n - k
    # 3 * 2^(k-1) stays integral because k >= 1
    return (2**k - 1) + (2**m - m - 1) + 2 ** (n - 1) - 3 * 2 ** (k - 1)


def bound_decomp_single_closed(n: int) -> int:
    """``2^(n-1) + 2^(n/2-1) - n/2 - 2`` for even n."""
    _check_n(n, 2)
    if n % 2:
        raise ValueError(f"defined for even n only, got {n}")
    h = n // 2
    return 2 ** (n - 1) + 2 ** (h - 1) - h - 2


def bound_decomp_total(n: int) -> int | None:
    """``(2n - 1)`` single-target gates, each at the decomposition bound; ``None`` for odd n."""
    _check_n(n, 2)
    if n % 2 or n < 4:
        return None
    return (2 * n - 1) * bound_decomp_single(n, n // 2)


def mc_lower(d: int) -> int:
    """Multiplicative complexity lower bound for degree ``d``."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return d - 1


def mc_random_upper(n: int) -> int:
    """Multiplicative complexity upper bound for a random function, even n."""
    _check_n(n, 2)
    if n % 2:
        raise ValueError(f"defined for even n only, got {n}")
    return 2 ** (n // 2 + 1) - n // 2 - 2


@dataclass(frozen=True)
class BoundRow:
    n: int
    mmd_mct: int
    mmd_fredkin: int
    bdd: int
    esop_stg: int | None
    esop_total: int | None
    nabilla_small: int | None
    decomp_single: int | None
    decomp_total: int | None


CSV_HEADER = tuple(f.name for f in fields(BoundRow))


def bound_row(n: int) -> BoundRow:
    _check_n(n, 2)
    even = n % 2 == 0 and n >= 4
    return BoundRow(
        n=n,
        mmd_mct=bound_mmd_mct(n),
        mmd_fredkin=bound_mmd_fredkin(n),
        bdd=bound_bdd(n),
        esop_stg=bound_esop_stg(n),
        esop_total=bound_esop_total(n),
        nabilla_small=bound_recurrence_closed(n) if n >= 4 else None,
        decomp_single=bound_decomp_single(n, n // 2) if even else None,
        decomp_total=bound_decomp_total(n),
    )


def fig3_table(n_min: int, n_max: int) -> list[BoundRow]:
    """One row of every bound per ``n`` in ``[n_min, n_max]``."""
    if not 2 <= n_min <= n_max <= MAX_N:
        raise ValueError(f"need 2 <= n_min <= n_max <= {MAX_N}, got {n_min}, {n_max}")
    return [bound_row(n) for n in range(n_min, n_max + 1)]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(["" if v is None else v for v in astuple(row)])
    return buf.getvalue()
