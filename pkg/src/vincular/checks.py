"""Cross-route verification: oracle vs recurrence vs closed-form series.

Each check compares two independently computed views of the same numbers
and reports a :class:`CheckResult`; nothing in here ever repairs a
mismatch.  When routes disagree, the brute-force oracle is the authority,
then the recurrence tables, then the series engine, in that order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import genfun, oracle
from .powerseries import Q
from .tables import Tables, build_tables, check_conjectures

# The thirty reference values a_1..a_30 this library is expected to
# reproduce along every route.
REFERENCE_A = (
    1,
    2,
    5,
    15,
    50,
    180,
    690,
    2792,
    11857,
    52633,
    243455,
    1170525,
    5837934,
    30151474,
    161021581,
    888001485,
    5051014786,
    29600662480,
    178541105770,
    1107321666920,
    7055339825171,
    46142654894331,
    309513540865544,
    2127744119042216,
    14979904453920111,
    107932371558460341,
    795363217306369817,
    5990768203554158167,
    46094392105916344968,
    362092868720288824992,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        body = f"{mark} {self.name}"
        return f"{body}: {self.detail}" if self.detail else body


def apply_fault(tables: Tables, cell: str) -> str:
    """Corrupt one recurrence cell in place (self-test hook).

    The argument reads "b:n:i:j", "c:n:i:j" or "v:n:j"; the named cell
    is incremented by one so the oracle comparison must fail and name it.
    """
    parts = cell.split(":")
    kind = parts[0]
    nums = [int(p) for p in parts[1:]]
    if kind == "v" and len(nums) == 2:
        n, j = nums
        tables.v[n][j] += 1
        return f"v({n},{j})"
    if kind == "b" and len(nums) == 3:
        n, i, j = nums
        tables.b_cells[n][i][j] += 1
        return f"b({n},{i},{j})"
    if kind == "c" and len(nums) == 3:
        n, i, j = nums
        tables.c_cells[n][i][j] += 1
        return f"c({n},{i},{j})"
    raise ValueError(f"bad fault cell {cell!r}; use v:n:j or b:n:i:j or c:n:i:j")


def check_dp_reference(tables: Tables) -> CheckResult:
    """Recurrence sequence against the thirty reference values."""
    upto = min(tables.N, 30)
    for n in range(1, upto + 1):
        if tables.a[n] != REFERENCE_A[n - 1]:
            return CheckResult(
                "dp-reference-table", False,
                f"a_{n}: dp={tables.a[n]} reference={REFERENCE_A[n - 1]}")
    return CheckResult("dp-reference-table", True, f"a_1..a_{upto} exact")


def check_series_reference(order: int = 31) -> CheckResult:
    """Series-extracted sequence against the thirty reference values."""
    t0 = time.time()
    a = genfun.a_from_series(genfun.A_series(order))
    dt = time.time() - t0
    upto = min(order - 1, 30)
    for n in range(1, upto + 1):
        if a[n] != REFERENCE_A[n - 1]:
            return CheckResult(
                "series-reference-table", False,
                f"a_{n}: series={a[n]} reference={REFERENCE_A[n - 1]}")
    return CheckResult(
        "series-reference-table", True, f"a_1..a_{upto} exact ({dt:.1f}s)")


def check_oracle_dp(tables: Tables, n: int) -> CheckResult:
    """Every v/b/c cell plus both counts at one size against brute force."""
    t0 = time.time()
    rep = oracle.oracle_report(n)
    name = f"oracle-dp-n{n}"
    for j in range(1, n + 1):
        if tables.v[n][j] != rep.v[j]:
            return CheckResult(
                name, False, f"v({n},{j}): dp={tables.v[n][j]} oracle={rep.v[j]}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            want_b = rep.b_cells.get((i, j), 0)
            if tables.b_cells[n][i][j] != want_b:
                return CheckResult(
                    name, False,
                    f"b({n},{i},{j}): dp={tables.b_cells[n][i][j]} oracle={want_b}")
            want_c = rep.c_cells.get((i, j), 0)
            if tables.c_cells[n][i][j] != want_c:
                return CheckResult(
                    name, False,
                    f"c({n},{i},{j}): dp={tables.c_cells[n][i][j]} oracle={want_c}")
    if tables.a[n] != rep.count_l:
        return CheckResult(
            name, False, f"a_{n}: dp={tables.a[n]} oracle count_L={rep.count_l}")
    if n >= 2 and rep.count_circular != tables.a[n - 1]:
        return CheckResult(
            name, False,
            f"|A_{n}|: oracle={rep.count_circular} dp a_{n - 1}={tables.a[n - 1]}")
    return CheckResult(name, True, f"all cells and counts agree ({time.time() - t0:.1f}s)")


def check_reduction(n: int) -> CheckResult:
    bad = oracle.reduction_counterexample(n)
    if bad is None:
        return CheckResult(f"reduction-n{n}", True)
    return CheckResult(f"reduction-n{n}", False, f"counterexample {bad}")


def check_v0_shift(order: int = 32) -> CheckResult:
    """V at weight 0 equals x + x * (V at weight 1), coefficientwise."""
    v0 = genfun.V0_series(order)
    v1 = genfun.V1_series(order - 1)
    ok = v0[0] == 0 and v0[1] == 1 and all(
        v0[n] == v1[n - 1] for n in range(2, order + 1))
    return CheckResult("series-v0-shift", ok, f"order {order}")


def check_c1u_at_one(order: int = 32) -> CheckResult:
    ok = genfun.C1u_series(1, order) == genfun.C11_series(order)
    return CheckResult("series-c-weight-one", ok, f"order {order}")


def check_b1u_at_one(order: int = 32) -> CheckResult:
    t0 = time.time()
    ok = genfun.B1u_series(1, order) == genfun.B11_series(order)
    return CheckResult("series-b-weight-one", ok,
                       f"order {order} ({time.time() - t0:.1f}s)")


def check_a_vu_diagonal(order: int = 32) -> CheckResult:
    ok = genfun.A_vu_series(1, 1, order) == genfun.A_series(order)
    return CheckResult("series-bivariate-diagonal", ok, f"order {order}")


def check_weighted_marginals(tables: Tables, us=(2, 3, 5), n_max: int = 12) -> CheckResult:
    """One-variable series against u-weighted recurrence marginals."""
    n_max = min(n_max, tables.N)
    for u in us:
        bu = genfun.B1u_series(u, n_max)
        cu = genfun.C1u_series(u, n_max)
        for n in range(2, n_max + 1):
            want_b = sum(
                tables.b_last[n][j] * Q(u) ** (j - 1) for j in range(1, n + 1))
            if bu[n] != want_b:
                return CheckResult(
                    "weighted-marginals", False,
                    f"b series u={u} n={n}: {bu[n]} vs {want_b}")
            want_c = sum(
                tables.c_last[n][j] * Q(u) ** (j - 2) for j in range(2, n + 1))
            if cu[n] != want_c:
                return CheckResult(
                    "weighted-marginals", False,
                    f"c series u={u} n={n}: {cu[n]} vs {want_c}")
    return CheckResult("weighted-marginals", True,
                       f"u in {tuple(us)}, n <= {n_max}")


def check_integrality(order: int = 32) -> CheckResult:
    """A, B11, C11, V1 coefficients are non-negative integers."""
    series = {
        "A": genfun.A_series(order),
        "B11": genfun.B11_series(order),
        "C11": genfun.C11_series(order),
        "V1": genfun.V1_series(order),
    }
    for label, s in series.items():
        for n, coef in enumerate(s.coeffs):
            if coef.denominator != 1 or coef < 0:
                return CheckResult(
                    "series-integrality", False, f"{label}[{n}] = {coef}")
    return CheckResult("series-integrality", True, f"order {order}")


def check_power_inequality(tables: Tables) -> CheckResult:
    rep = check_conjectures(tables.a)
    if rep.power_inequality_holds:
        return CheckResult(
            "conjecture-power-inequality", True,
            f"a_n^(n+1) < a_(n+1)^n for all n < {rep.n_checked} (checked, not proven)")
    return CheckResult(
        "conjecture-power-inequality", False,
        f"fails first at n={rep.first_power_failure}")


def check_bivariate_oracle(n_max: int = 8, v=2, u=3) -> CheckResult:
    """Bivariate circular series against oracle weighted sums."""
    t0 = time.time()
    s = genfun.A_vu_series(v, u, n_max)
    for n in range(3, n_max + 1):
        want = oracle.weighted_circular_sum(n, v, u)
        if s[n] != want:
            return CheckResult(
                "bivariate-oracle", False,
                f"(v,u)=({v},{u}) n={n}: series={s[n]} oracle={want}")
    return CheckResult(
        "bivariate-oracle", True,
        f"(v,u)=({v},{u}), 3 <= n <= {n_max} ({time.time() - t0:.1f}s)")


def run_all(
    oracle_max: int = 10,
    reduction_max: int = 8,
    table_n: int = 30,
    order: int = 32,
    fault: str | None = None,
) -> list[CheckResult]:
    """The full suite at the given scales, most trustworthy checks first."""
    t0 = time.time()
    tables = build_tables(max(table_n, 30, oracle_max, 12))
    build_dt = time.time() - t0
    results = [CheckResult("dp-build", True, f"N={tables.N} ({build_dt:.1f}s)")]
    if fault is not None:
        cell = apply_fault(tables, fault)
        results.append(CheckResult(
            "fault-injection", True, f"corrupted {cell}; expect a FAIL below"))
    results.append(check_dp_reference(tables))
    results.append(check_series_reference(order=max(order, 2)))
    for n in range(2, oracle_max + 1):
        results.append(check_oracle_dp(tables, n))
    for n in range(2, reduction_max + 1):
        results.append(check_reduction(n))
    results.append(check_v0_shift(order))
    results.append(check_c1u_at_one(order))
    results.append(check_b1u_at_one(order))
    results.append(check_a_vu_diagonal(order))
    results.append(check_weighted_marginals(tables))
    results.append(check_integrality(order))
    results.append(check_power_inequality(tables))
    results.append(check_bivariate_oracle())
    return results
