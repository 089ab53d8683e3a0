"""Recurrence evaluation of the v, c, b arrays and the counting sequence.

The three arrays are built bottom-up in the only order their recurrences
allow: every v row first, then every c row (cells consume c marginals of
smaller sizes and v rows), then every b row (cells consume b and c
marginals of smaller sizes).  All values are plain Python ints, so the
arithmetic is exact at any size; memory is cubic in the target size.

Triple sums in the ending-in-(1, j) recurrences are folded through prefix
sums (per-row running totals and a diagonal running total over the c
marginals), which drops the build cost to roughly N^4 without touching the
recurrences themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

Row = list[int]
Cells = list[list[int]]


def _prefix(row: Row) -> Row:
    out = [0] * len(row)
    acc = 0
    for idx in range(1, len(row)):
        acc += row[idx]
        out[idx] = acc
    return out


def compute_v(N: int) -> list[Row]:
    """Rows v[n][j] for 1 <= j <= n <= N; v[n][0] is padding."""
    if N < 1:
        raise ValueError("N must be positive")
    v: list[Row] = [[], [0, 1]]
    pre: list[Row] = [[], _prefix(v[1])]
    for n in range(2, N + 1):
        row = [0] * (n + 1)
        row[n] = 1
        # ending in 1: anything of size n-1 with 1 appended
        row[1] = pre[n - 1][n - 1]
        for j in range(2, n):
            total = pre[n - 1][n - 1] - pre[n - 1][j - 1]
            for d in range(2, j + 1):
                m = n - d
                # sum of v(n-d, i-d) over i in [j+1, n]
                total += comb(j - 2, d - 2) * (pre[m][m] - pre[m][j - d])
            row[j] = total
        assert all(x >= 0 for x in row)
        v.append(row)
        pre.append(_prefix(row))
    return v


def _empty_cells(n: int) -> Cells:
    return [[0] * (n + 1) for _ in range(n + 1)]


def compute_c(N: int, v: list[Row]) -> tuple[list[Cells], list[Row]]:
    """Cell tables c[n][i][j] and marginals by final letter, up to N.

    Cells with i == 1, j == 1 or j == n stay zero, as does the wedge
    3 <= i < j <= n-1; the remaining cells follow the three recurrences
    plus the two closed-form boundary columns.
    """
    vpre = [_prefix(row) if row else [] for row in v]
    cells: list[Cells] = [_empty_cells(i) for i in range(min(N, 1) + 1)]
    last: list[Row] = [[0] * (i + 1) for i in range(min(N, 1) + 1)]
    for n in range(2, N + 1):
        cur = _empty_cells(n)
        # penultimate letter n forces the word (n-1)...1n2
        if n >= 3:
            cur[n][2] = 1
        for i in range(3, n):
            # final letter 2: strip the interval [2, d] off smaller members
            cur[i][2] = sum(last[n - i + d][d] for d in range(2, i))
        for i in range(4, n):
            for j in range(3, i):
                # final letter below the penultimate one is removable
                cur[i][j] = last[n - 1][i - 1]
        if n >= 4:
            cur[2][n - 1] = 2 ** (n - 4)
        for j in range(3, n - 1):
            # penultimate letter 2: split off a decreasing prefix (d-3
            # letters), a decreasing insert (e letters), and a last-letter
            # avoider; fold the k-sum through the v prefix rows.
            total = 0
            for d in range(3, j + 1):
                for e in range(0, j - d + 1):
                    s = d + e
                    m = n - s - 1
                    ksum = vpre[m][m] - vpre[m][j - s]
                    total += comb(j - 3, d - 3) * comb(j - d, e) * ksum
            cur[2][j] = total
        marg = [0] * (n + 1)
        for i in range(1, n + 1):
            row_i = cur[i]
            for j in range(1, n + 1):
                assert row_i[j] >= 0
                marg[j] += row_i[j]
        assert marg[1] == 0 and marg[n] == 0
        assert all(cur[1][j] == 0 for j in range(1, n + 1))
        assert all(cur[n][j] == (n >= 3 and j == 2) for j in range(1, n + 1))
        assert all(cur[i][j] == 0 for i in range(3, n) for j in range(i + 1, n))
        cells.append(cur)
        last.append(marg)
    return cells, last


def _diagonal_prefix(c_last: list[Row], N: int) -> list[Row]:
    """P[delta][t] = sum over s in [2, t] of c(delta+s, s)."""
    P: list[Row] = [[]]
    for delta in range(1, N + 1):
        width = N - delta
        row = [0] * (width + 1)
        for t in range(2, width + 1):
            row[t] = row[t - 1] + c_last[delta + t][t]
        P.append(row)
    return P


def compute_b(N: int, c_last: list[Row]) -> tuple[list[Cells], list[Row]]:
    """Cell tables b[n][i][j] and marginals by final letter, up to N."""
    P = _diagonal_prefix(c_last, N)
    cells: list[Cells] = [_empty_cells(i) for i in range(min(N, 1) + 1)]
    last: list[Row] = [[0] * (i + 1) for i in range(min(N, 1) + 1)]
    pre: list[Row] = [_prefix(row) for row in last]
    for n in range(2, N + 1):
        cur = _empty_cells(n)
        # penultimate letter n forces (n-1)...2n1
        cur[n][1] = 1
        for i in range(2, n):
            # final letter 1: delete it, or delete [1, d] when 2 sits left of n
            cur[i][1] = last[n - 1][i - 1] + sum(
                c_last[n - i + d][d] for d in range(2, i)
            )
        for i in range(3, n):
            for j in range(2, i):
                cur[i][j] = last[n - 1][i - 1]
        for j in range(2, n):
            # penultimate letter 1: the word ends gamma,1,j with gamma a
            # decreasing set of d-2 letters under j; k is the rightmost
            # letter exceeding j.  k = n gives the closed 2^(j-2) count;
            # otherwise deleting gamma,1,j leaves a b- or c-type member.
            total = 2 ** (j - 2)
            for d in range(2, j + 1):
                weight = comb(j - 2, d - 2)
                m = n - d
                hi = min(n - 1 - d, m - 1)
                lo = j - d
                if hi > lo:
                    total += weight * (pre[m][hi] - pre[m][lo])
                acc = 0
                for k in range(j + 1, n):
                    t = k - d
                    if t >= 2:
                        acc += P[n - k][t]
                total += weight * acc
            cur[1][j] = total
        marg = [0] * (n + 1)
        for i in range(1, n + 1):
            row_i = cur[i]
            for j in range(1, n + 1):
                assert row_i[j] >= 0
                marg[j] += row_i[j]
        assert marg[n] == 0
        assert all(cur[n][j] == (j == 1) for j in range(1, n + 1))
        assert all(cur[i][j] == 0 for i in range(2, n) for j in range(i + 1, n))
        cells.append(cur)
        last.append(marg)
        pre.append(_prefix(marg))
    return cells, last


def compute_a(N: int, b_last: list[Row], c_last: list[Row]) -> list[int]:
    """a[n] = held-out word + b total + c totals of all sizes down to 2."""
    a = [0] * (N + 1)
    a[1] = 1
    c_running = 0
    for n in range(2, N + 1):
        c_running += sum(c_last[n][1:])
        a[n] = 1 + sum(b_last[n][1:]) + c_running
    return a


@dataclass(frozen=True)
class Tables:
    """All recurrence arrays up to size N."""

    N: int
    v: list[Row]
    c_cells: list[Cells]
    c_last: list[Row]
    b_cells: list[Cells]
    b_last: list[Row]
    a: list[int]


def build_tables(N: int) -> Tables:
    v = compute_v(N)
    c_cells, c_last = compute_c(N, v)
    b_cells, b_last = compute_b(N, c_last)
    a = compute_a(N, b_last, c_last)
    return Tables(N=N, v=v, c_cells=c_cells, c_last=c_last,
                  b_cells=b_cells, b_last=b_last, a=a)


@dataclass(frozen=True)
class ConjectureReport:
    """Exact checks of the two growth statements on a finite range.

    ``power_inequality_holds`` records whether a_n^(n+1) < a_{n+1}^n for
    every checked n, i.e. whether a_n^(1/n) increases.  Unbounded growth of
    a_{n+1}/a_n (which would rule out any c with a_n < c^n) can only be
    observed, not decided, on a finite range; ``ratios_increasing`` and the
    last ratio are reported as evidence.
    """

    n_checked: int
    power_inequality_holds: bool
    first_power_failure: int | None
    ratios_increasing: bool
    last_ratio_num: int
    last_ratio_den: int


def check_conjectures(a: list[int]) -> ConjectureReport:
    N = len(a) - 1
    first_fail = None
    for n in range(1, N):
        if a[n] ** (n + 1) >= a[n + 1] ** n:
            first_fail = n
            break
    ratios_up = all(
        a[n + 1] * a[n - 1] > a[n] * a[n] for n in range(2, N)
    )
    return ConjectureReport(
        n_checked=N,
        power_inequality_holds=first_fail is None,
        first_power_failure=first_fail,
        ratios_increasing=ratios_up,
        last_ratio_num=a[N],
        last_ratio_den=a[N - 1],
    )
