"""Recurrence tables against the oracle and the reference sequence."""

import pytest

from vincular.checks import REFERENCE_A
from vincular.oracle import oracle_report
from vincular.tables import build_tables, check_conjectures, compute_v

T12 = build_tables(12)


def test_sequence_prefix():
    assert tuple(T12.a[1:13]) == REFERENCE_A[:12]


def test_every_cell_matches_oracle_up_to_7():
    for n in range(2, 8):
        rep = oracle_report(n)
        assert tuple(T12.v[n]) == rep.v
        for (i, j), want in rep.b_cells.items():
            assert T12.b_cells[n][i][j] == want, f"b({n},{i},{j})"
        for (i, j), want in rep.c_cells.items():
            assert T12.c_cells[n][i][j] == want, f"c({n},{i},{j})"
        assert tuple(T12.b_last[n]) == rep.b_by_last
        assert tuple(T12.c_last[n]) == rep.c_by_last


def test_pinned_cells():
    assert T12.v[4][2] == 5
    assert T12.b_cells[5][3][2] == 3
    assert T12.c_cells[5][2][4] == 2
    for n in range(3, 13):
        assert T12.c_cells[n][n][2] == 1
        assert T12.b_cells[n][n][1] == 1
    # final letter n-1 after penultimate 2: closed power-of-two count
    for n in range(4, 13):
        assert T12.c_cells[n][2][n - 1] == 2 ** (n - 4)


def test_structural_zeros():
    for n in range(2, 13):
        for j in range(1, n + 1):
            assert T12.c_cells[n][1][j] == 0
            assert T12.c_cells[n][j][1] == 0
            assert T12.c_cells[n][j][n] == 0
            assert T12.b_cells[n][j][n] == 0
        for i in range(3, n):
            for j in range(i + 1, n):
                assert T12.c_cells[n][i][j] == 0
        for i in range(2, n):
            for j in range(i + 1, n):
                assert T12.b_cells[n][i][j] == 0


def test_marginals_resum():
    for n in range(2, 13):
        for j in range(1, n + 1):
            assert T12.b_last[n][j] == sum(
                T12.b_cells[n][i][j] for i in range(1, n + 1))
            assert T12.c_last[n][j] == sum(
                T12.c_cells[n][i][j] for i in range(1, n + 1))


def test_v_row_sums_recur():
    # ending anywhere at size n = ending in 1 at size n+1
    v = compute_v(9)
    for n in range(1, 9):
        assert sum(v[n][1:]) == v[n + 1][1]
    for n in range(1, 10):
        assert v[n][n] == 1


def test_count_reassembles():
    for n in range(2, 13):
        c_running = sum(
            sum(T12.c_last[m][1:]) for m in range(2, n + 1))
        assert T12.a[n] == 1 + sum(T12.b_last[n][1:]) + c_running


def test_full_reference_table():
    tables = build_tables(30)
    assert tuple(tables.a[1:31]) == REFERENCE_A


def test_conjecture_report():
    rep = check_conjectures(build_tables(30).a)
    assert rep.power_inequality_holds
    assert rep.first_power_failure is None
    assert rep.ratios_increasing
    assert rep.last_ratio_num == REFERENCE_A[29]
    assert rep.last_ratio_den == REFERENCE_A[28]


def test_rejects_nonpositive_size():
    with pytest.raises(ValueError):
        compute_v(0)
