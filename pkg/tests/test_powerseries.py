"""Truncated-series arithmetic: orders, valuations, exact division."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vincular.powerseries import Q, Series, as_int, expand_rational


def ints(s):
    return tuple(int(c) for c in s.coeffs)


def test_construction_and_order():
    s = Series([1, 2, 3])
    assert s.order == 2
    assert s[0] == 1 and s[2] == 3
    with pytest.raises(ValueError):
        Series([])
    with pytest.raises(IndexError):
        s[3]


def test_named_constructors():
    assert ints(Series.zero(3)) == (0, 0, 0, 0)
    assert ints(Series.one(2)) == (1, 0, 0)
    assert ints(Series.x(2)) == (0, 1, 0)
    assert ints(Series.monomial(2, 4, coeff=7)) == (0, 0, 7, 0, 0)
    with pytest.raises(ValueError):
        Series.monomial(5, 4)
    # from_poly pads or truncates to the requested order
    assert ints(Series.from_poly([1, 1], 3)) == (1, 1, 0, 0)
    assert ints(Series.from_poly([1, 1, 1, 1], 2)) == (1, 1, 1)


def test_valuation():
    assert Series([0, 0, 3, 1]).val() == 2
    assert Series([5]).val() == 0
    assert Series.zero(4).val() is None
    assert Series.zero(4).is_zero()


def test_addition_and_scalars():
    f = Series([1, 2, 3])
    g = Series([0, 1, 1])
    assert ints(f + g) == (1, 3, 4)
    assert ints(f - g) == (1, 1, 2)
    assert ints(1 + f) == (2, 2, 3)
    assert ints(2 - f) == (1, -2, -3)
    assert ints(-f) == (-1, -2, -3)


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError):
        Series([1, 2]) + Series([1, 2, 3])
    with pytest.raises(ValueError):
        Series([1, 2]) * Series([1, 2, 3])


def test_multiplication():
    f = Series([1, 1, 0, 0])
    assert ints(f * f) == (1, 2, 1, 0)
    assert ints(3 * Series([1, 2])) == (3, 6)
    assert ints(Series([0, 1, 0]) * Series([0, 1, 0])) == (0, 0, 1)


def test_power():
    f = Series([1, 1, 0, 0, 0])
    assert ints(f ** 4) == (1, 4, 6, 4, 1)
    assert ints(f ** 0) == (1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        f ** -1


def test_geometric_inverse():
    geo = 1 / Series.from_poly([1, -1], 8)
    assert ints(geo) == (1,) * 9


def test_division_drops_order_by_denominator_valuation():
    num = Series([0, 0, 1, 5, 0])     # x^2 + 5x^3, order 4
    den = Series([0, 1, 1, 0, 0])     # x + x^2, order 4
    quot = num / den
    assert quot.order == 3            # one order lost to the valuation
    assert ints(quot) == (0, 1, 4, -4)


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        Series([1, 0]) / Series.zero(1)
    # numerator valuation below denominator valuation is not a power series
    with pytest.raises(ValueError):
        Series([1, 0, 0]) / Series([0, 1, 0])


def test_scalar_division():
    assert (Series([1, 2]) / 2).coeffs == (Q(1, 2), Q(1))
    assert ints(2 / Series.from_poly([1, -1], 4)) == (2, 2, 2, 2, 2)


def test_truncate_and_shift():
    f = Series([1, 2, 3, 4])
    assert ints(f.truncate(1)) == (1, 2)
    with pytest.raises(ValueError):
        f.truncate(9)
    g = f.shifted(2)
    assert g.order == 5
    assert ints(g) == (0, 0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        f.shifted(-1)


def test_equality_and_hash():
    assert Series([1, 2]) == Series.from_poly([1, 2], 1)
    assert hash(Series([1, 2])) == hash(Series([Q(1), Q(2)]))
    assert Series([1, 2]) != Series([1, 2, 0])


def test_expand_rational():
    assert ints(expand_rational([1], [1, -1], 5)) == (1,) * 6
    assert ints(expand_rational([1], [1, -2, 1], 4)) == (1, 2, 3, 4, 5)
    # valuation in the denominator cancels against the numerator
    assert ints(expand_rational([0, 0, 1], [0, 1], 3)) == (0, 1, 0, 0)
    with pytest.raises(ZeroDivisionError):
        expand_rational([1], [0], 3)


def test_as_int():
    assert as_int(Q(6, 2)) == 3
    assert as_int(7) == 7
    with pytest.raises(ValueError):
        as_int(Q(1, 2))


polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6)


@given(polys, polys)
def test_multiplication_commutes(p, q):
    f = Series.from_poly(p, 7)
    g = Series.from_poly(q, 7)
    assert f * g == g * f


@given(polys, polys)
def test_product_then_exact_division_roundtrips(p, q):
    f = Series.from_poly(p, 7)
    g = Series.from_poly([1] + q, 7)   # unit constant term
    assert (f * g) / g == f


@given(polys, polys, polys)
def test_distributive(p, q, r):
    f, g, h = (Series.from_poly(t, 6) for t in (p, q, r))
    assert f * (g + h) == f * g + f * h
