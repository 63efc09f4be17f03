import pytest
from hypothesis import given
from hypothesis import strategies as st

from kdescent.series import PowerSeries

coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=8)


def test_geometric_inverse():
    assert PowerSeries([1, -1, 0, 0]).inverse() == PowerSeries([1, 1, 1, 1])
    assert PowerSeries([1, 2]).inverse() == PowerSeries([1, -2])


def test_arithmetic_truncates_to_shorter():
    a, b = PowerSeries([1, 2, 3]), PowerSeries([4, 5])
    assert (a + b).coeffs == [5, 7]
    assert (a * b).coeffs == [4, 13]
    assert (a - a).coeffs == [0, 0, 0]
    assert a.truncate(1) == PowerSeries([1, 2])
    assert a.order == 2 and len(a) == 3 and a[2] == 3


def test_errors():
    with pytest.raises(ValueError):
        PowerSeries([])
    with pytest.raises(ValueError):
        PowerSeries([2, 1]).inverse()


@given(coeffs)
def test_inverse_is_two_sided(tail):
    a = PowerSeries([1] + tail)
    one = PowerSeries([1] + [0] * len(tail))
    assert a * a.inverse() == one == a.inverse() * a


@given(coeffs, coeffs, coeffs)
def test_ring_laws(x, y, z):
    a, b, c = PowerSeries(x), PowerSeries(y), PowerSeries(z)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
