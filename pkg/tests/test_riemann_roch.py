import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayley_weights.riemann_roch import (
    BundleSum,
    IndeterminateError,
    LineBundle,
    euler_characteristic,
    genus_complete_intersection,
    h0,
    h0_sum,
)


@pytest.mark.parametrize(
    "degree, genus, expected",
    [(3, 0, 4), (-1, 0, 0), (0, 0, 1), (-5, 7, 0), (37, 19, 19), (2, 1, 2)],
)
def test_h0_examples(degree, genus, expected):
    assert h0(LineBundle(degree, genus)) == expected


@pytest.mark.parametrize("degree, genus", [(0, 19), (36, 19), (20, 19), (0, 1)])
def test_h0_special_range_is_indeterminate(degree, genus):
    with pytest.raises(IndeterminateError, match="indeterminate"):
        h0(LineBundle(degree, genus))


@given(st.integers(-50, 50), st.integers(0, 10))
def test_riemann_roch_with_serre_duality(d, g):
    b = LineBundle(d, g)
    try:
        lhs = h0(b) - h0(b.serre_dual())
    except IndeterminateError:
        assert 0 <= d <= 2 * g - 2
        return
    assert lhs == d + 1 - g


@given(st.integers(-30, 30))
def test_genus_zero_monotone(d):
    assert h0(LineBundle(d + 1)) >= h0(LineBundle(d))


def test_sum_and_euler_characteristic():
    s = BundleSum.of_degrees([1, 1])
    assert h0_sum(s) == 4
    assert euler_characteristic(s) == 4
    assert s.rank == 2 and s.genus == 0
    assert s.serre_dual() == BundleSum.of_degrees([-3, -3])


def test_mixed_genus_rejected():
    with pytest.raises(ValueError):
        BundleSum((LineBundle(1, 0), LineBundle(1, 2)))


@pytest.mark.parametrize("d1, d2, g", [(4, 3, 19), (1, 1, 0), (2, 2, 1), (2, 3, 4), (1, 3, 1), (3, 3, 10)])
def test_complete_intersection_genus(d1, d2, g):
    assert genus_complete_intersection(d1, d2) == g
    assert genus_complete_intersection(d2, d1) == g


@pytest.mark.parametrize("d1, d2", [(0, 3), (-1, 2)])
def test_complete_intersection_rejects_nonpositive(d1, d2):
    with pytest.raises(ValueError, match="not a valid smooth complete intersection"):
        genus_complete_intersection(d1, d2)
