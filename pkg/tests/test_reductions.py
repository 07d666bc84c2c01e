"""Unbounded subset-sum reduction and its brute-force oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hazeopt import (
    InstanceTooLargeError,
    UsspInstance,
    min_hazing_dp,
    solve_ussp_brute,
    ussp_to_optrep,
)


def test_reduction_shape():
    inst = ussp_to_optrep(UsspInstance((3, 5), 11))
    assert inst.alphabet == ((3, -1), (5, -1))
    assert inst.delta == 10


def test_reachable_target_means_minimum_equals_target():
    u = UsspInstance((3, 5), 11)
    assert solve_ussp_brute(u)
    assert min_hazing_dp(ussp_to_optrep(u)) == 11  # 3 + 3 + 5


def test_unreachable_target_overshoots():
    u = UsspInstance((4, 6), 9)
    assert not solve_ussp_brute(u)
    assert min_hazing_dp(ussp_to_optrep(u)) == 10  # even sums only


def test_unit_item_reaches_everything():
    for target in (1, 7, 41):
        u = UsspInstance((1,), target)
        assert solve_ussp_brute(u)
        assert min_hazing_dp(ussp_to_optrep(u)) == target


def test_single_oversized_item():
    u = UsspInstance((9,), 5)
    assert not solve_ussp_brute(u)
    assert min_hazing_dp(ussp_to_optrep(u)) == 9


@pytest.mark.parametrize(
    "items,target",
    [((), 3), ((0,), 3), ((-2,), 3), ((2,), 0), ((2,), -1), (("2",), 3), ((2,), "3")],
)
def test_instance_validation(items, target):
    with pytest.raises((ValueError, TypeError)):
        UsspInstance(items, target)


def test_brute_force_guard():
    with pytest.raises(InstanceTooLargeError):
        solve_ussp_brute(UsspInstance((3,), 10_001))
    assert not solve_ussp_brute(UsspInstance((3,), 10_000))


@given(
    st.lists(st.integers(1, 12), min_size=1, max_size=5, unique=True),
    st.integers(1, 60),
)
@settings(max_examples=400, deadline=None)
def test_reduction_answers_match_oracle(items, target):
    u = UsspInstance(tuple(items), target)
    reachable = solve_ussp_brute(u)
    minimum = min_hazing_dp(ussp_to_optrep(u))
    assert minimum is not None
    assert reachable == (minimum == target)
    assert minimum >= target
