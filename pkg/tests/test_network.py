import random

import pytest
from hypothesis import given, settings, strategies as st

from hilprank.network import (Bus, CycleDetected, DanglingReference, DisconnectedBus, DuplicateId,
                              FeederMismatch, Line, UnknownFeeder, UnknownLine, build_network,
                              downstream_lines, lines_of_feeder)
from hilprank.scenario import bundled_line_id as L

from conftest import brute_downstream, random_network, random_tree_parts

POLES = {1: 2}


def test_minimal_tree():
    net = build_network([Bus(1), Bus(2, 10, 0.5, 100)], [Line(7, 1, 2, "A", POLES)], slack_bus=1)
    assert net.feeders == {"A"}
    assert net.parent(7) is None
    assert downstream_lines(net, 7) == set()


def test_bundled_feeder_topology(feeder1):
    net = feeder1.network
    assert len(net.lines) == 33
    assert len(net.buses) == 34
    assert lines_of_feeder(net, 1) == set(net.lines)


def test_reversed_lines_are_reoriented():
    buses = [Bus(1), Bus(2), Bus(3)]
    net = build_network(buses, [Line(1, 2, 1, "A", POLES), Line(2, 3, 2, "A", POLES)], 1)
    assert (net.lines[1].from_bus, net.lines[1].to_bus) == (1, 2)
    assert (net.lines[2].from_bus, net.lines[2].to_bus) == (2, 3)
    assert net.load_bus(2).id == 3


@pytest.mark.parametrize("lines, error", [
    ([Line(1, 1, 2, "A", POLES), Line(2, 2, 3, "A", POLES), Line(3, 3, 1, "A", POLES)], CycleDetected),
    ([Line(1, 1, 2, "A", POLES), Line(2, 2, 1, "A", POLES), Line(3, 2, 3, "A", POLES)], CycleDetected),
    ([Line(1, 1, 2, "A", POLES), Line(2, 3, 3, "A", POLES)], CycleDetected),
    ([Line(1, 1, 2, "A", POLES)], DisconnectedBus),
    ([Line(1, 1, 2, "A", POLES), Line(1, 2, 3, "A", POLES)], DuplicateId),
    ([Line(1, 1, 2, "A", POLES), Line(2, 2, 9, "A", POLES)], DanglingReference),
    ([Line(1, 1, 2, "A", POLES), Line(2, 2, 3, "B", POLES)], FeederMismatch),
])
def test_invalid_topologies(lines, error):
    with pytest.raises(error):
        build_network([Bus(1), Bus(2), Bus(3)], lines, 1)


def test_duplicate_bus_and_missing_slack():
    with pytest.raises(DuplicateId):
        build_network([Bus(1), Bus(1)], [], 1)
    with pytest.raises(DanglingReference):
        build_network([Bus(1)], [], 5)


@pytest.mark.parametrize("kwargs", [
    dict(id=0), dict(load_kw=-1), dict(load_factor=0), dict(load_factor=1.2), dict(voll=-5),
])
def test_bus_invariants(kwargs):
    with pytest.raises(ValueError):
        Bus(**{"id": 1, **kwargs})


@pytest.mark.parametrize("kwargs", [
    dict(travel_time_h=1.5), dict(travel_time_h=-0.1), dict(poles_by_class={}), dict(poles_by_class={1: 0}),
    dict(poles_by_class={1: -1, 2: 3}), dict(id=-3),
])
def test_line_invariants(kwargs):
    with pytest.raises(ValueError):
        Line(**{"id": 1, "from_bus": 1, "to_bus": 2, "feeder_id": "A", "poles_by_class": POLES, **kwargs})


def test_downstream_examples(feeder1):
    net = feeder1.network
    assert downstream_lines(net, L(1, 33)) == set()
    assert downstream_lines(net, L(1, 19)) == {L(1, 20), L(1, 21), L(1, 22)}
    assert downstream_lines(net, L(1, 2)) == {L(1, b) for b in range(3, 34)}
    with pytest.raises(UnknownLine):
        downstream_lines(net, 4242)


def test_downstream_matches_edge_deletion_on_case_study(bundled):
    net = bundled.network
    for lid in net.lines:
        assert downstream_lines(net, lid) == brute_downstream(net, lid)


def test_lines_of_feeder_partition():
    buses = [Bus(i) for i in range(1, 6)]
    lines = [Line(1, 1, 2, "A", POLES), Line(2, 2, 3, "A", POLES), Line(3, 1, 4, "B", POLES), Line(4, 4, 5, "B", POLES)]
    net = build_network(buses, lines, 1)
    assert lines_of_feeder(net, "A") == {1, 2}
    assert lines_of_feeder(net, "B") == {3, 4}
    with pytest.raises(UnknownFeeder):
        lines_of_feeder(net, "")


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 200), feeders=st.integers(1, 4))
def test_random_trees_against_brute_force(seed, n, feeders):
    net = random_network(seed, n, min(feeders, n))
    dp_counts = net.subtree_sum({lid: 1 for lid in net.lines})
    assert sum(dp_counts.values()) - len(net.lines) == sum(len(brute_downstream(net, lid)) for lid in net.lines)
    for lid in net.lines:
        down = downstream_lines(net, lid)
        assert len(down) == dp_counts[lid] - 1
        for child in net.children(lid):
            assert downstream_lines(net, child) | {child} <= down
    union = set()
    for f in net.feeders:
        part = lines_of_feeder(net, f)
        assert not union & part
        union |= part
    assert union == set(net.lines)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 80))
def test_build_is_order_independent(seed, n):
    buses, lines, slack = random_tree_parts(random.Random(seed), n, 2 if n > 1 else 1)
    a = build_network(buses, lines, slack)
    shuffled = random.Random(seed + 1)
    buses, lines = buses[:], lines[:]
    shuffled.shuffle(buses)
    shuffled.shuffle(lines)
    b = build_network(buses, lines, slack)
    assert a.order == b.order
    assert a.lines == b.lines
    assert all(a.parent(lid) == b.parent(lid) for lid in a.lines)
