import pytest
from hypothesis import given, settings, strategies as st

from hilprank.damage import (ClassDamage, DamageError, DamageExceedsInventory, EmptyClassOnFeeder, LineDamage,
                             RepairParams, class_damage, damaged_in_class, estimate_line_damage,
                             ingest_observed_damage, repair_time, round_count)
from hilprank.network import Bus, Line, build_network
from hilprank.scenario import bundled_line_id as L

# Feeder-1 class damage at 80 m/s (damaged, class size)
FEEDER1_DAMAGE = [ClassDamage(1, 0.366667, 15, 6), ClassDamage(2, 0.413514, 106, 44),
                  ClassDamage(3, 0.464706, 98, 46), ClassDamage(4, 0.576190, 21, 12)]


def one_line_net(poles, travel=0.0):
    return build_network([Bus(1), Bus(2, 50, 0.9, 3200)], [Line(1, 1, 2, "A", poles, travel)], 1)


@pytest.mark.parametrize("q, n, rounding, expected", [
    (0.366667, 15, "nearest", 6),
    (0.576190, 21, "nearest", 12),
    (0.576190, 21, "ceil", 13),
    (0.3, 0, "nearest", 0),
    (0.3, 0, "ceil", 0),
    (1.0, 7, "nearest", 7),
    (0.5, 1, "nearest", 1),
])
def test_damaged_in_class(q, n, rounding, expected):
    assert damaged_in_class(q, n, rounding) == expected


def test_exact_half_rounds_up_despite_float_error(feeder1):
    # 0.05 + 0.95 / 60 * 20 times 15 poles is 5.5 in exact arithmetic
    cd = class_damage(feeder1.class_table, {1: 15}, 80.0)
    assert cd[0].b == 6


def test_rounding_policy_must_be_known():
    with pytest.raises(ValueError):
        round_count(1.2, "floor")


def test_case_study_class_damage(bundled):
    got = {f: [d.b for d in class_damage(bundled.class_table, bundled.class_counts[f], 80.0)] for f in (1, 2, 3)}
    assert got == {1: [6, 44, 46, 12], 2: [7, 35, 51, 12], 3: [6, 38, 49, 9]}


def test_estimate_spreads_class_damage(feeder1):
    net, table = feeder1.network, feeder1.class_table
    ld = estimate_line_damage(net, table, FEEDER1_DAMAGE, L(1, 10))
    # 6/15 * 1 + 44/106 * 3 + 46/98 * 4 = 0.4 + 1.2453 + 1.8776 = 3.5229
    assert ld.bt == 4
    assert sum(ld.expected_by_class.values()) == pytest.approx(3.52283, abs=1e-5)
    assert sum(ld.damaged_by_class.values()) == ld.bt
    assert all(ld.damaged_by_class[c] <= net.lines[L(1, 10)].poles(c) for c in ld.damaged_by_class)
    assert ld.source == "estimated"


def test_estimate_whole_class_on_one_line(feeder1):
    net = one_line_net({2: 5})
    ld = estimate_line_damage(net, feeder1.class_table, [ClassDamage(2, 0.4, 5, 2)], 1)
    assert ld.bt == 2


def test_estimate_without_damaged_classes(feeder1):
    net = one_line_net({1: 3})
    damage = [ClassDamage(1, 0.05, 3, 0), ClassDamage(2, 0.5, 10, 5)]
    assert estimate_line_damage(net, feeder1.class_table, damage, 1).bt == 0


def test_estimate_rejects_damage_on_empty_class(feeder1):
    net = one_line_net({1: 3})
    with pytest.raises(EmptyClassOnFeeder):
        estimate_line_damage(net, feeder1.class_table, [ClassDamage(1, 0.5, 0, 1)], 1)
    with pytest.raises(DamageError):
        estimate_line_damage(net, feeder1.class_table, [ClassDamage(2, 0.5, 4, 2)], 1)


def test_line_estimates_track_class_totals(feeder1):
    net, table = feeder1.network, feeder1.class_table
    for v in (0.0, 62.0, 80.0, 97.5, 125.0):
        cd = class_damage(table, feeder1.class_counts[1], v)
        estimates = [estimate_line_damage(net, table, cd, lid) for lid in net.lines]
        total_b = sum(d.b for d in cd)
        # feeder-1 line inventories add up to the class sizes, so expectations sum exactly
        assert sum(sum(e.expected_by_class.values()) for e in estimates) == pytest.approx(total_b, abs=1e-9)
        assert abs(sum(e.bt for e in estimates) - total_b) <= len(net.lines)


def test_observed_damage(feeder1):
    net = feeder1.network
    ld = ingest_observed_damage(net, L(1, 1), {1: 0, 2: 1, 3: 0, 4: 1})
    assert ld.bt == 2 and ld.source == "observed"
    assert ingest_observed_damage(net, L(1, 1), {}).bt == 0
    with pytest.raises(DamageExceedsInventory):
        ingest_observed_damage(net, L(1, 1), {4: 5})
    with pytest.raises(DamageExceedsInventory):
        ingest_observed_damage(net, L(1, 1), {1: 1})


def test_repair_times_match_case_study(feeder1):
    net = feeder1.network
    line1, line3 = net.lines[L(1, 1)], net.lines[L(1, 3)]
    assert line1.travel_time_h == 0.0 and line3.travel_time_h == pytest.approx(0.1)
    assert repair_time(LineDamage(line1.id, {2: 1, 4: 1}, 2, "observed"), line1) == pytest.approx(8.0)
    assert repair_time(LineDamage(line3.id, {2: 1, 4: 2}, 3, "observed"), line3) == pytest.approx(12.1)
    assert repair_time(LineDamage(line3.id, {}, 0, "observed"), line3) == 0.0


def test_per_pole_durations_reduce_to_average():
    line = Line(1, 1, 2, "A", {1: 6}, 0.3)
    ld = LineDamage(1, {1: 5}, 5, "observed")
    uniform = RepairParams(4.0, {1: [4.0] * 5})
    assert repair_time(ld, line, uniform) == pytest.approx(repair_time(ld, line, RepairParams(4.0)))
    assert repair_time(ld, line, RepairParams(4.0, {1: [1, 2, 3, 4, 5]})) == pytest.approx(15.3)
    with pytest.raises(DamageError):
        repair_time(ld, line, RepairParams(4.0, {1: [4.0, 4.0]}))
    with pytest.raises(ValueError):
        RepairParams(0)


@settings(max_examples=200)
@given(st.integers(0, 30), st.integers(0, 30), st.floats(0, 1), st.floats(0, 1))
def test_repair_time_monotone(bt_a, bt_b, travel_a, travel_b):
    (bt_lo, bt_hi), (tr_lo, tr_hi) = sorted((bt_a, bt_b)), sorted((travel_a, travel_b))
    lo = repair_time(LineDamage(1, {1: bt_lo}, bt_lo, "observed"), Line(1, 1, 2, "A", {1: 30}, tr_lo))
    hi = repair_time(LineDamage(1, {1: bt_hi}, bt_hi, "observed"), Line(1, 1, 2, "A", {1: 30}, tr_hi))
    assert lo <= hi
