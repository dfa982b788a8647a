"""Load values, topology-propagated line values, feeder values and ranking.

Two aggregation modes are available for line values:

``literal``
    A line is worth its own dynamic load value plus the dynamic values of
    every line below it, each computed with that line's own repair time.
``line-trep``
    A line is worth its own repair time multiplied by the static value of all
    load it cuts off (its own bus and everything downstream).

The published 33-bus ranking puts line 4 above lines 1 to 3. Under
``literal`` that cannot happen, because a parent line always dominates its
children. ``line-trep`` is provided as the closer reading of that ranking.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Hashable, Iterable, Literal, Mapping

from .network import Bus, Network, downstream_lines, lines_of_feeder

HOURS_PER_YEAR = 8760
Mode = Literal["literal", "line-trep"]
AGGREGATION_MODES: tuple[str, ...] = ("literal", "line-trep")
TIERS = ("high", "medium", "low")


@dataclass(frozen=True)
class LineValuation:
    line_id: int
    feeder_id: Hashable
    damaged_poles: int
    t_rep_h: float
    v_static: float
    v_dyn: float
    v_line_dyn: float
    rank: int = 0
    tier: str = ""


@dataclass(frozen=True)
class FeederValuation:
    feeder_id: Hashable
    w_f: float
    rank: int = 0


@dataclass
class Assessment:
    lines: tuple[LineValuation, ...]
    feeders: tuple[FeederValuation, ...]
    metadata: dict = field(default_factory=dict)
    # filled in by the scenario pipeline; keyed by feeder and by line id
    class_damage: dict = field(default_factory=dict)
    line_damage: dict = field(default_factory=dict)

    def line(self, line_id: int) -> LineValuation:
        for lv in self.lines:
            if lv.line_id == line_id:
                return lv
        raise KeyError(line_id)

    def feeder(self, feeder_id) -> FeederValuation:
        for fv in self.feeders:
            if fv.feeder_id == feeder_id:
                return fv
        raise KeyError(feeder_id)

    def feeder_lines(self, feeder_id) -> list[LineValuation]:
        """Lines of one feeder in rank order."""
        return sorted((lv for lv in self.lines if lv.feeder_id == feeder_id), key=lambda lv: lv.rank)

    @property
    def feeder_order(self) -> list:
        return [fv.feeder_id for fv in sorted(self.feeders, key=lambda fv: fv.rank)]


def static_load_value(bus: Bus) -> float:
    """Annual value of the bus load: kW x 8760 h x load factor x VOLL."""
    return bus.load_kw * HOURS_PER_YEAR * bus.load_factor * bus.voll


def dynamic_load_value(bus: Bus, t_rep_h: float) -> float:
    if t_rep_h < 0:
        raise ValueError(f"repair time must be >= 0, got {t_rep_h}")
    return static_load_value(bus) * t_rep_h


def _check_values(net: Network, values: Mapping[int, float], what: str):
    missing = set(net.lines) - set(values)
    if missing:
        raise ValueError(f"{what} missing for lines {sorted(missing)}")
    negative = [lid for lid in net.lines if values[lid] < 0 or math.isnan(values[lid])]
    if negative:
        raise ValueError(f"{what} must be non-negative; offending lines {negative}")


def line_dynamic_value(net: Network, v_dyn: Mapping[int, float], line_id: int) -> float:
    """Own dynamic value plus that of every downstream line, by explicit enumeration."""
    net.line(line_id)
    return v_dyn[line_id] + sum(v_dyn[j] for j in downstream_lines(net, line_id))


def line_dynamic_values(net: Network, v_dyn: Mapping[int, float]) -> dict[int, float]:
    """:func:`line_dynamic_value` for every line in a single subtree-sum pass."""
    _check_values(net, v_dyn, "dynamic values")
    return net.subtree_sum(v_dyn)


def line_trep_values(net: Network, v_static: Mapping[int, float], t_rep: Mapping[int, float]) -> dict[int, float]:
    """Each line's repair time applied to all the load it disconnects."""
    _check_values(net, v_static, "static values")
    _check_values(net, t_rep, "repair times")
    cut_off = net.subtree_sum(v_static)
    return {lid: t_rep[lid] * cut_off[lid] for lid in net.order}


def parent_dominance_violations(net: Network, line_values: Mapping[int, float]) -> list[tuple[int, int]]:
    """(parent, child) pairs where the child line is valued above its parent."""
    bad = []
    for lid in net.order:
        parent = net.parent(lid)
        if parent is not None and line_values[parent] < line_values[lid]:
            bad.append((parent, lid))
    return bad


def feeder_value(net: Network, line_values: Mapping[int, float], feeder) -> float:
    return math.fsum(line_values[lid] for lid in lines_of_feeder(net, feeder))


def _tier_sizes(n: int) -> list[int]:
    return [n // 3 + (1 if k < n % 3 else 0) for k in range(3)]


def _feeder_sort_key(feeder_id):
    # numeric ids before string ids so mixed labels still sort deterministically
    if isinstance(feeder_id, (int, float)):
        return (0, feeder_id, "")
    return (1, 0, str(feeder_id))


def rank_assessment(net: Network, lines: Iterable[LineValuation], feeder_values: Mapping[Hashable, float],
                    metadata: dict | None = None) -> Assessment:
    """Rank lines within each feeder and feeders against each other.

    Lines are ordered by value (descending), then by shorter repair time,
    then by line id. Within a feeder the ordered list is cut into three
    near-equal tiers, the top one holding ``ceil(N / 3)`` lines. A line with
    zero value is always placed in the ``low`` tier.
    """
    by_feeder: dict[Hashable, list[LineValuation]] = {}
    for lv in lines:
        by_feeder.setdefault(lv.feeder_id, []).append(lv)

    feeder_rows = sorted(feeder_values.items(), key=lambda kv: (-kv[1], _feeder_sort_key(kv[0])))
    feeders = tuple(FeederValuation(f, w, rank) for rank, (f, w) in enumerate(feeder_rows, start=1))

    ranked: list[LineValuation] = []
    for fv in feeders:
        group = sorted(by_feeder.get(fv.feeder_id, []), key=lambda lv: (-lv.v_line_dyn, lv.t_rep_h, lv.line_id))
        tiers = [t for t, size in zip(TIERS, _tier_sizes(len(group))) for _ in range(size)]
        for rank, (lv, tier) in enumerate(zip(group, tiers), start=1):
            ranked.append(replace(lv, rank=rank, tier=tier if lv.v_line_dyn > 0 else "low"))
    return Assessment(tuple(ranked), feeders, dict(metadata or {}))


def value_network(net: Network, t_rep: Mapping[int, float], damaged_poles: Mapping[int, int] | None = None,
                  mode: Mode = "literal", metadata: dict | None = None) -> Assessment:
    """Dynamic line and feeder values for given per-line repair times, ranked."""
    if mode not in AGGREGATION_MODES:
        raise ValueError(f"unknown aggregation mode {mode!r}; expected one of {AGGREGATION_MODES}")
    _check_values(net, t_rep, "repair times")
    damaged_poles = damaged_poles or {}

    v_static = {lid: static_load_value(net.load_bus(lid)) for lid in net.order}
    v_dyn = {lid: v_static[lid] * t_rep[lid] for lid in net.order}
    if mode == "literal":
        v_line = line_dynamic_values(net, v_dyn)
        bad = parent_dominance_violations(net, v_line)
        if bad:
            raise RuntimeError(f"parent dominance violated for (parent, child) pairs {bad}")
    else:
        v_line = line_trep_values(net, v_static, t_rep)

    rows = [LineValuation(lid, net.lines[lid].feeder_id, damaged_poles.get(lid, 0), t_rep[lid],
                          v_static[lid], v_dyn[lid], v_line[lid]) for lid in net.order]
    w = {f: feeder_value(net, v_line, f) for f in net.feeders}
    meta = {"mode": mode, **(metadata or {})}
    return rank_assessment(net, rows, w, meta)
