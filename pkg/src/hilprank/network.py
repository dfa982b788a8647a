"""Radial distribution network: buses, lines, feeders and downstream sets.

A :class:`Network` is a set of trees hanging off a single slack bus. Every
line is oriented away from the slack bus at construction time, so
``line.from_bus`` is always the upstream end regardless of how the input
listed it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Hashable, Iterable, Mapping


class NetworkError(ValueError):
    """Base class for topology and reference errors."""


class CycleDetected(NetworkError):
    pass


class DisconnectedBus(NetworkError):
    pass


class DuplicateId(NetworkError):
    pass


class DanglingReference(NetworkError):
    pass


class FeederMismatch(NetworkError):
    pass


class UnknownLine(NetworkError, KeyError):
    pass


class UnknownFeeder(NetworkError, KeyError):
    pass


@dataclass(frozen=True)
class Bus:
    id: int
    load_kw: float = 0.0
    load_factor: float = 1.0
    voll: float = 0.0

    def __post_init__(self):
        if not isinstance(self.id, int) or self.id <= 0:
            raise ValueError(f"bus id must be a positive integer, got {self.id!r}")
        if self.load_kw < 0:
            raise ValueError(f"bus {self.id}: load_kw must be >= 0, got {self.load_kw}")
        if not 0 < self.load_factor <= 1:
            raise ValueError(f"bus {self.id}: load_factor must be in (0, 1], got {self.load_factor}")
        if self.voll < 0:
            raise ValueError(f"bus {self.id}: voll must be >= 0, got {self.voll}")


@dataclass(frozen=True)
class Line:
    id: int
    from_bus: int
    to_bus: int
    feeder_id: Hashable
    poles_by_class: Mapping[int, int] = field(default_factory=dict)
    travel_time_h: float = 0.0

    def __post_init__(self):
        if not isinstance(self.id, int) or self.id <= 0:
            raise ValueError(f"line id must be a positive integer, got {self.id!r}")
        if not 0 <= self.travel_time_h <= 1:
            raise ValueError(f"line {self.id}: travel_time_h must be in [0, 1], got {self.travel_time_h}")
        counts = dict(self.poles_by_class)
        if any(n < 0 for n in counts.values()):
            raise ValueError(f"line {self.id}: negative pole count in {counts}")
        if sum(counts.values()) < 1:
            raise ValueError(f"line {self.id}: a line needs at least one pole")
        # frozen copy so callers can't mutate the inventory behind our back
        object.__setattr__(self, "poles_by_class", dict(sorted(counts.items())))

    @property
    def total_poles(self) -> int:
        return sum(self.poles_by_class.values())

    def poles(self, class_id: int) -> int:
        return self.poles_by_class.get(class_id, 0)


class Network:
    """Validated, oriented radial network. Treat as immutable.

    Use :func:`build_network` rather than calling the constructor directly.
    """

    def __init__(self, buses, lines, slack_bus, parent_line, children, order):
        self.buses: dict[int, Bus] = buses
        self.lines: dict[int, Line] = lines
        self.slack_bus: int = slack_bus
        self._parent_line: dict[int, int | None] = parent_line
        self._children: dict[int, tuple[int, ...]] = children
        # breadth-first order from the slack bus; parents precede children
        self.order: tuple[int, ...] = order
        feeders: dict[Hashable, list[int]] = {}
        for lid in order:
            feeders.setdefault(lines[lid].feeder_id, []).append(lid)
        self._feeder_lines = {f: frozenset(ids) for f, ids in feeders.items()}

    def __repr__(self):
        return (f"Network({len(self.buses)} buses, {len(self.lines)} lines, "
                f"feeders={sorted(self.feeders, key=str)})")

    @property
    def feeders(self) -> frozenset:
        return frozenset(self._feeder_lines)

    def line(self, line_id: int) -> Line:
        try:
            return self.lines[line_id]
        except KeyError:
            raise UnknownLine(f"no line with id {line_id!r}") from None

    def parent(self, line_id: int) -> int | None:
        """Upstream line of ``line_id``, or None for a line leaving the slack bus."""
        self.line(line_id)
        return self._parent_line[line_id]

    def children(self, line_id: int) -> tuple[int, ...]:
        self.line(line_id)
        return self._children[line_id]

    def load_bus(self, line_id: int) -> Bus:
        """The bus supplied by the line (its downstream end)."""
        return self.buses[self.line(line_id).to_bus]

    def subtree_sum(self, values: Mapping[int, float]) -> dict[int, float]:
        """For every line, ``values[line]`` plus the values of all downstream lines.

        One reverse breadth-first pass, O(number of lines).
        """
        totals = {lid: values[lid] for lid in self.order}
        for lid in reversed(self.order):
            parent = self._parent_line[lid]
            if parent is not None:
                totals[parent] += totals[lid]
        return totals


def build_network(buses: Iterable[Bus], lines: Iterable[Line], slack_bus: int) -> Network:
    """Validate a radial network and orient every line away from ``slack_bus``."""
    buses = sorted(buses, key=lambda b: b.id)
    lines = sorted(lines, key=lambda l: l.id)

    bus_map: dict[int, Bus] = {}
    for bus in buses:
        if bus.id in bus_map:
            raise DuplicateId(f"duplicate bus id {bus.id}")
        bus_map[bus.id] = bus
    if slack_bus not in bus_map:
        raise DanglingReference(f"slack bus {slack_bus} is not in the bus list")

    line_map: dict[int, Line] = {}
    adjacency: dict[int, list[tuple[int, int]]] = {b: [] for b in bus_map}
    for line in lines:
        if line.id in line_map:
            raise DuplicateId(f"duplicate line id {line.id}")
        for end in (line.from_bus, line.to_bus):
            if end not in bus_map:
                raise DanglingReference(f"line {line.id} references unknown bus {end}")
        if line.from_bus == line.to_bus:
            raise CycleDetected(f"line {line.id} is a self-loop on bus {line.from_bus}")
        line_map[line.id] = line
        adjacency[line.from_bus].append((line.id, line.to_bus))
        adjacency[line.to_bus].append((line.id, line.from_bus))

    oriented: dict[int, Line] = {}
    parent_line: dict[int, int | None] = {}
    children: dict[int, list[int]] = {}
    upstream_of_bus: dict[int, int | None] = {slack_bus: None}
    order: list[int] = []
    queue = deque([slack_bus])
    while queue:
        bus = queue.popleft()
        incoming = upstream_of_bus[bus]
        for lid, other in sorted(adjacency[bus]):
            if lid == incoming:
                continue
            if other in upstream_of_bus:
                raise CycleDetected(f"line {lid} closes a loop between buses {bus} and {other}")
            line = line_map[lid]
            if line.from_bus != bus:
                line = replace(line, from_bus=bus, to_bus=other)
            oriented[lid] = line
            parent_line[lid] = incoming
            children[lid] = []
            if incoming is not None:
                children[incoming].append(lid)
                if line.feeder_id != oriented[incoming].feeder_id:
                    raise FeederMismatch(
                        f"line {lid} is tagged feeder {line.feeder_id!r} but hangs below "
                        f"line {incoming} of feeder {oriented[incoming].feeder_id!r}")
            upstream_of_bus[other] = lid
            order.append(lid)
            queue.append(other)

    unreachable = sorted(set(bus_map) - set(upstream_of_bus))
    if unreachable:
        raise DisconnectedBus(f"buses unreachable from slack bus {slack_bus}: {unreachable}")

    return Network(bus_map, oriented, slack_bus, parent_line,
                   {k: tuple(v) for k, v in children.items()}, tuple(order))


def downstream_lines(net: Network, line_id: int) -> frozenset[int]:
    """Lines that lose supply when ``line_id`` is out, excluding the line itself."""
    stack = list(net.children(line_id))
    found = set()
    while stack:
        lid = stack.pop()
        found.add(lid)
        stack.extend(net.children(lid))
    return frozenset(found)


def lines_of_feeder(net: Network, feeder) -> frozenset[int]:
    try:
        return net._feeder_lines[feeder]
    except KeyError:
        raise UnknownFeeder(f"no feeder {feeder!r}; known: {sorted(net.feeders, key=str)}") from None
