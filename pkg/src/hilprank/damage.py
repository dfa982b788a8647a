"""Damaged-pole counts per lifetime class and per line, and line repair times."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal, Mapping, Sequence

from .fragility import ClassTable, failure_probability
from .network import Line, Network

Rounding = Literal["nearest", "ceil"]
ROUNDING_POLICIES: tuple[str, ...] = ("nearest", "ceil")

# q * n is computed in floating point; products such as 0.366667 * 15 = 5.5
# must not land on the wrong side of a rounding boundary.
_ROUND_TOL = 1e-9


class DamageError(ValueError):
    pass


class EmptyClassOnFeeder(DamageError):
    pass


class DamageExceedsInventory(DamageError):
    pass


def round_count(x: float, rounding: Rounding = "nearest") -> int:
    """Round a non-negative expected count to an integer.

    ``nearest`` rounds halves up (away from zero); ``ceil`` rounds any
    fractional part up.
    """
    if rounding == "nearest":
        return int(math.floor(x + 0.5 + _ROUND_TOL))
    if rounding == "ceil":
        return int(math.ceil(x - _ROUND_TOL))
    raise ValueError(f"unknown rounding policy {rounding!r}; expected one of {ROUNDING_POLICIES}")


@dataclass(frozen=True)
class ClassDamage:
    class_id: int
    q: float
    n: int
    b: int


@dataclass(frozen=True)
class LineDamage:
    line_id: int
    damaged_by_class: Mapping[int, int]
    bt: int
    source: Literal["estimated", "observed"]
    t_rep_h: float = 0.0
    # unrounded per-class contributions of an estimate; empty for observations
    expected_by_class: Mapping[int, float] = field(default_factory=dict)


@dataclass(frozen=True)
class RepairParams:
    t_rep_av_h: float = 4.0
    # optional per-line list of individual pole repair durations (hours)
    pole_durations: Mapping[int, Sequence[float]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.t_rep_av_h > 0:
            raise ValueError(f"t_rep_av_h must be > 0, got {self.t_rep_av_h}")


def damaged_in_class(q: float, n: int, rounding: Rounding = "nearest") -> int:
    if not 0 <= q <= 1:
        raise ValueError(f"q must be a probability, got {q}")
    if n < 0:
        raise ValueError(f"pole count must be >= 0, got {n}")
    return min(max(round_count(q * n, rounding), 0), n)


def class_damage(table: ClassTable, class_counts: Mapping[int, int], v_real: float,
                 rounding: Rounding = "nearest") -> tuple[ClassDamage, ...]:
    """Failure probability and damaged count for every class of one feeder."""
    out = []
    for cls in table:
        q = failure_probability(cls, v_real)
        n = class_counts.get(cls.id, 0)
        out.append(ClassDamage(cls.id, q, n, damaged_in_class(q, n, rounding)))
    return tuple(out)


def _apportion(expected: Mapping[int, float], total: int) -> dict[int, int]:
    # largest-remainder split of an integer total across classes
    floors = {c: int(math.floor(e + _ROUND_TOL)) for c, e in expected.items()}
    remaining = total - sum(floors.values())
    by_fraction = sorted(expected, key=lambda c: (-(expected[c] - floors[c]), c))
    for c in by_fraction[:max(remaining, 0)]:
        floors[c] += 1
    return floors


def estimate_line_damage(net: Network, table: ClassTable, per_class_damage: Sequence[ClassDamage],
                         line_id: int, rounding: Rounding = "nearest",
                         params: RepairParams | None = None) -> LineDamage:
    """Spread each class's damaged count over the line's share of that class.

    The expected contributions are summed at full precision and rounded once
    for the line total; the integer per-class split is a largest-remainder
    apportionment of that total.
    """
    line = net.line(line_id)
    damage = {d.class_id: d for d in per_class_damage}
    expected: dict[int, float] = {}
    for cls in table:
        n_line = line.poles(cls.id)
        if n_line == 0:
            continue
        if cls.id not in damage:
            raise DamageError(f"line {line_id} has class {cls.id} poles but no class damage was supplied")
        d = damage[cls.id]
        if d.n == 0:
            if d.b > 0:
                raise EmptyClassOnFeeder(f"class {cls.id} has {d.b} damaged poles but no poles on the feeder")
            expected[cls.id] = 0.0
            continue
        expected[cls.id] = d.b / d.n * n_line
    unknown = set(line.poles_by_class) - set(table.ids)
    if any(line.poles(c) for c in unknown):
        raise DamageError(f"line {line_id} has poles of unknown classes {sorted(unknown)}")

    bt = min(round_count(sum(expected.values()), rounding), line.total_poles)
    ld = LineDamage(line_id, _apportion(expected, bt), bt, "estimated", expected_by_class=expected)
    return _with_repair_time(ld, line, params)


def ingest_observed_damage(net: Network, line_id: int, damaged_by_class: Mapping[int, int],
                           params: RepairParams | None = None) -> LineDamage:
    line = net.line(line_id)
    counts = {int(c): int(k) for c, k in damaged_by_class.items()}
    for c, k in counts.items():
        if k < 0:
            raise DamageError(f"line {line_id}: negative damage count {k} for class {c}")
        if k > line.poles(c):
            raise DamageExceedsInventory(
                f"line {line_id}: {k} damaged poles claimed in class {c}, inventory holds {line.poles(c)}")
    ld = LineDamage(line_id, counts, sum(counts.values()), "observed")
    return _with_repair_time(ld, line, params)


def repair_time(line_damage: LineDamage, line: Line, params: RepairParams | None = None) -> float:
    """Hours until the line is back: crew travel plus the repair of every damaged pole.

    An undamaged line needs no crew and takes zero hours.
    """
    params = params or RepairParams()
    bt = line_damage.bt
    if bt == 0:
        return 0.0
    durations = params.pole_durations.get(line.id)
    if durations is None:
        work = bt * params.t_rep_av_h
    else:
        if len(durations) != bt:
            raise DamageError(f"line {line.id}: {len(durations)} pole durations given for {bt} damaged poles")
        work = float(sum(durations))
    return work + line.travel_time_h


def _with_repair_time(ld: LineDamage, line: Line, params: RepairParams | None) -> LineDamage:
    return replace(ld, t_rep_h=repair_time(ld, line, params))
