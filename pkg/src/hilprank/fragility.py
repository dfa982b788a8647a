"""Lifetime classes of poles and their piecewise-linear wind fragility curves.

Each class has a baseline failure probability ``p0`` that applies below the
threshold wind speed ``v_th``. Between ``v_th`` and ``v_max`` the probability
rises linearly to 1, and it stays at 1 above ``v_max``.

Class tables are ordered from the youngest poles to the oldest. Older poles
fail more readily, so ``p0`` must strictly increase along the table, ``v_th``
must not increase and ``v_max`` must strictly decrease.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class FragilityError(ValueError):
    pass


class NonMonotoneP0(FragilityError):
    pass


class NonMonotoneThreshold(FragilityError):
    pass


class OverlappingLifetimes(FragilityError):
    pass


@dataclass(frozen=True)
class LifetimeClass:
    id: int
    lifetime_years: tuple[float, float]
    p0: float
    v_th: float
    v_max: float

    def __post_init__(self):
        lo, hi = self.lifetime_years
        if not 0 <= lo < hi:
            raise ValueError(f"class {self.id}: lifetime range must satisfy 0 <= low < high, got {self.lifetime_years}")
        if not 0 < self.p0 < 1:
            raise ValueError(f"class {self.id}: p0 must be in (0, 1), got {self.p0}")
        if not 0 < self.v_th < self.v_max:
            raise ValueError(f"class {self.id}: need 0 < v_th < v_max, got v_th={self.v_th}, v_max={self.v_max}")
        object.__setattr__(self, "lifetime_years", (float(lo), float(hi)))


@dataclass(frozen=True)
class ClassTable:
    classes: tuple[LifetimeClass, ...]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, class_id: int) -> LifetimeClass:
        for c in self.classes:
            if c.id == class_id:
                return c
        raise KeyError(f"no lifetime class {class_id!r}")

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.classes)


def validate_class_table(classes: Iterable[LifetimeClass]) -> ClassTable:
    classes = tuple(classes)
    if not classes:
        raise FragilityError("a class table needs at least one class")
    ids = [c.id for c in classes]
    if len(set(ids)) != len(ids):
        raise FragilityError(f"duplicate class ids in {ids}")
    for prev, cur in zip(classes, classes[1:]):
        if cur.lifetime_years[0] != prev.lifetime_years[1]:
            raise OverlappingLifetimes(
                f"class {cur.id} lifetime {cur.lifetime_years} does not continue "
                f"class {prev.id} lifetime {prev.lifetime_years}")
        if not cur.p0 > prev.p0:
            raise NonMonotoneP0(f"p0 must strictly increase with age: class {prev.id} has {prev.p0}, "
                                f"class {cur.id} has {cur.p0}")
        if cur.v_th > prev.v_th:
            raise NonMonotoneThreshold(f"v_th must not increase with age: class {prev.id} has {prev.v_th}, "
                                       f"class {cur.id} has {cur.v_th}")
        if not cur.v_max < prev.v_max:
            raise NonMonotoneThreshold(f"v_max must strictly decrease with age: class {prev.id} has "
                                       f"{prev.v_max}, class {cur.id} has {cur.v_max}")
    return ClassTable(classes)


def slope(cls: LifetimeClass) -> float:
    """Rise in failure probability per m/s between ``v_th`` and ``v_max``."""
    return (1.0 - cls.p0) / (cls.v_max - cls.v_th)


def failure_probability(cls: LifetimeClass, v_real: float) -> float:
    if v_real < 0:
        raise ValueError(f"wind speed must be >= 0, got {v_real}")
    if v_real < cls.v_th:
        return cls.p0
    if v_real > cls.v_max:
        return 1.0
    # both boundaries take the linear branch; it meets p0 and 1 there
    return min(1.0, slope(cls) * (v_real - cls.v_th) + cls.p0)


def fragility_curve(cls: LifetimeClass, speeds: Sequence[float] | np.ndarray) -> np.ndarray:
    """Vectorised :func:`failure_probability` over an array of wind speeds."""
    v = np.asarray(speeds, dtype=float)
    if np.any(v < 0):
        raise ValueError("wind speeds must be >= 0")
    linear = slope(cls) * (v - cls.v_th) + cls.p0
    return np.clip(np.where(v < cls.v_th, cls.p0, linear), cls.p0, 1.0)
