"""Problem-level types shared by every other module.

Time is a uniform grid of integer interval indices (hourly in the bundled
scenarios). Power forecasts are kW per interval; scheduled energy is kWh,
obtained by multiplying by the interval duration. All types are immutable
after construction and safe to share across threads and processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np


class FleetValidationError(ValueError):
    """Inconsistent fleet data (duplicate ids, length mismatches, ...)."""


class UnknownUnitError(ValueError):
    """A chromosome references a unit that is not part of the fleet."""


@dataclass(frozen=True)
class TimeGrid:
    """Uniform scheduling grid: number of intervals and their duration in hours."""

    intervals_per_day: int = 24
    interval_duration: float = 1.0

    def __post_init__(self):
        if self.intervals_per_day < 1:
            raise ValueError("intervals_per_day must be >= 1")
        if not self.interval_duration > 0:
            raise ValueError("interval_duration must be positive")


@dataclass(frozen=True)
class DerSpec:
    """Static description of one distributed energy resource.

    Cost coefficients define the per-interval dispatch cost
    ``alpha * P**2 + beta * P + gamma`` in EUR, with gamma accrued only in
    intervals where the unit is actually dispatched. ``availability`` is the
    capability window (e.g. PV-only units are available hours 7-17).
    ``metadata`` carries opaque operational attributes (storage state,
    ramping limits, minimum up/down times) that no objective uses.
    """

    unit_id: int
    cost_alpha: float
    cost_beta: float
    cost_gamma: float
    availability: tuple[bool, ...]
    max_power_hint: float = 0.0
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.cost_alpha < 0:
            raise ValueError(f"unit {self.unit_id}: cost_alpha must be >= 0")
        object.__setattr__(self, "availability", tuple(bool(a) for a in self.availability))


@dataclass(frozen=True)
class ForecastSeries:
    """Forecasted maximum obtainable power (kW) per interval for one unit."""

    unit_id: int
    max_power: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "max_power", tuple(float(p) for p in self.max_power))


@dataclass(frozen=True)
class LoadProfile:
    """Requested energy (kWh) per time interval."""

    demand: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "demand", tuple(float(d) for d in self.demand))
        if any(d < 0 for d in self.demand):
            raise ValueError("demand values must be >= 0")

    def __len__(self) -> int:
        return len(self.demand)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.demand, dtype=np.float64)


class Provenance(str, Enum):
    RANDOM = "random"
    SEEDED = "seeded"
    OFFSPRING = "offspring"


@dataclass(frozen=True)
class Gene:
    """One scheduling operation: take ``power_fraction`` of the forecast
    maximum from ``unit_id`` for ``duration`` intervals starting at
    ``start_time``.

    The constructor rejects grid-independent range violations; use
    :meth:`clamped` to create genes whose duration is clipped to the grid.
    """

    unit_id: int
    start_time: int
    duration: int
    power_fraction: float

    def __post_init__(self):
        if self.start_time < 0:
            raise ValueError("start_time must be >= 0")
        if self.duration < 1:
            raise ValueError("duration must be >= 1")
        if not 0.0 <= self.power_fraction <= 1.0:
            raise ValueError("power_fraction must be in [0, 1]")

    @classmethod
    def clamped(cls, unit_id: int, start_time: int, duration: int,
                power_fraction: float, grid: TimeGrid) -> "Gene":
        """Grid-aware factory: clips duration to ``T - start_time``.

        Wraparound past the end of the day is never meaningful for a daily
        schedule, so overlong genes are shortened instead of rejected.
        """
        t = grid.intervals_per_day
        if not 0 <= start_time < t:
            raise ValueError(f"start_time {start_time} outside [0, {t})")
        return cls(unit_id, start_time, min(duration, t - start_time), power_fraction)

    def fits(self, grid: TimeGrid) -> bool:
        return self.start_time + self.duration <= grid.intervals_per_day


@dataclass(frozen=True)
class Chromosome:
    """Ordered, variable-length chain of genes encoding one tentative schedule."""

    genes: tuple[Gene, ...]
    provenance: Provenance = Provenance.OFFSPRING

    def __post_init__(self):
        object.__setattr__(self, "genes", tuple(self.genes))
        if len(self.genes) < 1:
            raise ValueError("a chromosome holds at least one gene")

    def __len__(self) -> int:
        return len(self.genes)

    @cached_property
    def packed(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Gene fields as parallel arrays (units, starts, durations, fractions)."""
        n = len(self.genes)
        units = np.empty(n, dtype=np.int64)
        starts = np.empty(n, dtype=np.int64)
        durs = np.empty(n, dtype=np.int64)
        fracs = np.empty(n, dtype=np.float64)
        for i, g in enumerate(self.genes):
            units[i] = g.unit_id
            starts[i] = g.start_time
            durs[i] = g.duration
            fracs[i] = g.power_fraction
        return units, starts, durs, fracs

    def with_provenance(self, provenance: Provenance) -> "Chromosome":
        if provenance is self.provenance:
            return self
        return Chromosome(self.genes, provenance)


@dataclass(frozen=True)
class EvaluationResult:
    """Objective values and fitness for one interpreted chromosome."""

    cost: float
    dtd: float
    hu: int
    penalty: float
    fitness: float

    def __post_init__(self):
        if self.hu < 0:
            raise ValueError("hu must be >= 0")
        if not 0.0 <= self.penalty <= 1.0:
            raise ValueError("penalty must be in [0, 1]")
        if self.fitness < 0.0:
            raise ValueError("fitness must be >= 0")


class Fleet:
    """Validated fleet handle: O(1) lookup from unit_id to (spec, forecast)
    plus the dense arrays the evaluation paths work on.

    Row ``i`` of every matrix belongs to the unit with the i-th smallest
    unit_id; the fixed layout keeps parallel and serial evaluation
    bit-identical.
    """

    def __init__(self, specs: Iterable[DerSpec], forecasts: Iterable[ForecastSeries],
                 grid: TimeGrid):
        specs = list(specs)
        forecasts = list(forecasts)
        t = grid.intervals_per_day

        ids = [s.unit_id for s in specs]
        if len(set(ids)) != len(ids):
            dupes = sorted({u for u in ids if ids.count(u) > 1})
            raise FleetValidationError(f"duplicate unit_id(s): {dupes}")
        forecast_by_id = {}
        for f in forecasts:
            if f.unit_id in forecast_by_id:
                raise FleetValidationError(f"duplicate forecast for unit {f.unit_id}")
            forecast_by_id[f.unit_id] = f
        if set(forecast_by_id) != set(ids):
            raise FleetValidationError(
                "forecasts and specs must cover the same unit ids "
                f"(specs: {sorted(ids)}, forecasts: {sorted(forecast_by_id)})"
            )

        order = sorted(range(len(specs)), key=lambda k: specs[k].unit_id)
        self.grid = grid
        self.specs: tuple[DerSpec, ...] = tuple(specs[k] for k in order)
        self.forecasts: tuple[ForecastSeries, ...] = tuple(
            forecast_by_id[s.unit_id] for s in self.specs
        )

        for spec, fc in zip(self.specs, self.forecasts):
            if len(spec.availability) != t:
                raise FleetValidationError(
                    f"unit {spec.unit_id}: availability mask has length "
                    f"{len(spec.availability)}, grid has {t} intervals"
                )
            if len(fc.max_power) != t:
                raise FleetValidationError(
                    f"unit {spec.unit_id}: forecast has length "
                    f"{len(fc.max_power)}, grid has {t} intervals"
                )
            for ti, p in enumerate(fc.max_power):
                if p < 0:
                    raise FleetValidationError(
                        f"unit {spec.unit_id}: negative forecast {p} at t={ti}"
                    )
                if p != 0.0 and not spec.availability[ti]:
                    raise FleetValidationError(
                        f"unit {spec.unit_id}: nonzero forecast at t={ti} "
                        "outside the availability window"
                    )

        m = len(self.specs)
        self.unit_ids = np.array([s.unit_id for s in self.specs], dtype=np.int64)
        self.alpha = np.array([s.cost_alpha for s in self.specs], dtype=np.float64)
        self.beta = np.array([s.cost_beta for s in self.specs], dtype=np.float64)
        self.gamma = np.array([s.cost_gamma for s in self.specs], dtype=np.float64)
        self.availability = np.array(
            [s.availability for s in self.specs], dtype=bool
        ).reshape(m, t)
        self.power_cap_kw = np.array(
            [f.max_power for f in self.forecasts], dtype=np.float64
        ).reshape(m, t)
        # kWh obtainable per interval; the single place the unit conversion happens
        self.energy_cap = self.power_cap_kw * grid.interval_duration
        self._row_of = {int(u): i for i, u in enumerate(self.unit_ids)}

    @property
    def size(self) -> int:
        return len(self.specs)

    def row_of(self, unit_id: int) -> int:
        try:
            return self._row_of[unit_id]
        except KeyError:
            raise UnknownUnitError(f"unit {unit_id} is not part of the fleet") from None

    def rows_for(self, units: np.ndarray) -> np.ndarray:
        """Vectorized unit_id -> row translation for packed gene arrays."""
        rows = np.searchsorted(self.unit_ids, units)
        bad = (rows >= self.size) | (self.unit_ids[np.minimum(rows, self.size - 1)] != units)
        if bad.any():
            raise UnknownUnitError(
                f"unit(s) {sorted(set(np.asarray(units)[bad].tolist()))} not in fleet"
            )
        return rows

    def lookup(self, unit_id: int) -> tuple[DerSpec, ForecastSeries]:
        i = self.row_of(unit_id)
        return self.specs[i], self.forecasts[i]

    def validate_chromosome(self, chromosome: Chromosome) -> None:
        """Full validity check used for prior solutions and wire input."""
        t = self.grid.intervals_per_day
        for g in chromosome.genes:
            if g.unit_id not in self._row_of:
                raise UnknownUnitError(f"unit {g.unit_id} is not part of the fleet")
            if g.start_time >= t or g.start_time + g.duration > t:
                raise ValueError(
                    f"gene ({g.unit_id}, {g.start_time}, {g.duration}) exceeds the grid"
                )


def validate_fleet(specs: Iterable[DerSpec], forecasts: Iterable[ForecastSeries],
                   grid: TimeGrid) -> Fleet:
    """Cross-check specs against forecasts and return the fleet handle."""
    return Fleet(specs, forecasts, grid)
