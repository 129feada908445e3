"""Chromosome interpretation.

Two steps: genes are replayed in order into a relative allocation matrix
(rows = fleet units by ascending unit_id, columns = time intervals, later
genes overwrite earlier ones for the same unit), then the matrix is scaled
by the forecast maxima to obtain the absolute schedule in kWh.

Both steps are pure functions of immutable inputs; identical inputs give
bit-identical schedules.
"""

from __future__ import annotations

import numpy as np

from .domain import Chromosome, Fleet, TimeGrid


def build_allocation_matrix(chromosome: Chromosome, fleet: Fleet,
                            grid: TimeGrid | None = None) -> np.ndarray:
    """Replay the gene chain into an m x T matrix of power fractions.

    Gene g writes ``g.power_fraction`` into row(g.unit_id), columns
    [start_time, start_time + duration); later writes win.
    """
    grid = grid or fleet.grid
    alloc = np.zeros((fleet.size, grid.intervals_per_day), dtype=np.float64)
    for g in chromosome.genes:
        row = fleet.row_of(g.unit_id)
        alloc[row, g.start_time:g.start_time + g.duration] = g.power_fraction
    return alloc


def to_absolute(alloc: np.ndarray, fleet: Fleet,
                grid: TimeGrid | None = None) -> np.ndarray:
    """Scale fractions by the per-interval obtainable energy (kW * hours)."""
    grid = grid or fleet.grid
    if alloc.shape != (fleet.size, grid.intervals_per_day):
        raise ValueError(
            f"allocation matrix shape {alloc.shape} does not match "
            f"fleet size {fleet.size} and {grid.intervals_per_day} intervals"
        )
    return alloc * fleet.energy_cap


def interpret(chromosome: Chromosome, fleet: Fleet,
              grid: TimeGrid | None = None) -> np.ndarray:
    """Full interpretation: genes -> allocation matrix -> kWh schedule."""
    return to_absolute(build_allocation_matrix(chromosome, fleet, grid), fleet, grid)
