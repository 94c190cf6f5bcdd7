"""Two-layer pheromone field with an evaporation-diffusion stencil.

The field holds two non-negative scalar layers over the grid:

* ``ground`` -- pheromone deposited by agents; it only evaporates,
* ``space``  -- airborne pheromone; the only layer agents can sense.

One update step computes, for every cell, reading only pre-step values
(double buffering; out-of-grid neighbour reads are zero):

    diffused = r_a * space
             + r_b * (sum of 4 orthogonal neighbours - 4 * space)
             + r_c * (sum of 4 diagonal neighbours   - 4 * space)
    space'   = diffused + r_e * ground
    ground'  = ground - r_e * ground

Summation order is fixed so that the vectorised kernel is bit-identical
to a per-cell evaluation: orthogonal neighbours are added in the order
(x, y+1), (x, y-1), (x+1, y), (x-1, y); diagonals in the order
(x+1, y+1), (x+1, y-1), (x-1, y+1), (x-1, y-1).

With ``r_a >= 4 * (r_b + r_c)`` every stencil coefficient is non-negative,
so the update preserves non-negativity of both layers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .env import Position, neighborhood


@dataclass(frozen=True)
class FieldRates:
    """Per-tick rate constants of the field update.

    Attributes:
        r_a: Airborne decay rate (fraction of a cell's space value kept).
        r_b: Diffusion rate to/from the four orthogonal neighbours.
        r_c: Diffusion rate to/from the four diagonal neighbours.
        r_e: Ground-to-space evaporation rate.
    """

    r_a: float = 0.788
    r_b: float = 0.043
    r_c: float = 0.010
    r_e: float = 0.05

    def __post_init__(self) -> None:
        for name in ("r_a", "r_b", "r_c", "r_e"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")
        if self.r_a < 4.0 * (self.r_b + self.r_c):
            raise ValueError(
                f"r_a must be >= 4*(r_b + r_c) to keep the field non-negative: "
                f"r_a={self.r_a}, 4*(r_b+r_c)={4.0 * (self.r_b + self.r_c)}"
            )


class PheromoneField:
    """Ground and airborne pheromone layers over a ``width`` x ``height`` grid."""

    def __init__(self, width: int, height: int, rates: FieldRates | None = None):
        self.width = width
        self.height = height
        self.rates = rates if rates is not None else FieldRates()
        self.ground = np.zeros((height, width), dtype=np.float64)
        self.space = np.zeros((height, width), dtype=np.float64)
        # Scratch buffer for the padded pre-step snapshot.
        self._pad = np.zeros((height + 2, width + 2), dtype=np.float64)

    def deposit(self, p: Position, amount: float) -> None:
        """Add ``amount`` (>= 0) of ground pheromone at cell ``p``."""
        if amount < 0:
            raise ValueError(f"deposit amount must be >= 0, got {amount}")
        self.ground[p.y, p.x] += amount

    def step(self) -> None:
        """Advance both layers one tick (see module docstring for the rule)."""
        r = self.rates
        s = self.space
        pad = self._pad
        pad[1:-1, 1:-1] = s
        # Neighbour sums, added in the documented order.
        orth = pad[2:, 1:-1] + pad[:-2, 1:-1] + pad[1:-1, 2:] + pad[1:-1, :-2]
        diag = pad[2:, 2:] + pad[:-2, 2:] + pad[2:, :-2] + pad[:-2, :-2]
        diffused = r.r_a * s + r.r_b * (orth - 4.0 * s) + r.r_c * (diag - 4.0 * s)
        self.space = diffused + r.r_e * self.ground
        self.ground = self.ground - r.r_e * self.ground

    def sense_space(self, p: Position, radius: int) -> tuple[Position, float]:
        """Strongest airborne value within ``radius`` of ``p``, including ``p``.

        Scans ``p`` first, then the neighbourhood in row-major order, and
        keeps the first maximum, so ties resolve to ``p`` and then to the
        earlier cell in row-major order.
        """
        if radius not in (1, 2):
            raise ValueError(f"sensing radius must be 1 or 2, got {radius}")
        space = self.space
        best_pos = p
        best = float(space[p.y, p.x])
        for q in neighborhood(p, radius, self.width, self.height):
            v = float(space[q.y, q.x])
            if v > best:
                best = v
                best_pos = q
        return best_pos, best

    def copy(self) -> "PheromoneField":
        dup = PheromoneField(self.width, self.height, self.rates)
        dup.ground = self.ground.copy()
        dup.space = self.space.copy()
        return dup


def save_snapshot(field: PheromoneField, layer: str, tick: int, path) -> None:
    """Dump one layer as text: a header line then row-major cell values.

    Header format: ``width height layer tick``. Values are written one row
    per line with full float precision.
    """
    if layer not in ("ground", "space"):
        raise ValueError(f"unknown layer {layer!r}")
    grid = getattr(field, layer)
    with open(path, "w") as fh:
        fh.write(f"{field.width} {field.height} {layer} {tick}\n")
        for row in grid:
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def load_snapshot(path) -> tuple[np.ndarray, str, int]:
    """Read a layer dump written by :func:`save_snapshot`.

    Returns:
        The grid, the layer name, and the tick it was captured at.
    """
    with open(path) as fh:
        w_s, h_s, layer, tick_s = fh.readline().split()
        width, height = int(w_s), int(h_s)
        grid = np.array(
            [[float(v) for v in fh.readline().split()] for _ in range(height)],
            dtype=np.float64,
        )
    if grid.shape != (height, width):
        raise ValueError(f"snapshot shape {grid.shape} does not match header {height}x{width}")
    return grid, layer, int(tick_s)
