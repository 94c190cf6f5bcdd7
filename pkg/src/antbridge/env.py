"""Arena geometry: grid, ditch bars, nest, and feeding spots.

The arena is a bounded integer grid. Every cell has exactly one kind:

* ``FREE``   -- open ground,
* ``DITCH``  -- part of a bar; impassable unless bridged by an agent,
* ``NEST``   -- delivery zone (the rectangle enclosed by the three bars),
* ``FOOD``   -- belongs to a feeding spot holding a finite food amount.

Distances everywhere in this package are Chebyshev: a diagonal neighbour
counts as distance 1, so the ``radius``-neighbourhood of a cell is the
clipped ``(2r+1) x (2r+1)`` square around it.

Geometry is fixed after construction; the only run-time mutable state is
``FeedingSpot.remaining``, which each simulation owns privately (build one
``Environment`` per trial).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, NamedTuple, Sequence

import numpy as np


class Position(NamedTuple):
    """Integer cell coordinates: ``x`` is the column, ``y`` the row."""

    x: int
    y: int


class Rect(NamedTuple):
    """Axis-aligned rectangle of cells, corners inclusive."""

    x0: int
    y0: int
    x1: int
    y1: int

    def validate(self, name: str = "rect") -> None:
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise GeometryError(f"{name}: min corner exceeds max corner: {self}")

    def contains(self, p: Position) -> bool:
        return self.x0 <= p.x <= self.x1 and self.y0 <= p.y <= self.y1

    def intersects(self, other: "Rect") -> bool:
        return not (
            self.x1 < other.x0
            or other.x1 < self.x0
            or self.y1 < other.y0
            or other.y1 < self.y0
        )

    def cells(self) -> Iterator[Position]:
        """All member cells in row-major order (y outer, x inner)."""
        for y in range(self.y0, self.y1 + 1):
            for x in range(self.x0, self.x1 + 1):
                yield Position(x, y)

    @property
    def center(self) -> Position:
        """Center cell; for even extents the upper median is used."""
        return Position((self.x0 + self.x1 + 1) // 2, (self.y0 + self.y1 + 1) // 2)

    @property
    def n_cells(self) -> int:
        return (self.x1 - self.x0 + 1) * (self.y1 - self.y0 + 1)


class CellKind(IntEnum):
    FREE = 0
    DITCH = 1
    NEST = 2
    FOOD = 3


class GeometryError(ValueError):
    """Raised when a configured rectangle is out of bounds or overlaps."""


@dataclass
class FeedingSpot:
    """A rectangular food patch with a finite integer amount.

    ``remaining`` only ever decreases, by exactly one unit per pickup.
    The cells keep their FOOD kind after the spot empties.
    """

    id: int
    rect: Rect
    remaining: int

    @property
    def center(self) -> Position:
        return self.rect.center


@dataclass(frozen=True)
class SpotConfig:
    rect: Rect
    amount: int


# Classic arena: 100x100 grid, two vertical bars joined by a horizontal one,
# enclosing the nest; three feeding spots spread along the open side.
DEFAULT_WIDTH = 100
DEFAULT_HEIGHT = 100
DEFAULT_BARS = (
    Rect(30, 30, 33, 70),  # leftbar
    Rect(70, 30, 73, 70),  # rightbar
    Rect(30, 70, 73, 73),  # centerbar
)
DEFAULT_NEST = Rect(34, 30, 69, 69)
DEFAULT_SPOT_CENTERS = (Position(20, 15), Position(50, 15), Position(80, 15))
DEFAULT_SPOT_SIZE = 8
DEFAULT_FOOD_TOTAL = 240


def split_food(total: int, ratio: Sequence[int]) -> list[int]:
    """Apportion ``total`` food units by an integer ratio.

    Uses largest-remainder rounding so the parts always sum to ``total``
    even when the ratio sum does not divide it (e.g. 4:2:1 into 240).
    """
    if total < 0 or any(r <= 0 for r in ratio):
        raise ValueError(f"invalid food split: total={total}, ratio={ratio}")
    denom = sum(ratio)
    shares = [total * r / denom for r in ratio]
    parts = [int(s) for s in shares]
    leftover = total - sum(parts)
    order = sorted(range(len(ratio)), key=lambda i: (parts[i] - shares[i], i))
    for i in order[:leftover]:
        parts[i] += 1
    return parts


def spot_rect(center: Position, size: int = DEFAULT_SPOT_SIZE) -> Rect:
    """Square spot rectangle of ``size`` cells whose center cell is ``center``."""
    half = size // 2
    return Rect(center.x - half, center.y - half, center.x + size - half - 1, center.y + size - half - 1)


@dataclass(frozen=True)
class EnvironmentConfig:
    """Declarative arena description consumed by :func:`build_environment`."""

    width: int = DEFAULT_WIDTH
    height: int = DEFAULT_HEIGHT
    bars: tuple[Rect, ...] = DEFAULT_BARS
    nest: Rect = DEFAULT_NEST
    spots: tuple[SpotConfig, ...] = ()

    @staticmethod
    def default(ratio: Sequence[int] = (2, 1, 1), total: int = DEFAULT_FOOD_TOTAL) -> "EnvironmentConfig":
        """Classic geometry with three spots sized by ``ratio`` of ``total``."""
        amounts = split_food(total, ratio)
        spots = tuple(
            SpotConfig(spot_rect(c), amounts[i]) for i, c in enumerate(DEFAULT_SPOT_CENTERS)
        )
        return EnvironmentConfig(spots=spots)

    @staticmethod
    def classic_single_spot(total: int = DEFAULT_FOOD_TOTAL) -> "EnvironmentConfig":
        """Classic geometry with one central feeding spot holding ``total``."""
        return EnvironmentConfig(spots=(SpotConfig(spot_rect(Position(50, 15)), total),))


def neighborhood(p: Position, radius: int, width: int, height: int) -> list[Position]:
    """In-bounds positions within Chebyshev ``radius`` of ``p``, excluding ``p``.

    Order is row-major over the clipped square: y from low to high, x from
    low to high. Every tie-break in the package leans on this order.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    out = []
    for y in range(max(0, p.y - radius), min(height - 1, p.y + radius) + 1):
        for x in range(max(0, p.x - radius), min(width - 1, p.x + radius) + 1):
            if x == p.x and y == p.y:
                continue
            out.append(Position(x, y))
    return out


class Environment:
    """Immutable arena geometry plus per-run feeding-spot bookkeeping.

    Attributes:
        width, height: Grid dimensions in cells.
        bars: Ditch rectangles (they may overlap each other; their union is
            the ditch set).
        nest: The delivery rectangle.
        spots: Feeding spots, id equal to list index.
        kind: ``(height, width)`` int8 array of :class:`CellKind` values.
        spot_id: ``(height, width)`` int16 array, spot id on FOOD cells,
            -1 elsewhere.
        area: ``(height, width)`` int16 array mapping each cell to the id of
            the Chebyshev-nearest spot center (ties to the lowest id); -1
            when the arena has no spots.
    """

    def __init__(self, config: EnvironmentConfig):
        if config.width < 1 or config.height < 1:
            raise GeometryError(f"grid must be at least 1x1, got {config.width}x{config.height}")
        self.width = config.width
        self.height = config.height
        self.bars = tuple(config.bars)
        self.nest = config.nest
        self.spots = [FeedingSpot(i, sc.rect, sc.amount) for i, sc in enumerate(config.spots)]

        self._validate_rects(config)

        kind = np.zeros((self.height, self.width), dtype=np.int8)
        for bar in self.bars:
            kind[bar.y0 : bar.y1 + 1, bar.x0 : bar.x1 + 1] = CellKind.DITCH
        kind[self.nest.y0 : self.nest.y1 + 1, self.nest.x0 : self.nest.x1 + 1] = CellKind.NEST
        spot_id = np.full((self.height, self.width), -1, dtype=np.int16)
        for spot in self.spots:
            r = spot.rect
            kind[r.y0 : r.y1 + 1, r.x0 : r.x1 + 1] = CellKind.FOOD
            spot_id[r.y0 : r.y1 + 1, r.x0 : r.x1 + 1] = spot.id
        self.kind = kind
        self.spot_id = spot_id
        self.walkable = kind != CellKind.DITCH
        self.area = self._build_area_map()

    def _validate_rects(self, config: EnvironmentConfig) -> None:
        bounds = Rect(0, 0, self.width - 1, self.height - 1)

        def check_bounds(r: Rect, name: str) -> None:
            r.validate(name)
            if not (bounds.contains(Position(r.x0, r.y0)) and bounds.contains(Position(r.x1, r.y1))):
                raise GeometryError(f"{name} {r} exceeds the {self.width}x{self.height} grid")

        check_bounds(self.nest, "nest")
        for i, bar in enumerate(self.bars):
            check_bounds(bar, f"bar[{i}]")
            if bar.intersects(self.nest):
                raise GeometryError(f"bar[{i}] {bar} overlaps the nest {self.nest}")
        for spot in self.spots:
            name = f"spot[{spot.id}]"
            check_bounds(spot.rect, name)
            if spot.remaining < 0:
                raise GeometryError(f"{name}: negative food amount {spot.remaining}")
            if spot.rect.intersects(self.nest):
                raise GeometryError(f"{name} {spot.rect} overlaps the nest {self.nest}")
            for i, bar in enumerate(self.bars):
                if spot.rect.intersects(bar):
                    raise GeometryError(f"{name} {spot.rect} overlaps bar[{i}] {bar}")
            for other in self.spots:
                if other.id < spot.id and spot.rect.intersects(other.rect):
                    raise GeometryError(
                        f"{name} {spot.rect} overlaps spot[{other.id}] {other.rect}"
                    )

    def _build_area_map(self) -> np.ndarray:
        if not self.spots:
            return np.full((self.height, self.width), -1, dtype=np.int16)
        ys = np.arange(self.height)[:, None]
        xs = np.arange(self.width)[None, :]
        # Stack one Chebyshev-distance plane per spot; argmin picks the first
        # (lowest id) on ties.
        dists = np.stack(
            [
                np.maximum(np.abs(xs - s.center.x), np.abs(ys - s.center.y))
                for s in self.spots
            ]
        )
        return np.argmin(dists, axis=0).astype(np.int16)

    # -- queries ---------------------------------------------------------

    def in_bounds(self, p: Position) -> bool:
        return 0 <= p.x < self.width and 0 <= p.y < self.height

    def cell_kind(self, p: Position) -> CellKind:
        """Kind of cell ``p`` (``p`` must be in bounds)."""
        return CellKind(self.kind[p.y, p.x])

    def spot_at(self, p: Position) -> FeedingSpot | None:
        """The feeding spot owning cell ``p``, or None."""
        sid = self.spot_id[p.y, p.x]
        return self.spots[sid] if sid >= 0 else None

    def neighborhood(self, p: Position, radius: int) -> list[Position]:
        return neighborhood(p, radius, self.width, self.height)

    def area_of(self, p: Position) -> int:
        """Id of the spot whose center is Chebyshev-nearest to ``p``."""
        return int(self.area[p.y, p.x])

    def nest_cells(self) -> list[Position]:
        """All nest cells in row-major order."""
        return list(self.nest.cells())

    def nearest_nest_cell(self, p: Position) -> Position:
        """The nest cell Chebyshev-nearest to ``p`` (componentwise clamp)."""
        return Position(
            min(max(p.x, self.nest.x0), self.nest.x1),
            min(max(p.y, self.nest.y0), self.nest.y1),
        )

    @property
    def total_food(self) -> int:
        return sum(s.remaining for s in self.spots)


def build_environment(config: EnvironmentConfig) -> Environment:
    """Construct and validate an arena from its configuration."""
    return Environment(config)
