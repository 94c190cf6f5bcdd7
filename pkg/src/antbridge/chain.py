"""Chains: connected groups of bridging agents on ditch cells.

A chain is one 8-connected component of Altruism-state agents over the
ditch cells they occupy. Its size ``x`` drives the probability models:

* enter:        p = c_e0 + c_e1 * x / (c_e2 + x)           (saturating)
* leave, size:  p = c_s0 + c_s1 / (c_s2 + x ** nu)         (decaying)
* leave, pheromone-coupled:
        b = min(eta * ln(space + 1) + epsilon, 1)
        p = a / (1 + b * x**2)

The pheromone-coupled model is the default leave rule; the other two are
wired in by the ``entry_model="lioni"`` toggle of the simulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .env import Position

# 8-connectivity offsets in row-major order.
_OFFSETS = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))


@dataclass(frozen=True)
class ChainModelParams:
    """Constants of the enter/leave probability models.

    ``a``, ``eta`` and ``epsilon`` parameterise the pheromone-coupled leave
    probability; the ``c_*``/``nu`` constants parameterise the saturating
    enter and size-only leave models.
    """

    a: float = 0.4
    eta: float = 0.1
    epsilon: float = 0.05
    c_e0: float = 0.05
    c_e1: float = 0.3
    c_e2: float = 5.0
    c_s0: float = 0.01
    c_s1: float = 0.5
    c_s2: float = 1.0
    nu: float = 2.0

    def __post_init__(self) -> None:
        if not 0.0 < self.a <= 1.0:
            raise ValueError(f"a must be in (0, 1], got {self.a}")
        for name in ("eta", "epsilon"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class Chain:
    """One connected component of bridging agents.

    The id is the lowest member agent id, which makes chain identity
    deterministic across runs.
    """

    id: int
    agent_ids: tuple[int, ...]
    cells: tuple[Position, ...]

    @property
    def size(self) -> int:
        return len(self.agent_ids)


def _component_from(
    start: Position, occupied: dict[Position, int], seen: set[Position]
) -> tuple[list[int], list[Position]]:
    ids: list[int] = []
    cells: list[Position] = []
    stack = [start]
    seen.add(start)
    while stack:
        pos = stack.pop()
        ids.append(occupied[pos])
        cells.append(pos)
        for dx, dy in _OFFSETS:
            q = Position(pos.x + dx, pos.y + dy)
            if q in occupied and q not in seen:
                seen.add(q)
                stack.append(q)
    return ids, cells


def find_chains(bridge_at: dict[Position, int]) -> list[Chain]:
    """Partition bridging agents into 8-connected chains.

    Args:
        bridge_at: Occupied ditch cell -> agent id.

    Returns:
        Chains sorted by id (= lowest member agent id); members and cells
        are sorted within each chain.
    """
    seen: set[Position] = set()
    chains = []
    for pos in bridge_at:
        if pos in seen:
            continue
        ids, cells = _component_from(pos, bridge_at, seen)
        order = sorted(range(len(ids)), key=lambda i: ids[i])
        chains.append(
            Chain(
                id=min(ids),
                agent_ids=tuple(ids[i] for i in order),
                cells=tuple(sorted(cells)),
            )
        )
    chains.sort(key=lambda c: c.id)
    return chains


def chain_size_at(pos: Position, bridge_at: dict[Position, int]) -> int:
    """Size of the chain containing ``pos`` (0 if the cell is unoccupied)."""
    if pos not in bridge_at:
        return 0
    seen: set[Position] = set()
    ids, _ = _component_from(pos, bridge_at, seen)
    return len(ids)


def adjacent_chain_size(pos: Position, bridge_at: dict[Position, int]) -> int:
    """Total size of the chains 8-adjacent to (or at) an unoccupied cell.

    This is the size of the chain that an agent stepping onto ``pos``
    would join (chains touching ``pos`` merge through it).
    """
    seen: set[Position] = set()
    total = 0
    for dx, dy in _OFFSETS:
        q = Position(pos.x + dx, pos.y + dy)
        if q in bridge_at and q not in seen:
            ids, _ = _component_from(q, bridge_at, seen)
            total += len(ids)
    return total


def p_enter(x: int, params: ChainModelParams) -> float:
    """Probability of joining a chain of size ``x`` (saturating model)."""
    if x < 0:
        raise ValueError(f"chain size must be >= 0, got {x}")
    p = params.c_e0 + params.c_e1 * x / (params.c_e2 + x)
    return min(max(p, 0.0), 1.0)


def p_leave_lioni(x: int, params: ChainModelParams) -> float:
    """Probability of leaving a chain of size ``x`` (size-only model)."""
    if x < 0:
        raise ValueError(f"chain size must be >= 0, got {x}")
    p = params.c_s0 + params.c_s1 / (params.c_s2 + x**params.nu)
    return min(max(p, 0.0), 1.0)


def p_leave(x: int, space_at_cell: float, params: ChainModelParams) -> float:
    """Pheromone-coupled probability of leaving a chain of size ``x``.

    The coupling coefficient ``b`` grows with the airborne pheromone at the
    agent's own cell, so well-scented (busy) chains hold their members
    longer; ``b`` saturates at 1.

    Args:
        x: Size of the agent's chain (>= 1; the agent itself counts).
        space_at_cell: Airborne pheromone at the agent's cell (>= 0).
    """
    if x < 1:
        raise ValueError(f"chain size must be >= 1, got {x}")
    if space_at_cell < 0:
        raise ValueError(f"space value must be >= 0, got {space_at_cell}")
    b = min(params.eta * math.log(space_at_cell + 1.0) + params.epsilon, 1.0)
    return params.a / (1.0 + b * x * x)
