"""Abstract tile assembly model core: tiles, bonds, frontiers, growth.

Positions are (row, column) pairs; row increases northward and column
increases eastward, so the north neighbor of (x, y) is (x+1, y) and the
west neighbor is (x, y-1).  Two abutting edges bond only when both the
glue color and the strength match; a tile may extend an assembly when
every edge abutting an occupied cell matches and the matched strengths
sum to at least the temperature.  The laxer variant, where mismatching
edges merely contribute nothing, is available behind a flag.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

Position = tuple[int, int]


class Direction(Enum):
    N = (1, 0)
    S = (-1, 0)
    E = (0, 1)
    W = (0, -1)

    @property
    def delta(self) -> tuple[int, int]:
        return self.value

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]


_OPPOSITE = {
    Direction.N: Direction.S,
    Direction.S: Direction.N,
    Direction.E: Direction.W,
    Direction.W: Direction.E,
}

# Storage order for the per-edge tuples on TileType.
EDGE_ORDER = (Direction.W, Direction.S, Direction.E, Direction.N)
_EDGE_INDEX = {d: i for i, d in enumerate(EDGE_ORDER)}


@dataclass(frozen=True)
class TileType:
    """A unit square with a glue color and strength on each edge.

    `colors` and `strengths` are stored in EDGE_ORDER (W, S, E, N).
    Tiles do not rotate; `id` is a stable ordinal within its system.
    """

    id: int
    label: str
    colors: tuple[str, str, str, str]
    strengths: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.colors) != 4 or len(self.strengths) != 4:
            raise ValueError("tiles carry exactly four edges")
        if any(s not in (0, 1, 2) for s in self.strengths):
            raise ValueError("edge strengths must be 0, 1, or 2")

    def color(self, d: Direction) -> str:
        return self.colors[_EDGE_INDEX[d]]

    def strength(self, d: Direction) -> int:
        return self.strengths[_EDGE_INDEX[d]]

    @classmethod
    def make(cls, tile_id: int, label: str,
             west: tuple[str, int], south: tuple[str, int],
             east: tuple[str, int], north: tuple[str, int]) -> "TileType":
        edges = (west, south, east, north)
        return cls(tile_id, label,
                   tuple(e[0] for e in edges), tuple(e[1] for e in edges))

    def same_surface(self, other: "TileType") -> bool:
        """Equality on everything observable during assembly (not the id)."""
        return (self.label == other.label and self.colors == other.colors
                and self.strengths == other.strengths)


@dataclass
class TileSystem:
    """A finite tile set, a seed placement, and the temperature."""

    tiles: tuple[TileType, ...]
    seed: dict[Position, TileType]
    temperature: int = 2

    def __post_init__(self) -> None:
        if self.temperature < 1:
            raise ValueError("temperature must be at least 1")
        ids = [t.id for t in self.tiles]
        if len(set(ids)) != len(ids):
            raise ValueError("tile ids must be unique")
        by_id = {t.id: t for t in self.tiles}
        for pos, tile in self.seed.items():
            if by_id.get(tile.id) is not tile:
                raise ValueError(f"seed tile at {pos} is not in the tile set")

    def tile_by_id(self, tile_id: int) -> TileType:
        for t in self.tiles:
            if t.id == tile_id:
                return t
        raise KeyError(tile_id)


@dataclass
class Assembly:
    """A partial placement of tiles with its attachment history.

    `attachment_order` lists every placed position, seed positions first;
    replaying it step by step re-validates each attachment.
    """

    placements: dict[Position, TileType]
    attachment_order: list[Position]
    seed_count: int

    @classmethod
    def from_seed(cls, seed: dict[Position, TileType]) -> "Assembly":
        order = sorted(seed)
        return cls(dict(seed), order, len(order))

    def __len__(self) -> int:
        return len(self.placements)

    def id_map(self) -> dict[Position, int]:
        return {pos: tile.id for pos, tile in self.placements.items()}


def bond_strength(t1: TileType, d: Direction, t2: TileType) -> int:
    """Strength of the bond across t1's edge d against the abutting edge of t2.

    Zero unless both the colors and the strengths of the abutting edges match.
    """
    s = t1.strength(d)
    if t1.color(d) == t2.color(d.opposite) and s == t2.strength(d.opposite):
        return s
    return 0


def can_attach(assembly: Assembly, pos: Position, tile: TileType,
               temperature: int, lax: bool = False) -> bool:
    """Whether `tile` may extend `assembly` at the unoccupied `pos`.

    Strict semantics (default): every edge abutting an occupied neighbor
    must match in color and strength, and the matched strengths must sum
    to at least the temperature.  Lax semantics: mismatching edges are
    tolerated and contribute nothing to the sum.
    """
    if pos in assembly.placements:
        raise ValueError(f"position {pos} is already occupied")
    x, y = pos
    total = 0
    for d in Direction:
        dx, dy = d.delta
        neighbor = assembly.placements.get((x + dx, y + dy))
        if neighbor is None:
            continue
        matched = (tile.color(d) == neighbor.color(d.opposite)
                   and tile.strength(d) == neighbor.strength(d.opposite))
        if matched:
            total += tile.strength(d)
        elif not lax:
            return False
    return total >= temperature


def frontier(assembly: Assembly, system: TileSystem,
             bound: tuple[int, int] | None = None,
             lax: bool = False) -> set[tuple[Position, TileType]]:
    """All (position, tile) pairs currently attachable to the assembly."""
    out: set[tuple[Position, TileType]] = set()
    seen: set[Position] = set()
    for (x, y) in assembly.placements:
        for d in Direction:
            dx, dy = d.delta
            q = (x + dx, y + dy)
            if q in assembly.placements or q in seen:
                continue
            seen.add(q)
            if bound is not None and not (
                    0 <= q[0] < bound[0] and 0 <= q[1] < bound[1]):
                continue
            for t in system.tiles:
                if can_attach(assembly, q, t, system.temperature, lax=lax):
                    out.add((q, t))
    return out


class _StrictAttachIndex:
    """Edge-profile index for fast strict-semantics attachment queries.

    Under strict matching a candidate tile's edge facing an occupied
    neighbor must equal that neighbor's abutting (color, strength) pair
    exactly, so the attachable set at a position is an intersection of
    per-edge buckets, and the bonded strength is determined by the
    neighbors alone.
    """

    def __init__(self, system: TileSystem):
        self.temperature = system.temperature
        self.buckets: dict[Direction, dict[tuple[str, int], frozenset[TileType]]] = {}
        for d in Direction:
            bucket: dict[tuple[str, int], set[TileType]] = defaultdict(set)
            for t in system.tiles:
                bucket[(t.color(d), t.strength(d))].add(t)
            self.buckets[d] = {k: frozenset(v) for k, v in bucket.items()}

    def attachable(self, placements: dict[Position, TileType],
                   pos: Position) -> tuple[TileType, ...]:
        x, y = pos
        profile = []
        total = 0
        for d in Direction:
            dx, dy = d.delta
            nb = placements.get((x + dx, y + dy))
            if nb is None:
                continue
            opp = d.opposite
            color, strength = nb.color(opp), nb.strength(opp)
            profile.append((d, color, strength))
            total += strength
        if total < self.temperature or not profile:
            return ()
        sets = []
        for d, color, strength in profile:
            bucket = self.buckets[d].get((color, strength))
            if bucket is None:
                return ()
            sets.append(bucket)
        candidates = sets[0]
        for s in sets[1:]:
            candidates = candidates & s
            if not candidates:
                return ()
        return tuple(sorted(candidates, key=lambda t: t.id))


def assemble_bounded(system: TileSystem, bound: tuple[int, int],
                     order_seed: int, lax: bool = False) -> Assembly:
    """Grow the seed until the in-bounds frontier empties.

    Each step draws uniformly from the current frontier pairs using a
    generator seeded by `order_seed`, so runs are bit-reproducible.  The
    bound is the half-open region [0, height) x [0, width).
    """
    height, width = bound
    if height < 1 or width < 1:
        raise ValueError("bound must be positive in both dimensions")
    for (x, y) in system.seed:
        if not (0 <= x < height and 0 <= y < width):
            raise ValueError("bound must contain the seed")
    rng = random.Random(order_seed)
    assembly = Assembly.from_seed(system.seed)
    placements = assembly.placements
    index = None if lax else _StrictAttachIndex(system)

    def attachable(pos: Position) -> tuple[TileType, ...]:
        if index is not None:
            return index.attachable(placements, pos)
        return tuple(t for t in system.tiles
                     if can_attach(assembly, pos, t, system.temperature, lax=True))

    def in_bound(pos: Position) -> bool:
        return 0 <= pos[0] < height and 0 <= pos[1] < width

    candidates: dict[Position, tuple[TileType, ...]] = {}

    def refresh(pos: Position) -> None:
        if pos in placements or not in_bound(pos):
            candidates.pop(pos, None)
            return
        tiles = attachable(pos)
        if tiles:
            candidates[pos] = tiles
        else:
            candidates.pop(pos, None)

    for (x, y) in placements:
        for d in Direction:
            dx, dy = d.delta
            q = (x + dx, y + dy)
            if q not in placements:
                refresh(q)

    while candidates:
        pairs = [(pos, t) for pos in sorted(candidates)
                 for t in candidates[pos]]
        pos, tile = pairs[rng.randrange(len(pairs))]
        placements[pos] = tile
        assembly.attachment_order.append(pos)
        candidates.pop(pos, None)
        x, y = pos
        for d in Direction:
            dx, dy = d.delta
            refresh((x + dx, y + dy))
    return assembly


@dataclass(frozen=True)
class DirectednessResult:
    directed: bool
    witness: tuple[Position, int | None, int | None] | None


def is_directed_empirically(system: TileSystem, bound: tuple[int, int],
                            trials: int, base_seed: int = 0,
                            lax: bool = False) -> DirectednessResult:
    """Compare placement maps across independently seeded runs.

    Returns the first position where two runs disagree, with the two tile
    ids (None marks a position one run never filled).
    """
    if trials < 2:
        raise ValueError("at least two trials are required")
    reference = assemble_bounded(system, bound, base_seed, lax=lax).id_map()
    for k in range(1, trials):
        current = assemble_bounded(system, bound, base_seed + k, lax=lax).id_map()
        if current == reference:
            continue
        for pos in sorted(set(reference) | set(current)):
            a, b = reference.get(pos), current.get(pos)
            if a != b:
                return DirectednessResult(False, (pos, a, b))
    return DirectednessResult(True, None)


def replay_is_valid(assembly: Assembly, temperature: int,
                    lax: bool = False) -> bool:
    """Re-validate an assembly against its own attachment order."""
    order = assembly.attachment_order
    if sorted(order) != sorted(assembly.placements):
        return False
    seed = {pos: assembly.placements[pos]
            for pos in order[:assembly.seed_count]}
    partial = Assembly.from_seed(seed)
    for pos in order[assembly.seed_count:]:
        tile = assembly.placements[pos]
        if not can_attach(partial, pos, tile, temperature, lax=lax):
            return False
        partial.placements[pos] = tile
        partial.attachment_order.append(pos)
    return True
