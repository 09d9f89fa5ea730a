"""Compile local rules into temperature-2 tile systems.

A local rule determines each matrix cell from the n x n window to its
southwest, minus the cell itself: the n-1 cells directly to the west and
the n-1 rows of width n directly below, with ⊥ standing for positions
outside the first quadrant.  Every window is compiled to one tile whose
west/south glues spell the window and whose east/north glues spell the
windows of the successor cells, so cooperative temperature-2 growth
reproduces the matrix cell by cell from a single seed tile.

Edge strengths are 1 except on the axes: the seed bonds eastward and
northward at strength 2, first-row tiles bond east-west at strength 2,
and first-column tiles (any window with an all-⊥ west vector but a
nonempty south submatrix) bond north-south at strength 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Sequence

from .matrix import BOTTOM, Coefficients
from .tam import Direction, TileSystem, TileType

# Default horizon for reachability pruning (3^5).
DEFAULT_PRUNE_HORIZON = 243

_TOKEN_RE = re.compile(r"[A-Za-z0-9_.+-]+\Z")


def symbol_token(symbol) -> str:
    """Serialized form of an alphabet symbol; ⊥ serializes as '_'."""
    if symbol is BOTTOM:
        return "_"
    return str(symbol)


def _validate_symbol(symbol) -> None:
    token = symbol_token(symbol)
    if symbol is not BOTTOM and (token == "_" or not _TOKEN_RE.match(token)):
        raise ValueError(
            f"symbol {symbol!r} serializes to {token!r}, which collides "
            "with the glue syntax")


def glue_vector(symbols: Sequence) -> str:
    """Row-vector glue: comma-joined, parentheses omitted for length 1."""
    tokens = [symbol_token(s) for s in symbols]
    if len(tokens) == 1:
        return tokens[0]
    return "(" + ",".join(tokens) + ")"


def glue_rows(rows: Sequence[Sequence]) -> str:
    """Submatrix glue: rows serialized bottom-to-top, joined by '|'."""
    return "|".join(
        "(" + ",".join(symbol_token(s) for s in row) + ")"
        for row in reversed(rows))


@dataclass(frozen=True)
class LocalRule:
    """A total function from windows to the alphabet.

    `evaluate(west, south)` receives the west vector (westmost entry
    first, length n-1) and the south rows (the row directly below first,
    n-1 rows of width n ending at the target column).
    """

    n: int
    alphabet: tuple
    evaluate: Callable[[tuple, tuple], object]
    name: str = ""

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("window size must be at least 2")
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        for s in self.alphabet:
            _validate_symbol(s)
        tokens = [symbol_token(s) for s in self.alphabet]
        if len(set(tokens)) != len(tokens):
            raise ValueError("alphabet symbols must serialize distinctly")


@dataclass(frozen=True)
class WindowContent:
    """The inputs a rule sees when filling one cell."""

    west: tuple
    south: tuple

    def __post_init__(self) -> None:
        width = len(self.west) + 1
        if len(self.south) != len(self.west):
            raise ValueError("window must have n-1 west cells and n-1 south rows")
        if any(len(row) != width for row in self.south):
            raise ValueError("south rows must have width n")

    @property
    def west_all_bottom(self) -> bool:
        return all(s is BOTTOM for s in self.west)

    @property
    def south_all_bottom(self) -> bool:
        return all(s is BOTTOM for row in self.south for s in row)


def window_at(labels: Sequence[Sequence], x: int, y: int, n: int) -> WindowContent:
    """Window contents at (x, y) read from a label grid; ⊥ off-quadrant."""

    def get(i: int, j: int):
        if i < 0 or j < 0:
            return BOTTOM
        return labels[i][j]

    west = tuple(get(x, y - n + 1 + m) for m in range(n - 1))
    south = tuple(
        tuple(get(x - i, y - n + 1 + m) for m in range(n))
        for i in range(1, n))
    return WindowContent(west, south)


def rule_matrix(rule: LocalRule, height: int, width: int) -> list[list]:
    """Evaluate the rule cell by cell in row-major order."""
    if height < 1 or width < 1:
        raise ValueError("dimensions must be positive")
    labels: list[list] = [[None] * width for _ in range(height)]
    for x in range(height):
        for y in range(width):
            w = window_at(labels, x, y, rule.n)
            labels[x][y] = rule.evaluate(w.west, w.south)
    return labels


def build_tile(rule: LocalRule, window: WindowContent,
               tile_id: int = 0) -> TileType:
    """Compile one window into a tile.

    The west/south glues serialize the window itself; the east glue is
    the west vector shifted by the freshly computed cell, and the north
    glue is the south submatrix with the completed row pushed on top.
    """
    if len(window.west) != rule.n - 1:
        raise ValueError("window does not match the rule's window size")
    west, south = window.west, window.south
    b = rule.evaluate(west, south)
    if b not in rule.alphabet:
        raise ValueError(f"rule produced {b!r}, which is not in its alphabet")
    east = west[1:] + (b,)
    completed_row = west + (b,)
    north_rows = (completed_row,) + south[:-1]

    strengths = {"W": 1, "S": 1, "E": 1, "N": 1}
    if window.south_all_bottom and window.west_all_bottom:
        strengths["N"] = strengths["E"] = 2
    elif window.south_all_bottom:
        strengths["W"] = strengths["E"] = 2
    elif window.west_all_bottom:
        strengths["S"] = strengths["N"] = 2

    return TileType.make(
        tile_id, symbol_token(b),
        west=(glue_vector(west), strengths["W"]),
        south=(glue_rows(south), strengths["S"]),
        east=(glue_vector(east), strengths["E"]),
        north=(glue_rows(north_rows), strengths["N"]))


def _domain_windows(rule: LocalRule):
    symbols = (BOTTOM,) + rule.alphabet
    n = rule.n
    for west in product(symbols, repeat=n - 1):
        for south in product(product(symbols, repeat=n), repeat=n - 1):
            yield WindowContent(west, south)


def build_full_system(rule: LocalRule, budget: int = 10 ** 6) -> TileSystem:
    """One tile per window in the rule's domain; temperature 2.

    Windows are enumerated lexicographically with ⊥ ordered before every
    alphabet symbol, which fixes the tile ids.
    """
    count = (len(rule.alphabet) + 1) ** (rule.n * rule.n - 1)
    if count > budget:
        raise ValueError(
            f"domain has {count} windows, over the budget of {budget}")
    tiles = []
    seed_tile = None
    for tile_id, window in enumerate(_domain_windows(rule)):
        tile = build_tile(rule, window, tile_id)
        tiles.append(tile)
        if window.west_all_bottom and window.south_all_bottom:
            seed_tile = tile
    assert seed_tile is not None
    return TileSystem(tuple(tiles), {(0, 0): seed_tile}, 2)


def _window_key(tile: TileType) -> tuple[str, str]:
    return (tile.color(Direction.W), tile.color(Direction.S))


def _glue_tokens(glue: str) -> list[str]:
    tokens = []
    for row in glue.split("|"):
        tokens.extend(row.strip("()").split(","))
    return tokens


def _mentions_bottom(key: tuple[str, str]) -> bool:
    return any(tok == "_" for part in key for tok in _glue_tokens(part))


def _occurring_keys(rule: LocalRule, horizon: tuple[int, int]) -> set[tuple[str, str]]:
    height, width = horizon
    labels = rule_matrix(rule, height, width)
    keys = set()
    for x in range(height):
        for y in range(width):
            w = window_at(labels, x, y, rule.n)
            keys.add((glue_vector(w.west), glue_rows(w.south)))
    return keys


def prune_reachable(system: TileSystem, rule: LocalRule,
                    horizon: tuple[int, int]) -> TileSystem:
    """Drop boundary tiles whose windows never occur within the horizon.

    Tiles for fully defined windows are kept unconditionally; they are
    the generic bulk of the construction, and an interior attachment
    requires both the west and south glues to match, which already pins
    the tile to a window of the matrix.  Tiles whose windows mention ⊥
    are kept only if the window occurs in the matrix over the horizon.
    Kept tiles are renumbered consecutively in their original order.
    """
    height, width = horizon
    if height < 1 or width < 1:
        raise ValueError("horizon must be positive in both dimensions")
    occurring = _occurring_keys(rule, horizon)
    kept = []
    seed_tile = None
    old_seed = {pos for pos in system.seed}
    seed_keys = {_window_key(t) for t in system.seed.values()}
    for tile in system.tiles:
        key = _window_key(tile)
        if _mentions_bottom(key) and key not in occurring:
            continue
        new_tile = replace(tile, id=len(kept))
        kept.append(new_tile)
        if key in seed_keys:
            seed_tile = new_tile
    if seed_tile is None:
        raise ValueError("pruning removed the seed tile")
    seed = {pos: seed_tile for pos in old_seed}
    return TileSystem(tuple(kept), seed, system.temperature)


def horizon_is_stable(rule: LocalRule, horizon: tuple[int, int]) -> bool:
    """True when the horizon's last row and column add no new windows."""
    height, width = horizon
    if height < 2 or width < 2:
        return False
    labels = rule_matrix(rule, height, width)
    interior = set()
    boundary = set()
    for x in range(height):
        for y in range(width):
            w = window_at(labels, x, y, rule.n)
            key = (glue_vector(w.west), glue_rows(w.south))
            if x == height - 1 or y == width - 1:
                boundary.add(key)
            else:
                interior.add(key)
    return boundary <= interior


def delannoy_rule(coeffs: Coefficients) -> LocalRule:
    """The three-neighbor corner recursion as an n = 2 local rule.

    ⊥ neighbors contribute nothing; the all-⊥ window yields 1, matching
    the recursion's corner value.
    """
    a, b, c, p = coeffs.a, coeffs.b, coeffs.c, coeffs.p

    def evaluate(west: tuple, south: tuple):
        (w,) = west
        ((sw, s),) = south
        if w is BOTTOM and sw is BOTTOM and s is BOTTOM:
            return 1
        total = 0
        if w is not BOTTOM:
            total += a * w
        if sw is not BOTTOM:
            total += b * sw
        if s is not BOTTOM:
            total += c * s
        return total % p

    return LocalRule(2, tuple(range(p)), evaluate,
                     name=f"corner-recursion-a{a}-b{b}-c{c}-mod{p}")


def carpet_system() -> TileSystem:
    """The explicit 30-tile system for the mod-3 Sierpinski carpet.

    Hand-rolled rather than compiled: a seed, one first-row tile, one
    first-column tile, and 27 interior tiles, one per west/southwest/south
    value combination (x, y, z) with cell value w = x + y + z mod 3.
    Ids follow the compiled enumeration order (⊥ before residues), so
    this set is glue-for-glue the pruned compiled system.
    """
    tiles: list[TileType] = []

    def add(label: str, west, south, east, north) -> None:
        tiles.append(TileType.make(len(tiles), label, west, south, east, north))

    def interior_block(x: int) -> None:
        for y in range(3):
            for z in range(3):
                w = (x + y + z) % 3
                add(str(w),
                    west=(str(x), 1), south=(f"({y},{z})", 1),
                    east=(str(w), 1), north=(f"({x},{w})", 1))

    add("1", west=("_", 1), south=("(_,_)", 1),
        east=("1", 2), north=("(_,1)", 2))        # seed
    add("1", west=("_", 1), south=("(_,1)", 2),
        east=("1", 1), north=("(_,1)", 2))        # first column
    interior_block(0)
    add("1", west=("1", 2), south=("(_,_)", 1),
        east=("1", 2), north=("(1,1)", 1))        # first row
    interior_block(1)
    interior_block(2)

    return TileSystem(tuple(tiles), {(0, 0): tiles[0]}, 2)
