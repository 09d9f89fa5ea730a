"""Versioned text formats and pixmap rendering.

Three line-oriented formats, each opened by a version header:

grid v1           residue window
    grid v1
    <height> <width> <modulus>
    <row 0, space-separated residues>   (row 0 is the southmost row)
    ...

tileset v1        tile system
    tileset v1
    temperature <t>
    seed <x> <y> <tile id>              (one line per seed placement)
    tile <id> <label> W <glue> <s> S <glue> <s> E <glue> <s> N <glue> <s>

assembly v1       placement dump
    assembly v1
    bound <height> <width>
    placed <count>
    place <x> <y> <tile id> <label>     (sorted by position)

Glue tokens never contain whitespace, so every line splits on spaces.
Assembly dumps are written in position order, not attachment order, so
two runs of a directed system produce byte-identical dumps.  Images are
binary portable pixmaps (P6) with matrix row 0 along the bottom edge.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field

import numpy as np

from .matrix import ResidueMatrix
from .tam import Assembly, Direction, Position, TileSystem, TileType

GRID_HEADER = "grid v1"
TILESET_HEADER = "tileset v1"
ASSEMBLY_HEADER = "assembly v1"

_EDGE_LETTERS = (("W", Direction.W), ("S", Direction.S),
                 ("E", Direction.E), ("N", Direction.N))


class FormatError(ValueError):
    """Raised for malformed or mislabeled input files."""


def write_grid(matrix: ResidueMatrix) -> str:
    lines = [GRID_HEADER,
             f"{matrix.height} {matrix.width} {matrix.modulus}"]
    for row in matrix.entries:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> ResidueMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != GRID_HEADER:
        raise FormatError(f"expected '{GRID_HEADER}' header")
    try:
        height, width, modulus = (int(v) for v in lines[1].split())
    except (IndexError, ValueError) as exc:
        raise FormatError("malformed grid dimension line") from exc
    rows = lines[2:]
    if len(rows) != height:
        raise FormatError(f"expected {height} rows, found {len(rows)}")
    try:
        data = [[int(v) for v in row.split()] for row in rows]
    except ValueError as exc:
        raise FormatError("grid entries must be integers") from exc
    if any(len(row) != width for row in data):
        raise FormatError("grid row width mismatch")
    return ResidueMatrix(modulus, np.array(data, dtype=np.int64))


def write_tileset(system: TileSystem) -> str:
    lines = [TILESET_HEADER, f"temperature {system.temperature}"]
    for (x, y), tile in sorted(system.seed.items()):
        lines.append(f"seed {x} {y} {tile.id}")
    for tile in sorted(system.tiles, key=lambda t: t.id):
        parts = [f"tile {tile.id} {tile.label}"]
        for letter, d in _EDGE_LETTERS:
            parts.append(f"{letter} {tile.color(d)} {tile.strength(d)}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_tileset(text: str) -> TileSystem:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != TILESET_HEADER:
        raise FormatError(f"expected '{TILESET_HEADER}' header")
    temperature = None
    seed_records: list[tuple[Position, int]] = []
    tiles: list[TileType] = []
    for line in lines[1:]:
        tokens = line.split()
        kind = tokens[0]
        try:
            if kind == "temperature":
                temperature = int(tokens[1])
            elif kind == "seed":
                seed_records.append(((int(tokens[1]), int(tokens[2])),
                                     int(tokens[3])))
            elif kind == "tile":
                if len(tokens) != 15:
                    raise FormatError(f"malformed tile record: {line!r}")
                tile_id, label = int(tokens[1]), tokens[2]
                edges = {}
                for i in range(3, 15, 3):
                    edges[tokens[i]] = (tokens[i + 1], int(tokens[i + 2]))
                if set(edges) != {"W", "S", "E", "N"}:
                    raise FormatError(f"tile {tile_id} is missing edges")
                tiles.append(TileType.make(
                    tile_id, label, west=edges["W"], south=edges["S"],
                    east=edges["E"], north=edges["N"]))
            else:
                raise FormatError(f"unknown record kind {kind!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed record: {line!r}") from exc
    if temperature is None:
        raise FormatError("missing temperature record")
    if not seed_records:
        raise FormatError("missing seed record")
    by_id = {t.id: t for t in tiles}
    try:
        seed = {pos: by_id[tile_id] for pos, tile_id in seed_records}
    except KeyError as exc:
        raise FormatError(f"seed references unknown tile id {exc}") from exc
    return TileSystem(tuple(tiles), seed, temperature)


def write_assembly(assembly: Assembly, bound: tuple[int, int]) -> str:
    lines = [ASSEMBLY_HEADER,
             f"bound {bound[0]} {bound[1]}",
             f"placed {len(assembly.placements)}"]
    for (x, y) in sorted(assembly.placements):
        tile = assembly.placements[(x, y)]
        lines.append(f"place {x} {y} {tile.id} {tile.label}")
    return "\n".join(lines) + "\n"


def parse_assembly(text: str) -> tuple[tuple[int, int], dict[Position, tuple[int, str]]]:
    """Returns the bound and a map position -> (tile id, label)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != ASSEMBLY_HEADER:
        raise FormatError(f"expected '{ASSEMBLY_HEADER}' header")
    bound = None
    count = None
    placements: dict[Position, tuple[int, str]] = {}
    for line in lines[1:]:
        tokens = line.split()
        try:
            if tokens[0] == "bound":
                bound = (int(tokens[1]), int(tokens[2]))
            elif tokens[0] == "placed":
                count = int(tokens[1])
            elif tokens[0] == "place":
                placements[(int(tokens[1]), int(tokens[2]))] = (
                    int(tokens[3]), tokens[4])
            else:
                raise FormatError(f"unknown record kind {tokens[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed record: {line!r}") from exc
    if bound is None:
        raise FormatError("missing bound record")
    if count is not None and count != len(placements):
        raise FormatError("placement count does not match the records")
    return bound, placements


RGB = tuple[int, int, int]


@dataclass(frozen=True)
class RenderSpec:
    """How residues map to pixels."""

    palette: dict[int, RGB]
    cell_size: int = 8
    zero_as_background: bool = True

    def __post_init__(self) -> None:
        if self.cell_size < 1:
            raise ValueError("cell size must be positive")
        for value, rgb in self.palette.items():
            if len(rgb) != 3 or any(not 0 <= ch <= 255 for ch in rgb):
                raise ValueError(f"bad RGB triple for residue {value}: {rgb}")


def default_palette(modulus: int, zero_as_background: bool = True) -> dict[int, RGB]:
    """Deterministic palette covering [0, modulus).

    Residue 0 is white when treated as background, otherwise it joins the
    hue wheel with the nonzero residues.
    """
    palette: dict[int, RGB] = {}
    start = 1 if zero_as_background else 0
    if zero_as_background:
        palette[0] = (255, 255, 255)
    count = modulus - start
    for i, value in enumerate(range(start, modulus)):
        if count == 1:
            palette[value] = (0, 0, 0)
            continue
        r, g, b = colorsys.hsv_to_rgb(i / count, 0.85, 0.85)
        palette[value] = (int(r * 255), int(g * 255), int(b * 255))
    return palette


def parse_palette(spec: str) -> dict[int, RGB]:
    """Parse '0=255,255,255;1=0,0,0' style palette strings."""
    palette: dict[int, RGB] = {}
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            key, rgb = chunk.split("=")
            r, g, b = (int(v) for v in rgb.split(","))
            palette[int(key)] = (r, g, b)
        except ValueError as exc:
            raise FormatError(f"malformed palette entry {chunk!r}") from exc
    if not palette:
        raise FormatError("empty palette specification")
    return palette


def render_cells(values: np.ndarray, spec: RenderSpec) -> bytes:
    """Render a grid of residues to a binary P6 pixmap.

    Matrix row 0 becomes the bottom row of the image.  Cells holding -1
    (unplaced positions in a partial assembly) render as white.
    """
    values = np.asarray(values, dtype=np.int64)
    present = {int(v) for v in np.unique(values) if v >= 0}
    missing = present - set(spec.palette)
    if missing:
        raise FormatError(
            f"palette does not cover residues {sorted(missing)}")
    lut_size = max(present | set(spec.palette), default=0) + 2
    lut = np.full((lut_size, 3), 255, dtype=np.uint8)
    for value, rgb in spec.palette.items():
        lut[value] = rgb
    pixels = lut[np.flipud(values)]          # row 0 at the bottom
    pixels = np.repeat(pixels, spec.cell_size, axis=0)
    pixels = np.repeat(pixels, spec.cell_size, axis=1)
    header = f"P6\n{pixels.shape[1]} {pixels.shape[0]}\n255\n".encode()
    return header + pixels.tobytes()


def assembly_value_grid(placements: dict[Position, tuple[int, str]],
                        bound: tuple[int, int]) -> np.ndarray:
    """Labels of a placement map as integers; unplaced cells become -1."""
    height, width = bound
    grid = np.full((height, width), -1, dtype=np.int64)
    for (x, y), (_, label) in placements.items():
        if not (0 <= x < height and 0 <= y < width):
            continue
        try:
            grid[x, y] = int(label)
        except ValueError as exc:
            raise FormatError(
                f"label {label!r} at ({x}, {y}) is not a residue") from exc
    return grid
