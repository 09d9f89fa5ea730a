"""Command-line surface.

Subcommands: matrix, selfsim, tileset, simulate, render, verify.
Exit codes: 0 on success, 1 when a verified property fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import conformance, formats, matrix, selfsim, tam, tilegen


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _coefficients(args) -> matrix.Coefficients:
    return matrix.Coefficients(args.a, args.b, args.c, args.p)


def cmd_matrix(args) -> int:
    m = matrix.delannoy_matrix(_coefficients(args), args.size, args.size)
    _write_text(args.out, formats.write_grid(m))
    return 0


def cmd_selfsim(args) -> int:
    coeffs = _coefficients(args)
    m = matrix.delannoy_matrix(coeffs, args.size, args.size)
    if args.corrupt is not None:
        x, y = args.corrupt
        ent = np.array(m.entries)
        ent[x, y] = (ent[x, y] + 1) % coeffs.p
        m = matrix.ResidueMatrix(coeffs.p, ent)
    report = selfsim.check_self_similarity(m, coeffs.p)
    for line in report.to_lines():
        print(line)
    return 0 if report.holds else 1


def _rule_from_args(args) -> tilegen.LocalRule:
    return tilegen.delannoy_rule(_coefficients(args))


def cmd_tileset(args) -> int:
    if args.carpet:
        system = tilegen.carpet_system()
    else:
        rule = _rule_from_args(args)
        system = tilegen.build_full_system(rule, budget=args.budget)
        if not args.no_prune:
            horizon = (args.prune, args.prune)
            system = tilegen.prune_reachable(system, rule, horizon)
            if not tilegen.horizon_is_stable(rule, horizon):
                print(f"warning: windows are still appearing at horizon "
                      f"{args.prune}; consider a larger --prune", file=sys.stderr)
    _write_text(args.out, formats.write_tileset(system))
    return 0


def cmd_simulate(args) -> int:
    text = Path(args.tileset).read_text()
    system = formats.parse_tileset(text)
    bound = (args.bound[0], args.bound[-1])
    assembly = tam.assemble_bounded(system, bound, args.seed, lax=args.lax)
    _write_text(args.out, formats.write_assembly(assembly, bound))
    if args.image is not None:
        _, placements = formats.parse_assembly(
            formats.write_assembly(assembly, bound))
        grid = formats.assembly_value_grid(placements, bound)
        spec = _render_spec(args, values=grid[grid >= 0])
        Path(args.image).write_bytes(formats.render_cells(grid, spec))
    if len(assembly) < bound[0] * bound[1]:
        print(f"assembly stalled at {len(assembly)} of "
              f"{bound[0] * bound[1]} cells", file=sys.stderr)
        return 1
    return 0


def _render_spec(args, values) -> formats.RenderSpec:
    if args.palette is not None:
        palette = formats.parse_palette(args.palette)
    else:
        top = int(max(values)) + 1 if len(values) else 1
        palette = formats.default_palette(top, not args.zero_color)
    return formats.RenderSpec(palette=palette, cell_size=args.cell_size,
                              zero_as_background=not args.zero_color)


def cmd_render(args) -> int:
    text = Path(args.source).read_text()
    header = text.splitlines()[0].strip() if text.strip() else ""
    if header == formats.GRID_HEADER:
        m = formats.parse_grid(text)
        values = m.entries
        if args.palette is None:
            palette = formats.default_palette(m.modulus, not args.zero_color)
            spec = formats.RenderSpec(palette, args.cell_size, not args.zero_color)
        else:
            spec = _render_spec(args, values=values.ravel())
    elif header == formats.ASSEMBLY_HEADER:
        bound, placements = formats.parse_assembly(text)
        values = formats.assembly_value_grid(placements, bound)
        spec = _render_spec(args, values=values[values >= 0])
    else:
        raise formats.FormatError(
            f"source must start with '{formats.GRID_HEADER}' or "
            f"'{formats.ASSEMBLY_HEADER}'")
    Path(args.out).write_bytes(formats.render_cells(values, spec))
    return 0


def cmd_verify(args) -> int:
    rule = _rule_from_args(args)
    system = None
    if args.tileset is not None:
        system = formats.parse_tileset(Path(args.tileset).read_text())
    bound = (args.bound, args.bound)
    report = conformance.verify_self_assembly(
        rule, bound, args.trials, base_seed=args.seed, lax=args.lax,
        system=system)
    for line in report.to_lines():
        print(line)
    return 0 if report.ok else 1


def _add_coeff_flags(parser, required: bool = True) -> None:
    parser.add_argument("--a", type=int, required=required,
                        help="weight of the west neighbor")
    parser.add_argument("--b", type=int, required=required,
                        help="weight of the southwest neighbor")
    parser.add_argument("--c", type=int, required=required,
                        help="weight of the south neighbor")
    parser.add_argument("--p", type=int, required=required,
                        help="prime modulus")


def _add_render_flags(parser) -> None:
    parser.add_argument("--palette", default=None,
                        help="palette like '0=255,255,255;1=0,0,0'")
    parser.add_argument("--cell-size", type=int, default=8,
                        help="pixels per lattice cell")
    parser.add_argument("--zero-color", action="store_true",
                        help="give residue 0 a palette hue instead of white")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractile",
        description="Generate residue-matrix fractals, compile tile systems, "
                    "simulate self-assembly, and verify the results.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="write a residue window as a text grid")
    _add_coeff_flags(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("selfsim", help="certify numerical self-similarity")
    _add_coeff_flags(p)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--corrupt", type=int, nargs=2, metavar=("X", "Y"),
                   default=None,
                   help="debug: perturb one cell before checking")
    p.set_defaults(func=cmd_selfsim)

    p = sub.add_parser("tileset", help="compile and write a tile system")
    _add_coeff_flags(p, required=False)
    p.add_argument("--carpet", action="store_true",
                   help="emit the explicit 30-tile carpet system")
    p.add_argument("--prune", type=int, default=tilegen.DEFAULT_PRUNE_HORIZON,
                   help="square pruning horizon (default %(default)s)")
    p.add_argument("--no-prune", action="store_true",
                   help="keep every tile of the full construction")
    p.add_argument("--budget", type=int, default=10 ** 6,
                   help="maximum number of windows to compile")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_tileset)

    p = sub.add_parser("simulate", help="run a bounded seeded assembly")
    p.add_argument("--tileset", required=True, help="tileset file to load")
    p.add_argument("--bound", type=int, nargs="+", required=True,
                   metavar="N", help="bound (one value for square regions)")
    p.add_argument("--seed", type=int, default=0,
                   help="order seed for the run (default 0)")
    p.add_argument("--lax", action="store_true",
                   help="let mismatching edges contribute nothing")
    p.add_argument("--out", default=None, help="assembly dump path")
    p.add_argument("--image", default=None, help="optional P6 pixmap path")
    _add_render_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("render", help="render a grid or assembly as a pixmap")
    p.add_argument("source", help="grid or assembly file")
    p.add_argument("--out", required=True, help="P6 pixmap path")
    _add_render_flags(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="simulate a rule and check conformance")
    _add_coeff_flags(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lax", action="store_true",
                   help="use the lax mismatch semantics")
    p.add_argument("--tileset", default=None,
                   help="verify this tileset file instead of compiling one")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tileset" and not args.carpet:
        if None in (args.a, args.b, args.c, args.p):
            parser.error("either --carpet or all of --a --b --c --p")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
