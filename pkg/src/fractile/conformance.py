"""End-to-end verification: simulation vs. matrix, and growth invariants.

`verify_self_assembly` compiles a rule, simulates it under several seeds,
and checks that every run tiles the bound completely, labels every cell
with the rule's matrix value, and that all runs agree placement-for-
placement.  `check_induction_clauses` replays an assembly's attachment
history and asserts, after every step, the structural properties the
construction is designed to maintain: the placed region stays downward-
closed, nothing leaves the first quadrant, strength-2 edges stay on
their axes, and each placed tile is exactly the compiled tile of the
matrix window at its position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tam import Assembly, Direction, Position, assemble_bounded
from .tilegen import (LocalRule, build_full_system, build_tile,
                      prune_reachable, rule_matrix, symbol_token, window_at)


@dataclass(frozen=True)
class ConformanceReport:
    system_id: str
    bound: tuple[int, int]
    matches: bool
    mismatch: tuple[Position, str, str | None] | None
    trials: int
    directed: bool
    directedness_witness: tuple[Position, int | None, int | None] | None = None

    @property
    def ok(self) -> bool:
        return self.matches and self.directed

    def to_lines(self) -> list[str]:
        lines = [f"system {self.system_id} on "
                 f"{self.bound[0]}x{self.bound[1]}, {self.trials} trials"]
        if self.matches:
            lines.append("labels: match the rule matrix at every cell")
        else:
            pos, expected, observed = self.mismatch
            lines.append(f"labels: MISMATCH at {pos}: expected {expected}, "
                         f"observed {observed if observed is not None else 'nothing'}")
        if self.directed:
            lines.append("directedness: all trials placed identical tiles")
        else:
            pos, a, b = self.directedness_witness
            lines.append(f"directedness: DIVERGED at {pos}: tile {a} vs {b}")
        return lines

    def to_dict(self) -> dict:
        return {
            "system": self.system_id,
            "bound": list(self.bound),
            "matches": self.matches,
            "mismatch": None if self.mismatch is None else {
                "position": list(self.mismatch[0]),
                "expected": self.mismatch[1],
                "observed": self.mismatch[2],
            },
            "trials": self.trials,
            "directed": self.directed,
            "directedness_witness": None if self.directedness_witness is None
            else {
                "position": list(self.directedness_witness[0]),
                "tile_ids": [self.directedness_witness[1],
                             self.directedness_witness[2]],
            },
        }


def compare_assembly_labels(assembly: Assembly, expected: list[list],
                            bound: tuple[int, int]
                            ) -> tuple[Position, str, str | None] | None:
    """First cell (in position order) whose label disagrees, if any."""
    height, width = bound
    for x in range(height):
        for y in range(width):
            want = symbol_token(expected[x][y])
            tile = assembly.placements.get((x, y))
            if tile is None:
                return ((x, y), want, None)
            if tile.label != want:
                return ((x, y), want, tile.label)
    return None


def verify_self_assembly(rule: LocalRule, bound: tuple[int, int],
                         trials: int, base_seed: int = 0,
                         lax: bool = False,
                         system=None) -> ConformanceReport:
    """Simulate `trials` seeded runs and check labels plus directedness.

    When no system is supplied, the rule is compiled and pruned to the
    bound itself.  Failures are reported, never raised.
    """
    if trials < 1:
        raise ValueError("at least one trial is required")
    if bound[0] < rule.n or bound[1] < rule.n:
        raise ValueError("bound must be at least n x n")
    if system is None:
        system = prune_reachable(build_full_system(rule), rule, bound)
    expected = rule_matrix(rule, bound[0], bound[1])
    assemblies = [assemble_bounded(system, bound, base_seed + k, lax=lax)
                  for k in range(trials)]

    mismatch = None
    for assembly in assemblies:
        mismatch = compare_assembly_labels(assembly, expected, bound)
        if mismatch is not None:
            break

    directed = True
    witness = None
    reference = assemblies[0].id_map()
    for assembly in assemblies[1:]:
        current = assembly.id_map()
        if current == reference:
            continue
        directed = False
        for pos in sorted(set(reference) | set(current)):
            a, b = reference.get(pos), current.get(pos)
            if a != b:
                witness = (pos, a, b)
                break
        break

    return ConformanceReport(
        system_id=rule.name or f"rule-n{rule.n}-{len(rule.alphabet)}symbols",
        bound=bound, matches=mismatch is None, mismatch=mismatch,
        trials=trials, directed=directed, directedness_witness=witness)


@dataclass(frozen=True)
class ClauseResult:
    name: str
    holds: bool
    violation: tuple[int, Position, str] | None  # (step, position, detail)


@dataclass(frozen=True)
class InductionReport:
    clauses: tuple[ClauseResult, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.clauses)

    def to_lines(self) -> list[str]:
        lines = []
        for c in self.clauses:
            line = f"{c.name}: {'holds' if c.holds else 'VIOLATED'}"
            if c.violation is not None:
                step, pos, detail = c.violation
                line += f" at step {step}, position {pos}: {detail}"
            lines.append(line)
        return lines


def check_induction_clauses(assembly: Assembly, rule: LocalRule) -> InductionReport:
    """Replay the attachment order, asserting growth invariants per step.

    Checked after every step: (a) the placed region is downward-closed,
    i.e. each new position already has its west and south predecessors;
    (b) no placement has a negative coordinate; (c) tiles with an east
    strength of 2 sit in row 0; (d) tiles with a north strength of 2 sit
    in column 0; (e) each placed tile equals the compiled tile of the
    matrix window at its position.
    """
    violations: dict[str, tuple[int, Position, str] | None] = {
        name: None for name in
        ("downward_closed", "first_quadrant_only",
         "east_strength2_in_row0", "north_strength2_in_col0",
         "tile_matches_window")}

    positions = assembly.attachment_order
    max_x = max((x for x, _ in positions), default=0)
    max_y = max((y for _, y in positions), default=0)
    expected = rule_matrix(rule, max(max_x + 1, rule.n), max(max_y + 1, rule.n))

    def record(name: str, step: int, pos: Position, detail: str) -> None:
        if violations[name] is None:
            violations[name] = (step, pos, detail)

    occupied: set[Position] = set()
    for step, pos in enumerate(positions):
        x, y = pos
        if x < 0 or y < 0:
            record("first_quadrant_only", step, pos, "negative coordinate")
            occupied.add(pos)
            continue
        if step >= assembly.seed_count:
            if x > 0 and (x - 1, y) not in occupied:
                record("downward_closed", step, pos, "south neighbor missing")
            if y > 0 and (x, y - 1) not in occupied:
                record("downward_closed", step, pos, "west neighbor missing")
        tile = assembly.placements[pos]
        if tile.strength(Direction.E) == 2 and x != 0:
            record("east_strength2_in_row0", step, pos,
                   f"tile {tile.id} has a strength-2 east edge off row 0")
        if tile.strength(Direction.N) == 2 and y != 0:
            record("north_strength2_in_col0", step, pos,
                   f"tile {tile.id} has a strength-2 north edge off column 0")
        want = build_tile(rule, window_at(expected, x, y, rule.n))
        if not tile.same_surface(want):
            record("tile_matches_window", step, pos,
                   f"placed tile {tile.id} ({tile.label}) differs from the "
                   f"window tile ({want.label})")
        occupied.add(pos)

    return InductionReport(tuple(
        ClauseResult(name, violations[name] is None, violations[name])
        for name in violations))
