"""Certification of numerical p-self-similarity and its supporting identities.

A matrix M of residues mod p is numerically p-self-similar when

    M[s*p^k + i, t*p^k + j] == M[s, t] * M[i, j]   (mod p)

for all 0 <= s, t < p, all k >= 0, and all i, j < p^k.  The checker below
verifies the congruence exhaustively over every exponent the window
supports, so a single perturbed entry is always caught on power-of-p
windows.  The lemma suite re-derives the boundary and cancellation
identities the congruence rests on, by brute force, as falsifiable checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .matrix import Coefficients, ResidueMatrix, delannoy_matrix


@dataclass(frozen=True)
class Block:
    """A u x u view into a matrix with its lower-left corner at (x, y)."""

    matrix: ResidueMatrix
    x: int
    y: int
    size: int

    @property
    def values(self) -> np.ndarray:
        return self.matrix.entries[self.x:self.x + self.size,
                                   self.y:self.y + self.size]


def block(matrix: ResidueMatrix, x: int, y: int, u: int) -> Block:
    if u < 1 or x < 0 or y < 0:
        raise ValueError("block origin must be nonnegative and size positive")
    if x + u > matrix.height or y + u > matrix.width:
        raise ValueError(
            f"block ({x}, {y}) of size {u} does not fit in "
            f"{matrix.height}x{matrix.width}")
    return Block(matrix, x, y, u)


def is_n_block(candidate: Block, reference_unit: Block, n: int, p: int) -> bool:
    """True iff candidate == n * reference_unit elementwise mod p."""
    if candidate.size != reference_unit.size:
        raise ValueError("blocks must have equal size")
    expected = (n * reference_unit.values) % p
    return bool(np.array_equal(candidate.values % p, expected))


@dataclass(frozen=True)
class Violation:
    """Least witness of a failed congruence, ordered by (k, s, t, i, j)."""

    s: int
    t: int
    k: int
    i: int
    j: int


@dataclass(frozen=True)
class SelfSimReport:
    p: int
    max_k: int
    holds: bool
    first_violation: Violation | None
    side: int

    def to_lines(self) -> list[str]:
        lines = [f"self-similarity base {self.p} on {self.side}x{self.side}: "
                 f"{'holds' if self.holds else 'VIOLATED'} (max k {self.max_k})"]
        if self.first_violation is not None:
            v = self.first_violation
            lines.append(
                f"witness: s={v.s} t={v.t} k={v.k} i={v.i} j={v.j}")
        return lines


def check_self_similarity(matrix: ResidueMatrix, p: int) -> SelfSimReport:
    """Exhaustively verify the scaling congruence on a square window.

    The exponent range is derived from the window: every k with
    p^(k+1) <= side is checked, so the report never silently under-checks.
    The returned witness, if any, is the least in (k, s, t, i, j) order.
    """
    if matrix.height != matrix.width:
        raise ValueError("self-similarity check requires a square window")
    if matrix.modulus != p:
        raise ValueError("matrix modulus does not match the requested base")
    side = matrix.height
    ent = matrix.entries
    max_k = -1
    while p ** (max_k + 2) <= side:
        max_k += 1
    for k in range(max_k + 1):
        w = p ** k
        unit = ent[:w, :w]
        for s in range(p):
            for t in range(p):
                actual = ent[s * w:(s + 1) * w, t * w:(t + 1) * w]
                expected = (int(ent[s, t]) * unit) % p
                if not np.array_equal(actual, expected):
                    bad = np.argwhere(actual != expected)
                    i, j = (int(v) for v in bad[0])
                    return SelfSimReport(p, max_k, False,
                                         Violation(s, t, k, i, j), side)
    return SelfSimReport(p, max_k, True, None, side)


@dataclass(frozen=True)
class LemmaResult:
    name: str
    passed: bool
    counterexample: tuple | None
    cases: int


@dataclass(frozen=True)
class LemmaReport:
    coeffs: Coefficients
    k_max: int
    results: tuple[LemmaResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_lines(self) -> list[str]:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            line = f"{r.name}: {status} ({r.cases} cases)"
            if r.counterexample is not None:
                line += f" counterexample {r.counterexample}"
            lines.append(line)
        return lines


def _first_bad(mask: np.ndarray) -> tuple | None:
    bad = np.argwhere(~mask)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def check_lemmas(coeffs: Coefficients, k_max: int,
                 side_budget: int = 4096) -> LemmaReport:
    """Brute-force the boundary and cancellation identities on one window.

    One matrix of side p^(k_max+1) is materialized and all identities are
    evaluated on it over their full quantifier ranges:

    * corner entries M[0, p^k - 1] and M[p^k - 1, 0] are 1;
    * the first row/column of each boundary block scales geometrically,
      M[0, t*p^k + j] == a^t * a^j and M[s*p^k + i, 0] == c^s * c^i;
    * adjacent entries along column p^k - 1 cancel,
      a*M[i, p^k - 1] + b*M[i-1, p^k - 1] == 0, and mirrored along
      row p^k - 1 with weights b and c;
    * runs anchored at block corners propagate geometrically: wherever
      the row below a run cancels under (b, c), the run itself is
      M[i0, x0 + j] == M[i0, x0] * a^j, and the transposed statement.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    p = coeffs.p
    side = p ** (k_max + 1)
    if side > side_budget:
        raise ValueError(
            f"window side {side} exceeds the budget {side_budget}")
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    ent = delannoy_matrix(coeffs, side, side).entries
    results: list[LemmaResult] = []

    # Corners: M[0, p^k - 1] == M[p^k - 1, 0] == 1.
    cases = 0
    bad = None
    for k in range(k_max + 2):
        w = p ** k
        cases += 2
        if int(ent[0, w - 1]) != 1 and bad is None:
            bad = ("row", k, int(ent[0, w - 1]))
        if int(ent[w - 1, 0]) != 1 and bad is None:
            bad = ("column", k, int(ent[w - 1, 0]))
    results.append(LemmaResult("corner_entries_are_one", bad is None, bad, cases))

    # Boundary blocks: first row of block (0, t) is a^t * a^j, and mirrored.
    cases = 0
    bad = None
    for k in range(1, k_max + 1):
        w = p ** k
        for t in range(p):
            n = pow(a, t, p)
            expected = (n * ent[0, :w]) % p
            mask = ent[0, t * w:(t + 1) * w] == expected
            cases += w
            if bad is None and not mask.all():
                bad = ("row", k, t, _first_bad(mask))
        for s in range(p):
            n = pow(c, s, p)
            expected = (n * ent[:w, 0]) % p
            mask = ent[s * w:(s + 1) * w, 0] == expected
            cases += w
            if bad is None and not mask.all():
                bad = ("column", k, s, _first_bad(mask))
    results.append(LemmaResult("boundary_blocks_scale_geometrically",
                               bad is None, bad, cases))

    # Cancellation along column p^k - 1 (and mirrored row).
    cases = 0
    bad = None
    for k in range(1, k_max + 2):
        w = p ** k
        col = ent[:w, w - 1]
        mask = (a * col[1:] + b * col[:-1]) % p == 0
        cases += w - 1
        if bad is None and not mask.all():
            bad = ("column", k, _first_bad(mask))
        row = ent[w - 1, :w]
        mask = (b * row[:-1] + c * row[1:]) % p == 0
        cases += w - 1
        if bad is None and not mask.all():
            bad = ("row", k, _first_bad(mask))
    results.append(LemmaResult("adjacent_pair_cancellation",
                               bad is None, bad, cases))

    # Geometric runs at scaled anchors: hypothesis (the row below cancels
    # under b, c) and conclusion (the run is n * a^j) are checked separately.
    hyp_cases = 0
    hyp_bad = None
    conc_cases = 0
    conc_bad = None
    for k in range(1, k_max + 1):
        w = p ** k
        for s in range(1, p):
            i0 = s * w
            below = ent[i0 - 1, :]
            for t in range(p):
                x0 = t * w
                seg = below[x0:x0 + w]
                mask = (b * seg[:-1] + c * seg[1:]) % p == 0
                hyp_cases += w - 1
                if hyp_bad is None and not mask.all():
                    hyp_bad = ("row", k, s, t, _first_bad(mask))
                n = int(ent[i0, x0])
                expected = (n * ent[0, :w]) % p
                mask = ent[i0, x0:x0 + w] == expected
                conc_cases += w
                if conc_bad is None and not mask.all():
                    conc_bad = ("row", k, s, t, _first_bad(mask))
        for t in range(1, p):
            j0 = t * w
            left = ent[:, j0 - 1]
            for s in range(p):
                u0 = s * w
                seg = left[u0:u0 + w]
                mask = (a * seg[1:] + b * seg[:-1]) % p == 0
                hyp_cases += w - 1
                if hyp_bad is None and not mask.all():
                    hyp_bad = ("column", k, s, t, _first_bad(mask))
                n = int(ent[u0, j0])
                expected = (n * ent[:w, 0]) % p
                mask = ent[u0:u0 + w, j0] == expected
                conc_cases += w
                if conc_bad is None and not mask.all():
                    conc_bad = ("column", k, s, t, _first_bad(mask))
    results.append(LemmaResult("scaled_run_hypothesis",
                               hyp_bad is None, hyp_bad, hyp_cases))
    results.append(LemmaResult("scaled_run_conclusion",
                               conc_bad is None, conc_bad, conc_cases))

    return LemmaReport(coeffs, k_max, tuple(results))


def fractal_set(matrix: ResidueMatrix, keep: Iterable[int]) -> set[tuple[int, int]]:
    """Coordinates whose entry lies in `keep` (a subset of the residues)."""
    keep = set(keep)
    if not keep:
        return set()
    if not keep <= set(range(matrix.modulus)):
        raise ValueError("keep must be a subset of [0, modulus)")
    mask = np.isin(matrix.entries, sorted(keep))
    return {(int(x), int(y)) for x, y in np.argwhere(mask)}
