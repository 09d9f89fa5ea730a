import pytest

from fractile import (Assembly, Coefficients, LocalRule, TileSystem, TileType,
                      assemble_bounded, carpet_system, check_induction_clauses,
                      delannoy_rule, fractal_set, delannoy_matrix,
                      rule_matrix, verify_self_assembly)

from conftest import window_sum_rule

CARPET = Coefficients(1, 1, 1, 3)


@pytest.mark.parametrize("bound", [3, 9, 27])
def test_carpet_self_assembles(bound):
    report = verify_self_assembly(delannoy_rule(CARPET), (bound, bound),
                                  trials=3)
    assert report.matches and report.directed
    assert report.mismatch is None and report.directedness_witness is None


def test_five_color_instance_self_assembles():
    rule = delannoy_rule(Coefficients(1, 2, 2, 5))
    report = verify_self_assembly(rule, (25, 25), trials=2)
    assert report.ok


def test_constant_rule_self_assembles():
    const = LocalRule(2, ("k",), lambda west, south: "k", name="constant")
    report = verify_self_assembly(const, (2, 2), trials=1)
    assert report.matches


def test_window_sum_rule_self_assembles():
    # n = 3 exercises the generalized first-column strength rule
    report = verify_self_assembly(window_sum_rule(), (9, 9), trials=3)
    assert report.ok


@pytest.mark.parametrize("make_rule,bound", [
    (lambda: delannoy_rule(CARPET), 9),
    (lambda: delannoy_rule(Coefficients(1, 2, 2, 5)), 10),
    (lambda: LocalRule(2, ("k",), lambda w, s: "k", name="constant"), 4),
    (window_sum_rule, 5),
])
def test_unpruned_construction_reproduces_the_matrix(make_rule, bound):
    from fractile import build_full_system
    rule = make_rule()
    system = build_full_system(rule)
    report = verify_self_assembly(rule, (bound, bound), trials=2,
                                  system=system)
    assert report.ok, (report.mismatch, report.directedness_witness)


def test_lax_and_strict_agree_on_carpet():
    rule = delannoy_rule(CARPET)
    strict = verify_self_assembly(rule, (9, 9), trials=2)
    lax = verify_self_assembly(rule, (9, 9), trials=2, lax=True)
    assert strict.ok and lax.ok


def test_report_rendering_and_dump():
    report = verify_self_assembly(delannoy_rule(CARPET), (3, 3), trials=2)
    lines = report.to_lines()
    assert any("match" in line for line in lines)
    d = report.to_dict()
    assert d["matches"] is True and d["directed"] is True
    assert d["bound"] == [3, 3]


def broken_twin_system():
    carpet = carpet_system()
    twins = []
    tiles = list(carpet.tiles)
    # duplicate the first-row tile under a new id but a different label,
    # so runs diverge and labels break
    row0 = next(t for t in tiles if t.strengths == (2, 1, 2, 1))
    twins.append(TileType(30, "2", row0.colors, row0.strengths))
    return TileSystem(tuple(tiles + twins), dict(carpet.seed), 2)


def test_broken_system_is_reported_not_raised():
    report = verify_self_assembly(delannoy_rule(CARPET), (9, 9), trials=8,
                                  system=broken_twin_system())
    assert not report.ok
    assert (not report.matches) or (not report.directed)
    if not report.matches:
        pos, expected, observed = report.mismatch
        assert observed is None or observed != expected


def test_verify_validates_arguments():
    with pytest.raises(ValueError):
        verify_self_assembly(delannoy_rule(CARPET), (9, 9), trials=0)
    with pytest.raises(ValueError):
        verify_self_assembly(delannoy_rule(CARPET), (1, 1), trials=1)


def test_induction_clauses_hold_along_carpet_growth():
    rule = delannoy_rule(CARPET)
    asm = assemble_bounded(carpet_system(), (27, 27), 23)
    report = check_induction_clauses(asm, rule)
    assert report.all_hold
    assert {c.name for c in report.clauses} == {
        "downward_closed", "first_quadrant_only", "east_strength2_in_row0",
        "north_strength2_in_col0", "tile_matches_window"}


def test_induction_clauses_hold_vacuously_for_seed(carpet):
    report = check_induction_clauses(Assembly.from_seed(carpet.seed),
                                     delannoy_rule(CARPET))
    assert report.all_hold


def test_transplanted_tile_trips_window_clause(carpet):
    rule = delannoy_rule(CARPET)
    asm = assemble_bounded(carpet, (9, 9), 3)
    wrong = next(t for t in carpet.tiles
                 if not t.same_surface(asm.placements[(4, 4)]))
    asm.placements[(4, 4)] = wrong
    report = check_induction_clauses(asm, rule)
    clause = {c.name: c for c in report.clauses}["tile_matches_window"]
    assert not clause.holds
    step, pos, detail = clause.violation
    assert pos == (4, 4) and asm.attachment_order[step] == (4, 4)


def test_gap_in_growth_trips_downward_closure(carpet):
    seed = carpet.seed[(0, 0)]
    row0 = next(t for t in carpet.tiles if t.strengths == (2, 1, 2, 1))
    asm = Assembly({(0, 0): seed, (0, 2): row0}, [(0, 0), (0, 2)], 1)
    report = check_induction_clauses(asm, delannoy_rule(CARPET))
    clause = {c.name: c for c in report.clauses}["downward_closed"]
    assert not clause.holds and clause.violation[1] == (0, 2)


def test_negative_position_trips_quadrant_clause(carpet):
    seed = carpet.seed[(0, 0)]
    asm = Assembly({(0, 0): seed, (-1, 0): seed}, [(0, 0), (-1, 0)], 1)
    report = check_induction_clauses(asm, delannoy_rule(CARPET))
    clause = {c.name: c for c in report.clauses}["first_quadrant_only"]
    assert not clause.holds


def test_misplaced_strength_2_tile_trips_axis_clauses(carpet):
    rule = delannoy_rule(CARPET)
    asm = assemble_bounded(carpet, (5, 5), 0)
    col0 = next(t for t in carpet.tiles if t.strengths == (1, 2, 1, 2))
    asm.placements[(2, 2)] = col0
    report = check_induction_clauses(asm, rule)
    clause = {c.name: c for c in report.clauses}["north_strength2_in_col0"]
    assert not clause.holds


def test_simulated_fractal_matches_matrix_fractal(carpet):
    bound = 27
    asm = assemble_bounded(carpet, (bound, bound), 29)
    simulated = {pos for pos, tile in asm.placements.items()
                 if tile.label != "0"}
    expected = fractal_set(delannoy_matrix(CARPET, bound, bound), {1, 2})
    assert simulated == expected


def test_induction_report_rendering(carpet):
    asm = assemble_bounded(carpet, (3, 3), 0)
    report = check_induction_clauses(asm, delannoy_rule(CARPET))
    assert all(": holds" in line for line in report.to_lines())
