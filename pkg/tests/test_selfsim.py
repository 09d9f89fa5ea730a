import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fractile import (Coefficients, ResidueMatrix, block, check_lemmas,
                      check_self_similarity, delannoy_matrix, fractal_set,
                      is_n_block, pascal_matrix)

from conftest import SMALL_PRIMES


def carpet(side):
    return delannoy_matrix(Coefficients(1, 1, 1, 3), side, side)


def test_block_view_values():
    m = carpet(9)
    b = block(m, 3, 3, 3)
    assert b.values.tolist() == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert block(m, 0, 0, 1).values.tolist() == [[1]]


def test_block_of_pascal():
    # binomials C(4,2), C(5,3), C(5,2), C(6,3) are all even
    m = pascal_matrix(2, 4, 4)
    assert block(m, 2, 2, 2).values.tolist() == [[0, 0], [0, 0]]


def test_block_rejects_out_of_window():
    m = carpet(9)
    with pytest.raises(ValueError):
        block(m, 7, 7, 3)
    with pytest.raises(ValueError):
        block(m, -1, 0, 2)


def test_n_block_relations():
    m = carpet(9)
    unit = block(m, 0, 0, 3)
    assert is_n_block(block(m, 3, 3, 3), unit, 0, 3)       # M[1,1] == 0
    assert is_n_block(unit, unit, 1, 3)
    assert is_n_block(block(m, 3, 6, 3), unit, m[1, 2], 3)  # M[1,2] == 2
    assert not is_n_block(block(m, 3, 6, 3), unit, 1, 3)


def test_n_block_size_mismatch():
    m = carpet(9)
    with pytest.raises(ValueError):
        is_n_block(block(m, 0, 0, 3), block(m, 0, 0, 1), 1, 3)


def test_carpet_is_self_similar_with_derived_k():
    report = check_self_similarity(carpet(243), 3)
    assert report.holds and report.max_k == 4


def test_pascal_mod_2_is_self_similar():
    report = check_self_similarity(pascal_matrix(2, 256, 256), 2)
    assert report.holds and report.max_k == 7


def test_figure_instance_is_self_similar():
    m = delannoy_matrix(Coefficients(1, 2, 2, 5), 125, 125)
    assert check_self_similarity(m, 5).holds


def _corrupt(matrix, x, y):
    ent = np.array(matrix.entries)
    ent[x, y] = (ent[x, y] + 1) % matrix.modulus
    return ResidueMatrix(matrix.modulus, ent)


def test_corruption_is_detected_with_replayable_witness():
    m = _corrupt(carpet(27), 4, 4)
    report = check_self_similarity(m, 3)
    assert not report.holds
    v = report.first_violation
    w = 3 ** v.k
    lhs = m[v.s * w + v.i, v.t * w + v.j]
    rhs = m[v.s, v.t] * m[v.i, v.j] % 3
    assert lhs != rhs


def test_witness_is_least_in_k_s_t_order():
    # (4, 4) sits outside every exponent-0 cell pair, so the first failing
    # decomposition is the size-3 block (1, 1) at offset (1, 1).
    m = _corrupt(carpet(9), 4, 4)
    report = check_self_similarity(m, 3)
    v = report.first_violation
    assert (v.k, v.s, v.t, v.i, v.j) == (1, 1, 1, 1, 1)


@given(st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=20)
def test_single_cell_corruption_never_passes(p, data):
    a = data.draw(st.integers(0, p - 1))
    b = data.draw(st.integers(0, p - 1))
    c = data.draw(st.integers(0, p - 1))
    if a == b == c == 0:
        b = 1
    side = p ** 2
    m = delannoy_matrix(Coefficients(a, b, c, p), side, side)
    x = data.draw(st.integers(0, side - 1))
    y = data.draw(st.integers(0, side - 1))
    assert check_self_similarity(m, p).holds
    assert not check_self_similarity(_corrupt(m, x, y), p).holds


@given(st.sampled_from(SMALL_PRIMES), st.data())
@settings(max_examples=20)
def test_random_instances_are_self_similar(p, data):
    a = data.draw(st.integers(0, p - 1))
    b = data.draw(st.integers(0, p - 1))
    c = data.draw(st.integers(0, p - 1))
    side = p ** 2
    m = delannoy_matrix(Coefficients(a, b, c, p), side, side)
    assert check_self_similarity(m, p).holds


def test_check_requires_square_and_matching_base():
    m = delannoy_matrix(Coefficients(1, 1, 1, 3), 9, 6)
    with pytest.raises(ValueError):
        check_self_similarity(m, 3)
    with pytest.raises(ValueError):
        check_self_similarity(carpet(9), 5)


def test_lemma_suite_passes_for_carpet_weights():
    report = check_lemmas(Coefficients(1, 1, 1, 3), 3)
    assert report.all_passed
    assert {r.name for r in report.results} == {
        "corner_entries_are_one", "boundary_blocks_scale_geometrically",
        "adjacent_pair_cancellation", "scaled_run_hypothesis",
        "scaled_run_conclusion"}
    assert all(r.cases > 0 for r in report.results)


def test_adjacent_pair_cancellation_by_hand():
    # 1*M[1,2] + 1*M[0,2] over the integers is 5 + 1, divisible by 3.
    m = delannoy_matrix(Coefficients(1, 1, 1, 101), 3, 3)
    assert (m[1, 2] + m[0, 2]) % 3 == 0


def test_corner_base_case():
    m = delannoy_matrix(Coefficients(2, 1, 4, 5), 2, 2)
    assert m[0, 0] == 1  # p^0 - 1 = 0 on both axes


def test_lemmas_reject_tiny_k_and_huge_windows():
    with pytest.raises(ValueError):
        check_lemmas(Coefficients(1, 1, 1, 3), 0)
    with pytest.raises(ValueError):
        check_lemmas(Coefficients(1, 1, 1, 3), 9, side_budget=128)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_last_column_alternates_for_unit_weights(p):
    m = delannoy_matrix(Coefficients(1, 1, 1, p), p, p)
    for i in range(p):
        assert m[i, p - 1] == (1 if i % 2 == 0 else p - 1)


def test_fractal_set_of_small_carpet():
    pts = fractal_set(carpet(3), {1, 2})
    assert len(pts) == 8 and (1, 1) not in pts


def test_fractal_set_empty_keep():
    assert fractal_set(carpet(3), set()) == set()


def test_fractal_set_pascal_triangle_order_2():
    pts = fractal_set(pascal_matrix(2, 4, 4), {1})
    assert len(pts) == 9
    assert pts == {(i, j) for i in range(4) for j in range(4) if i & j == 0}


def test_fractal_set_validates_keep():
    with pytest.raises(ValueError):
        fractal_set(carpet(3), {3})


def test_fractal_set_scales_geometrically():
    # Nonzero point set of a self-similar matrix: each p^k square is either
    # empty or a translate of the origin square.
    side, p = 81, 3
    m = carpet(side)
    pts = fractal_set(m, {1, 2})
    for k in (1, 2, 3):
        w = p ** k
        origin = {(x, y) for (x, y) in pts if x < w and y < w}
        for s in range(p):
            for t in range(p):
                square = {(x - s * w, y - t * w) for (x, y) in pts
                          if s * w <= x < (s + 1) * w and t * w <= y < (t + 1) * w}
                if m[s, t] == 0:
                    assert square == set()
                else:
                    assert square == origin
