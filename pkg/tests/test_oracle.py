from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from commonfix.analysis import c_max, check_bound_lemmas, common_fixtures
from commonfix.construction import DOUBLE, SINGLE, build_draws
from commonfix.graph_core import Draw, validate_draw
from commonfix.oracle import (
    EnumerationTask,
    count_one_factorisations,
    enumerate_one_factorisations,
    exhaustive_max_common,
    first_round_tasks,
    random_draw,
    relabelling_orbit,
    run_task,
    verify_transitivity,
)


def test_k4_orderings():
    found = list(enumerate_one_factorisations(4))
    assert len(found) == 6
    assert len({frozenset(f) for f in found}) == 1


def test_k6_counts():
    ordered = list(enumerate_one_factorisations(6))
    assert len(ordered) == 720
    assert len(set(ordered)) == 720
    assert len({frozenset(f) for f in ordered}) == 6
    assert count_one_factorisations(6) == 6


def test_unordered_is_ordered_modulo_round_order():
    unordered = {frozenset(f) for f in enumerate_one_factorisations(6, ordered=False)}
    ordered = {frozenset(f) for f in enumerate_one_factorisations(6)}
    assert unordered == ordered


@pytest.mark.parametrize("vc", [4, 6, 8])
def test_emitted_factorisations_are_valid(vc):
    ordered = vc <= 6
    for i, f in enumerate(enumerate_one_factorisations(vc, ordered=ordered)):
        if i > 300:
            break
        assert validate_draw(Draw(vc // 2, 1, f)) == []


@pytest.mark.parametrize("vc, ordered", [(4, True), (6, True), (6, False), (8, False)])
def test_prefix_partition(vc, ordered):
    tasks = first_round_tasks(vc, ordered)
    total = sum(sum(1 for _ in run_task(t, ordered)) for t in tasks)
    assert total == sum(1 for _ in enumerate_one_factorisations(vc, ordered=ordered))


def test_enumeration_is_deterministic():
    assert list(enumerate_one_factorisations(6)) == list(enumerate_one_factorisations(6))


def test_bad_prefix_rejected():
    with pytest.raises(ValueError):
        list(enumerate_one_factorisations(4, prefix=[[(0, 1), (1, 2)]]))
    with pytest.raises(ValueError):
        list(enumerate_one_factorisations(4, prefix=[[(0, 1), (2, 3)], [(0, 1), (2, 3)]]))
    with pytest.raises(ValueError):
        list(enumerate_one_factorisations(6, prefix=[[(0, 2), (1, 3), (4, 5)]], ordered=False))
    with pytest.raises(ValueError):
        list(enumerate_one_factorisations(5))


def test_prefix_is_kept():
    prefix = [[(0, 5), (1, 4), (2, 3)]]
    for f in enumerate_one_factorisations(6, prefix=prefix):
        assert f[0] == frozenset(prefix[0])
    assert EnumerationTask(6).prefix == ()


def test_transitivity_on_k4_and_k6():
    for vc, count in ((4, 6), (6, 720)):
        transitive, canonical, total = verify_transitivity(vc)
        assert transitive and total == count
        assert len(relabelling_orbit(canonical, vc)) == count


def test_random_draw_examples():
    d = random_draw(6, 0)
    assert validate_draw(d) == []
    assert random_draw(6, 0) == d
    d8 = random_draw(8, 12345)
    assert len(d8.rounds) == 7 and all(len(r) == 4 for r in d8.rounds)
    assert validate_draw(d8) == []


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8, 10, 12, 14]), st.integers())
def test_random_draws_are_valid(vc, seed):
    d = random_draw(vc, seed)
    assert validate_draw(d) == []
    assert random_draw(vc, seed) == d


def test_random_draws_vary():
    assert len({random_draw(8, s) for s in range(20)}) > 10


@pytest.mark.parametrize(
    "n, mode, expected",
    [(1, DOUBLE, 1), (1, SINGLE, 1), (2, DOUBLE, 6), (2, SINGLE, 4)],
)
def test_small_exhaustive(n, mode, expected):
    result = exhaustive_max_common(n, mode)
    assert result.maximum == expected == c_max(n, mode)
    d1, d2 = result.witness
    assert validate_draw(d1) == [] and validate_draw(d2) == []
    assert common_fixtures(d1, d2, mode).total == result.maximum


def test_n2_exhaustive_against_literal_pairs():
    # every ordered pair, counted by the library's analysis rather than the weight matrix
    best = 0
    all_div2 = [Draw(2, 2, f) for f in enumerate_one_factorisations(6)]
    for f1 in enumerate_one_factorisations(4):
        d1 = Draw(2, 1, f1)
        for d2 in all_div2:
            best = max(best, common_fixtures(d1, d2).total)
    assert best == exhaustive_max_common(2).maximum == 6
    assert exhaustive_max_common(2).states_explored == 6 * 720


def test_n3_exhaustive():
    result = exhaustive_max_common(3, DOUBLE)
    assert result.maximum == 13
    assert result.symmetry_reduced
    assert result.states_explored == 6240 * 5040
    d1, d2 = result.witness
    assert common_fixtures(d1, d2).total == 13
    assert result.maximum >= common_fixtures(*build_draws(3)).total


def test_n3_single_exhaustive():
    assert exhaustive_max_common(3, SINGLE).maximum == 11


def test_parallel_matches_serial():
    a = exhaustive_max_common(2, DOUBLE, jobs=1)
    b = exhaustive_max_common(2, DOUBLE, jobs=2)
    assert (a.maximum, a.witness, a.states_explored) == (b.maximum, b.witness, b.states_explored)


def test_exhaustive_rejects_large_n():
    with pytest.raises(ValueError):
        exhaustive_max_common(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lemmas_on_random_pairs(n):
    for seed in range(100):
        d1 = random_draw(2 * n, seed, division=1)
        d2 = random_draw(2 * n + 2, 10_000 + seed, division=2)
        assert check_bound_lemmas(common_fixtures(d1, d2)) == []


def test_lemmas_on_relabelled_construction():
    # round reorderings of the optimal pair sit much closer to the bounds
    d1, d2 = build_draws(3)
    for p in permutations(range(7)):
        shuffled = Draw(3, 2, tuple(d2.rounds[i] for i in p))
        assert check_bound_lemmas(common_fixtures(d1, shuffled)) == []
