from collections import Counter

import pytest

from commonfix.construction import (
    DOUBLE,
    SINGLE,
    build_draws,
    build_schedule,
    build_starters,
    expand_double_round_robin,
    fixed_factor,
    orient,
    orient_edge,
    starter_params,
    tail_factors,
)
from commonfix.graph_core import (
    Role,
    difference,
    orbit_edges,
    orbit_id_of,
    validate_draw,
    validate_one_factor,
    vertex_of,
)

from golden import (
    FIG_N7_DIV1,
    FIG_N7_DIV2,
    FIG_N8_DIV1,
    FIG_N8_DIV2,
    N2_DIV1,
    N2_DIV2,
    round_aligned_counts,
)

GENERAL = range(3, 41)


@pytest.mark.parametrize(
    "n, expected",
    [(7, (2, 3, 7, 9)), (8, (2, 4, 9, 10)), (3, (0, 1, 1, 3))],
)
def test_starter_params(n, expected):
    p = starter_params(n)
    assert (p.s, p.t, p.u, p.v) == expected


@pytest.mark.parametrize("n", GENERAL)
def test_starter_param_identities(n):
    p = starter_params(n)
    assert p.t == n - 2 - p.s
    assert p.v == 3 * n - 5 - p.u
    removed = (p.u, p.v) if n % 2 == 0 else (p.s, p.t)
    assert difference(removed, n) == 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_no_starter_for_small_n(n):
    with pytest.raises(ValueError):
        starter_params(n)


def test_n3_starter():
    st = build_starters(3)
    assert st.e2 == frozenset()
    minus_inf, plus_inf = vertex_of(Role.MINUS_INF, 3), vertex_of(Role.PLUS_INF, 3)
    assert st.f1_div1 == {(0, 1), (2, minus_inf), (3, plus_inf)}
    assert validate_one_factor(st.f1_div1, 6) == []
    assert st.removed_edge == (0, 1)
    assert st.f1_div2 == {(2, 4), (3, 5), (0, 6), (1, 7)}
    assert validate_one_factor(st.f1_div2, 8) == []
    assert len(st.f1_div1 & st.f1_div2) == 2


def test_figures():
    assert build_starters(7).f1_div1 == FIG_N7_DIV1
    assert build_starters(7).f1_div2 == FIG_N7_DIV2
    assert build_starters(8).f1_div1 == FIG_N8_DIV1
    assert build_starters(8).f1_div2 == FIG_N8_DIV2


@pytest.mark.parametrize("n", GENERAL)
def test_starter_decomposition(n):
    st = build_starters(n)
    assert validate_one_factor(st.f1_div1, 2 * n) == []
    assert validate_one_factor(st.f1_div2, 2 * n + 2) == []
    assert len(st.f1_div1 & st.f1_div2) == n - 1
    assert st.removed_edge in st.f1_div1 - st.f1_div2
    diffs = sorted(orbit_id_of(e, n) for e in st.e1 | st.e2)
    assert diffs == list(range(1, n - 1))
    assert {orbit_id_of(e, n) for e in st.e3} == {Role.MINUS_INF, Role.PLUS_INF}
    assert {orbit_id_of(e, n) for e in st.e4} == {Role.MINUS_I_INF, Role.PLUS_I_INF}


def _t_even(n):
    return {(2 * k, 2 * k + 1) for k in range(n - 1)}


def _t_odd(n):
    m = 2 * n - 2
    return {tuple(sorted(((2 * k - 1) % m, 2 * k))) for k in range(n - 1)}


@pytest.mark.parametrize("n", GENERAL)
def test_tail_factors(n):
    tails = tail_factors(n)
    assert tails.t1 | tails.t2 == orbit_edges(1, n).edges
    assert not tails.t1 & tails.t2
    assert build_starters(n).removed_edge in tails.t1
    # the residue-class case table as an independent check
    expected = _t_odd(n) if n % 4 in (0, 1) else _t_even(n)
    assert tails.t1 == expected
    for f in (tails.f2n, tails.f2n1):
        assert validate_one_factor(f, 2 * n + 2) == []


def test_n3_examples():
    d1, d2 = build_draws(3)
    assert d1.rounds[4] == {(0, 2), (1, 3), (4, 5)}
    assert d2.rounds[5] == {(0, 1), (2, 3), (4, 6), (5, 7)}
    assert fixed_factor(3) == d1.rounds[4]


def test_n2_tables():
    d1, d2 = build_draws(2)
    assert d2.rounds[2] == {(0, 3), (1, 2), (4, 5)}
    div1, div2 = orient(2, (d1, d2))
    assert [sorted(r) for r in div1] == [sorted(r) for r in N2_DIV1]
    assert [sorted(r) for r in div2] == [sorted(r) for r in N2_DIV2]


@pytest.mark.parametrize("n", [2, *GENERAL])
def test_draws_are_one_factorisations(n):
    d1, d2 = build_draws(n)
    assert validate_draw(d1) == []
    assert validate_draw(d2) == []


@pytest.mark.parametrize("n", GENERAL)
def test_round_overlaps(n):
    d1, d2 = build_draws(n)
    for r in range(2 * n - 2):
        assert len(d1.rounds[r] & d2.rounds[r]) == n - 1
    assert len(d1.rounds[2 * n - 2] & d2.rounds[2 * n - 2]) == n


def test_build_draws_rejects_small_n():
    with pytest.raises(ValueError):
        build_draws(1)


def test_orientation_examples():
    for n in (3, 4, 9):
        mi, pi = vertex_of(Role.MINUS_INF, n), vertex_of(Role.PLUS_INF, n)
        assert orient_edge((mi, pi), n) == (mi, pi)
        mii, pii = vertex_of(Role.MINUS_I_INF, n), vertex_of(Role.PLUS_I_INF, n)
        assert orient_edge((mii, pii), n) == (mii, pii)
    _, div2 = orient(3, build_draws(3))
    out = sum(1 for r in div2 for h, a in r if h == 0)
    into = sum(1 for r in div2 for h, a in r if a == 0)
    assert (out, into) == (4, 3)


@pytest.mark.parametrize("n", GENERAL)
def test_division_two_degree_split(n):
    _, div2 = orient(n, build_draws(n))
    out = Counter(h for r in div2 for h, _ in r)
    heavy = {*range(n - 1), vertex_of(Role.MINUS_INF, n), vertex_of(Role.MINUS_I_INF, n)}
    for v in range(2 * n + 2):
        assert out[v] == (n + 1 if v in heavy else n), v


@pytest.mark.parametrize("n", GENERAL)
def test_division_one_orientation_is_restriction_with_o1_reversed(n):
    div1, _ = orient(n, build_draws(n))
    for r in div1:
        for h, a in r:
            e = (min(h, a), max(h, a))
            natural = orient_edge(e, n)
            if orbit_id_of(e, n) == 1:
                assert (h, a) == natural[::-1]
            else:
                assert (h, a) == natural


def test_o1_reversal_keeps_degrees():
    for n in GENERAL:
        div1, _ = orient(n, build_draws(n))
        out = Counter(h for r in div1 for h, _ in r)
        plain = Counter(orient_edge(e, n)[0] for e in
                        {(min(h, a), max(h, a)) for r in div1 for h, a in r})
        assert out == plain


def test_expand_double_round_robin():
    rounds = expand_double_round_robin(tuple(tuple(r) for r in N2_DIV1))
    assert len(rounds) == 6
    assert set(rounds[3]) == {(1, 0), (3, 2)}
    for r in range(3):
        assert {frozenset(e) for e in rounds[r]} == {frozenset(e) for e in rounds[r + 3]}
    home = Counter(h for r in rounds for h, _ in r)
    assert set(home.values()) == {3}


@pytest.mark.parametrize("n, mode, total", [(2, DOUBLE, 6), (1, DOUBLE, 1), (7, SINGLE, 79), (1, SINGLE, 1)])
def test_schedule_totals(n, mode, total):
    s = build_schedule(n, mode)
    assert sum(round_aligned_counts(s.div1_rounds, s.div2_rounds)) == total


def test_schedule_shapes():
    for n in (1, 2, 5):
        assert len(build_schedule(n, DOUBLE).div1_rounds) == 4 * n - 2
        assert len(build_schedule(n, SINGLE).div1_rounds) == 2 * n - 1
        assert len(build_schedule(n).div2_rounds) == 2 * n + 1


def test_build_schedule_rejects_bad_input():
    with pytest.raises(ValueError):
        build_schedule(0)
    with pytest.raises(ValueError):
        build_schedule(3, "triple")
