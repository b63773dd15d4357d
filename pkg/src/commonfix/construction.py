"""Optimal draws for the two-division problem.

For ``n >= 3`` division one is a bipyramidal one-factorisation of K_2n built
from a starter by the rotation ``sigma``; division two reuses the rotated
starter with one difference-1 edge swapped for two edges into the extra clubs,
and the leftover difference-1 edges are split into the last two rounds.
``n = 2`` and ``n = 1`` are fixed tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph_core import (
    FIXED,
    Draw,
    Fixture,
    Role,
    apply_rotation,
    difference,
    fixture,
    orbit_id_of,
    rotate_factor,
    vertex_of,
)

DOUBLE = "double"
SINGLE = "single"
MODES = (DOUBLE, SINGLE)

OrientedFixture = tuple[int, int]  # (home, away)


@dataclass(frozen=True)
class StarterParams:
    s: int
    t: int
    u: int
    v: int


@dataclass(frozen=True)
class StarterDecomposition:
    e1: frozenset
    e2: frozenset
    e3: frozenset
    e4: frozenset
    removed_edge: Fixture
    f1_div1: frozenset
    f1_div2: frozenset


@dataclass(frozen=True)
class TailFactors:
    t1: frozenset
    t2: frozenset
    f2n: frozenset
    f2n1: frozenset


@dataclass(frozen=True)
class Schedule:
    """Both divisions' oriented rounds.

    ``div1_rounds`` holds ``4n-2`` rounds in double mode and ``2n-1`` in single
    mode; ``div2_rounds`` always holds ``2n+1``. Each round is a tuple of
    ``(home, away)`` pairs sorted by home label.
    """

    n: int
    mode: str
    div1_rounds: tuple
    div2_rounds: tuple

    def draws(self) -> tuple[Draw, Draw]:
        """The unoriented draws: division one's first round robin and division two."""
        first = self.div1_rounds[: 2 * self.n - 1]
        return Draw.from_rounds(self.n, 1, first), Draw.from_rounds(self.n, 2, self.div2_rounds)


# --------------------------------------------------------------------------
# starter


def _require_general(n: int) -> None:
    if n < 3:
        raise ValueError(f"the rotational construction needs n >= 3, got n={n}")


def starter_params(n: int) -> StarterParams:
    _require_general(n)
    if n % 2 == 0:
        s = (n - 4) // 2
        u = (3 * n - 6) // 2
    else:
        s = (n - 3) // 2
        u = (3 * n - 7) // 2
    return StarterParams(s=s, t=n - 2 - s, u=u, v=3 * n - 5 - u)


def build_starters(n: int) -> StarterDecomposition:
    p = starter_params(n)
    minus_inf, plus_inf = vertex_of(Role.MINUS_INF, n), vertex_of(Role.PLUS_INF, n)
    minus_iinf, plus_iinf = vertex_of(Role.MINUS_I_INF, n), vertex_of(Role.PLUS_I_INF, n)

    e1 = frozenset(fixture(x, n - 2 - x) for x in range(p.s + 1))
    e2 = frozenset(fixture(x, 3 * n - 5 - x) for x in range(n - 1, p.u + 1))
    if n % 2 == 0:
        e3 = frozenset({fixture((n - 2) // 2, minus_inf), fixture(2 * n - 3, plus_inf)})
        e4 = frozenset({fixture(p.u, minus_iinf), fixture(p.v, plus_iinf)})
        removed = fixture(p.u, p.v)
    else:
        e3 = frozenset({fixture((3 * n - 5) // 2, minus_inf), fixture(2 * n - 3, plus_inf)})
        e4 = frozenset({fixture(p.s, minus_iinf), fixture(p.t, plus_iinf)})
        removed = fixture(p.s, p.t)

    f1_div1 = e1 | e2 | e3
    f1_div2 = (f1_div1 | e4) - {removed}
    return StarterDecomposition(e1, e2, e3, e4, removed, f1_div1, f1_div2)


def tail_factors(n: int, removed_edge: Fixture | None = None) -> TailFactors:
    """The two last division-two rounds, built from the removed starter edge."""
    if removed_edge is None:
        removed_edge = build_starters(n).removed_edge
    t1 = frozenset(apply_rotation(removed_edge, 2 * j, n) for j in range(n - 1))
    t2 = rotate_factor(t1, 1, n)
    minus_inf, plus_inf = vertex_of(Role.MINUS_INF, n), vertex_of(Role.PLUS_INF, n)
    minus_iinf, plus_iinf = vertex_of(Role.MINUS_I_INF, n), vertex_of(Role.PLUS_I_INF, n)
    f2n = t1 | {fixture(minus_inf, minus_iinf), fixture(plus_inf, plus_iinf)}
    f2n1 = t2 | {fixture(minus_inf, plus_iinf), fixture(plus_inf, minus_iinf)}
    return TailFactors(t1, t2, frozenset(f2n), frozenset(f2n1))


def fixed_factor(n: int) -> frozenset:
    """Round 2n-1 of division one: the difference n-1 edges plus {-inf, inf}."""
    edges = {fixture(x, x + n - 1) for x in range(n - 1)}
    edges.add(fixture(vertex_of(Role.MINUS_INF, n), vertex_of(Role.PLUS_INF, n)))
    return frozenset(edges)


# --------------------------------------------------------------------------
# draws

# n = 2 tables, oriented (home, away); clubs 0..5 as labelled.
_N2_DIV1 = (
    ((0, 1), (2, 3)),
    ((2, 0), (3, 1)),
    ((0, 3), (1, 2)),
)
_N2_DIV2 = (
    ((2, 3), (4, 0), (5, 1)),
    ((2, 0), (3, 5), (4, 1)),
    ((0, 3), (1, 2), (4, 5)),
    ((1, 0), (3, 4), (5, 2)),
    ((0, 5), (1, 3), (2, 4)),
)

# n = 1 is a convention: {0, 1} meets in round 1 of both divisions.
_N1_DIV1 = (((0, 1),),)
_N1_DIV2 = (
    ((0, 1), (2, 3)),
    ((2, 0), (3, 1)),
    ((0, 3), (1, 2)),
)


def build_draws(n: int) -> tuple[Draw, Draw]:
    """Unoriented optimal draws for divisions one and two (``n >= 2``)."""
    if n < 2:
        raise ValueError(f"build_draws needs n >= 2, got n={n}; use build_schedule for n=1")
    if n == 2:
        return Draw.from_rounds(2, 1, _N2_DIV1), Draw.from_rounds(2, 2, _N2_DIV2)

    st = build_starters(n)
    tails = tail_factors(n, st.removed_edge)
    last1 = fixed_factor(n)
    last2 = last1 | {fixture(vertex_of(Role.MINUS_I_INF, n), vertex_of(Role.PLUS_I_INF, n))}

    div1 = [rotate_factor(st.f1_div1, r, n) for r in range(2 * n - 2)]
    div1.append(last1)
    div2 = [rotate_factor(st.f1_div2, r, n) for r in range(2 * n - 2)]
    div2.extend([last2, tails.f2n, tails.f2n1])
    return Draw(n, 1, tuple(div1)), Draw(n, 2, tuple(div2))


# --------------------------------------------------------------------------
# orientation


@lru_cache(maxsize=None)
def _oriented_fixed_edges(n: int) -> frozenset:
    mi, pi = vertex_of(Role.MINUS_INF, n), vertex_of(Role.PLUS_INF, n)
    mii, pii = vertex_of(Role.MINUS_I_INF, n), vertex_of(Role.PLUS_I_INF, n)
    return frozenset({(mi, pi), (mi, mii), (pi, pii), (mii, pi), (mii, pii), (pii, mi)})


def orient_edge(f: Fixture, n: int) -> OrientedFixture:
    """Home/away for an edge of K_2n+2 under the orbit-wise rule (``n >= 3``)."""
    a, b = f
    orbit = orbit_id_of(f, n)
    if orbit == FIXED:
        return (a, b) if (a, b) in _oriented_fixed_edges(n) else (b, a)
    if isinstance(orbit, Role):
        # a is the rotating endpoint, b the fixed one
        home_first = (a % 2 == 0) if orbit in (Role.PLUS_INF, Role.PLUS_I_INF) else (a % 2 == 1)
        return (a, b) if home_first else (b, a)
    if orbit == n - 1:
        return (a, b)  # a <= n-2 < b
    return (a, b) if (b - a) % (2 * n - 2) == orbit else (b, a)


def _sorted_round(edges) -> tuple:
    return tuple(sorted(edges))


def orient(n: int, draws: tuple[Draw, Draw]) -> tuple[tuple, tuple]:
    """Orient both draws so that every common fixture has the same home club.

    Returns ``(div1_rounds, div2_rounds)`` for rounds ``1..2n-1`` and ``1..2n+1``.
    Division one takes the division-two orientation of each edge, except that
    difference-1 edges are reversed.
    """
    draw1, draw2 = draws
    if n == 2:
        return _N2_DIV1, _N2_DIV2
    if n == 1:
        return _N1_DIV1, _N1_DIV2

    def home_away_div1(e: Fixture) -> OrientedFixture:
        h, a = orient_edge(e, n)
        if e[1] < 2 * n - 2 and difference(e, n) == 1:
            return (a, h)
        return (h, a)

    div1 = tuple(_sorted_round(home_away_div1(e) for e in r) for r in draw1.rounds)
    div2 = tuple(_sorted_round(orient_edge(e, n) for e in r) for r in draw2.rounds)
    return div1, div2


def expand_double_round_robin(rounds: tuple) -> tuple:
    """Append the return leg: the same rounds again with home and away swapped."""
    second = tuple(_sorted_round((a, h) for h, a in r) for r in rounds)
    return tuple(rounds) + second


def build_schedule(n: int, mode: str = DOUBLE) -> Schedule:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if n == 1:
        div1, div2 = _N1_DIV1, _N1_DIV2
    else:
        div1, div2 = orient(n, build_draws(n))
    if mode == DOUBLE:
        div1 = expand_double_round_robin(div1)
    return Schedule(n, mode, tuple(div1), tuple(div2))
