"""Vertices, edges, one-factors and the cyclic rotation on K_2n and K_2n+2.

Labels follow one fixed convention for a problem of size ``n``:

* ``0 .. 2n-3`` are the rotating vertices,
* ``2n-2`` is minus infinity, ``2n-1`` is plus infinity (both in division one),
* ``2n`` is minus i-infinity, ``2n+1`` is plus i-infinity (division two only).

Edges are plain ``(a, b)`` tuples with ``a < b``; one-factors are frozensets of
such tuples. Rounds are numbered from 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

Fixture = tuple[int, int]
OneFactor = frozenset  # frozenset[Fixture]


class Role(enum.Enum):
    ROTATING = "rotating"
    MINUS_INF = "-inf"
    PLUS_INF = "inf"
    MINUS_I_INF = "-iinf"
    PLUS_I_INF = "iinf"


INFINITY_ROLES = (Role.MINUS_INF, Role.PLUS_INF, Role.MINUS_I_INF, Role.PLUS_I_INF)

_ROLE_OFFSET = {Role.MINUS_INF: 0, Role.PLUS_INF: 1, Role.MINUS_I_INF: 2, Role.PLUS_I_INF: 3}


def vertex_of(role: Role, n: int, x: int = 0) -> int:
    """Return the integer label of a vertex.

    ``x`` is only used for ``Role.ROTATING`` and must lie in ``[0, 2n-3]``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if role is Role.ROTATING:
        if not 0 <= x <= 2 * n - 3:
            raise ValueError(f"rotating vertex {x} out of range [0, {2 * n - 3}] for n={n}")
        return x
    return 2 * n - 2 + _ROLE_OFFSET[role]


def role_of(label: int, n: int) -> Role:
    if not 0 <= label <= 2 * n + 1:
        raise ValueError(f"label {label} out of range for n={n}")
    if label < 2 * n - 2:
        return Role.ROTATING
    return INFINITY_ROLES[label - (2 * n - 2)]


def vertex_name(label: int, n: int) -> str:
    """Human-readable name such as ``'3'`` or ``'-iinf'``."""
    role = role_of(label, n)
    return str(label) if role is Role.ROTATING else role.value


def fixture(a: int, b: int) -> Fixture:
    if a == b:
        raise ValueError(f"loop at vertex {a}")
    return (a, b) if a < b else (b, a)


def division_vertices(n: int, division: int) -> range:
    if division == 1:
        return range(2 * n)
    if division == 2:
        return range(2 * n + 2)
    raise ValueError(f"division must be 1 or 2, got {division}")


def complete_graph_edges(vertex_count: int) -> frozenset:
    return frozenset(combinations(range(vertex_count), 2))


# --------------------------------------------------------------------------
# rotation


def rotate_vertex(label: int, k: int, n: int) -> int:
    m = 2 * n - 2
    if label < m:
        return (label + k) % m
    return label


def apply_rotation(f: Fixture, k: int, n: int) -> Fixture:
    """Apply sigma**k: rotating labels shift by k mod 2n-2, the rest stay put."""
    return fixture(rotate_vertex(f[0], k, n), rotate_vertex(f[1], k, n))


def rotate_factor(edges: Iterable[Fixture], k: int, n: int) -> frozenset:
    return frozenset(apply_rotation(e, k, n) for e in edges)


# --------------------------------------------------------------------------
# orbits of <sigma> on the edges of K_2n+2

FIXED = "EG"
OrbitId = Union[int, Role, str]


@dataclass(frozen=True)
class Orbit:
    id: OrbitId
    edges: frozenset

    def __len__(self) -> int:
        return len(self.edges)


def difference(f: Fixture, n: int) -> int:
    """Cyclic difference in ``1 .. n-1`` of an edge between rotating vertices."""
    m = 2 * n - 2
    d = (f[1] - f[0]) % m
    return min(d, m - d)


def orbit_id_of(f: Fixture, n: int) -> OrbitId:
    m = 2 * n - 2
    a, b = f
    if b < m:
        return difference(f, n)
    if a < m:
        return role_of(b, n)
    return FIXED


def orbit_edges(orbit: OrbitId, n: int) -> Orbit:
    if n < 2:
        raise ValueError(f"orbits need n >= 2, got {n}")
    m = 2 * n - 2
    if orbit == FIXED:
        edges = frozenset(combinations(range(m, m + 4), 2))
    elif isinstance(orbit, Role):
        if orbit is Role.ROTATING:
            raise ValueError("ROTATING is not an orbit id")
        alpha = vertex_of(orbit, n)
        edges = frozenset((x, alpha) for x in range(m))
    elif isinstance(orbit, int) and not isinstance(orbit, bool):
        if not 1 <= orbit <= n - 1:
            raise ValueError(f"difference {orbit} outside [1, {n - 1}]")
        edges = frozenset(fixture(x, (x + orbit) % m) for x in range(m))
    else:
        raise ValueError(f"unknown orbit id {orbit!r}")
    return Orbit(orbit, edges)


def all_orbit_ids(n: int) -> list:
    return [*range(1, n), *INFINITY_ROLES, FIXED]


# --------------------------------------------------------------------------
# draws and validation


@dataclass(frozen=True)
class Draw:
    """An ordered one-factorisation for one division.

    ``rounds[r - 1]`` is the one-factor played in round ``r``.
    """

    n: int
    division: int
    rounds: tuple

    @property
    def vertex_count(self) -> int:
        return 2 * self.n + 2 * (self.division - 1)

    def colouring(self) -> dict:
        """Map each edge to the (1-indexed) round it is played in."""
        return {e: r for r, factor in enumerate(self.rounds, 1) for e in factor}

    @classmethod
    def from_rounds(cls, n: int, division: int, rounds: Iterable[Iterable]) -> "Draw":
        return cls(n, division, tuple(frozenset(fixture(a, b) for a, b in r) for r in rounds))


def validate_one_factor(edges: Iterable, vertex_count: int) -> list[str]:
    """Return a list of violations; empty means ``edges`` is a one-factor."""
    problems = []
    seen: dict[int, tuple] = {}
    for e in edges:
        a, b = e
        if a == b:
            problems.append(f"loop edge {tuple(e)}")
            continue
        for v in (a, b):
            if not 0 <= v < vertex_count:
                problems.append(f"vertex {v} of edge {tuple(e)} outside 0..{vertex_count - 1}")
            elif v in seen:
                problems.append(f"vertex {v} covered twice, by {seen[v]} and {tuple(e)}")
            else:
                seen[v] = tuple(e)
    for v in range(vertex_count):
        if v not in seen:
            problems.append(f"vertex {v} uncovered")
    return problems


def validate_draw(d: Draw) -> list[str]:
    """Check that ``d`` is an ordered one-factorisation of its complete graph."""
    vc = d.vertex_count
    problems = []
    if len(d.rounds) != vc - 1:
        problems.append(f"expected {vc - 1} rounds, found {len(d.rounds)}")
    first_round: dict[Fixture, int] = {}
    for r, factor in enumerate(d.rounds, 1):
        problems.extend(f"round {r}: {p}" for p in validate_one_factor(factor, vc))
        for e in factor:
            e = fixture(*e) if e[0] != e[1] else e
            if e in first_round:
                problems.append(f"duplicate edge {e} in rounds {first_round[e]} and {r}")
            else:
                first_round[e] = r
    missing = complete_graph_edges(vc) - first_round.keys()
    for e in sorted(missing):
        problems.append(f"edge {e} never played")
    return problems
