"""Brute-force search over one-factorisations of small complete graphs.

Used to certify the optimum for n <= 3 and to produce random draws for
property tests. Nothing here relies on the construction.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .graph_core import Draw, fixture

DOUBLE = "double"
SINGLE = "single"


@dataclass(frozen=True)
class EnumerationTask:
    vertex_count: int
    prefix: tuple = ()


@dataclass(frozen=True)
class OracleResult:
    n: int
    mode: str
    maximum: int
    witness: tuple  # (Draw, Draw)
    states_explored: int
    symmetry_reduced: bool = False


# --------------------------------------------------------------------------
# enumeration
#
# ``avail[v]`` is a bitmask of the partners v has not yet met.


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _matchings(avail: list, uncovered: int, forced_partner: int | None = None) -> Iterator[list]:
    """Perfect matchings of the uncovered vertices using available edges.

    Always extends the lowest uncovered vertex. If ``forced_partner`` is given,
    vertex 0 must be matched to it.
    """
    if not uncovered:
        yield []
        return
    v = (uncovered & -uncovered).bit_length() - 1
    rest = uncovered & ~(1 << v)
    options = avail[v] & rest
    if v == 0 and forced_partner is not None:
        options &= 1 << forced_partner
    for w in _bits(options):
        for tail in _matchings(avail, rest & ~(1 << w)):
            tail.append((v, w))
            yield tail


def _check_prefix(vertex_count: int, prefix: Sequence, ordered: bool) -> list:
    avail = [((1 << vertex_count) - 1) & ~(1 << v) for v in range(vertex_count)]
    for i, factor in enumerate(prefix):
        covered = 0
        for a, b in factor:
            if not (0 <= a < vertex_count and 0 <= b < vertex_count) or a == b:
                raise ValueError(f"prefix round {i + 1}: bad edge {(a, b)}")
            if not avail[a] >> b & 1:
                raise ValueError(f"prefix round {i + 1}: edge {(a, b)} already used")
            if (covered >> a | covered >> b) & 1:
                raise ValueError(f"prefix round {i + 1}: vertex reused by {(a, b)}")
            covered |= 1 << a | 1 << b
            avail[a] &= ~(1 << b)
            avail[b] &= ~(1 << a)
        if covered != (1 << vertex_count) - 1:
            raise ValueError(f"prefix round {i + 1} is not a perfect matching")
        if not ordered and fixture(0, i + 1) not in {fixture(*e) for e in factor}:
            raise ValueError(f"unordered prefix round {i + 1} must contain edge (0, {i + 1})")
    return avail


def enumerate_one_factorisations(
    vertex_count: int, prefix: Sequence = (), ordered: bool = True
) -> Iterator[tuple]:
    """Yield every one-factorisation of K_vertex_count extending ``prefix``.

    Each result is a tuple of frozensets of edges, one per round. With
    ``ordered=False`` each unordered one-factorisation is produced once, with
    its factors listed by the partner of vertex 0.
    """
    if vertex_count < 2 or vertex_count % 2:
        raise ValueError(f"vertex count must be even and >= 2, got {vertex_count}")
    avail = _check_prefix(vertex_count, prefix, ordered)
    full = (1 << vertex_count) - 1
    n_rounds = vertex_count - 1
    head = [frozenset(fixture(*e) for e in factor) for factor in prefix]

    def extend(rounds: list) -> Iterator[tuple]:
        if len(rounds) == n_rounds:
            yield tuple(rounds)
            return
        forced = None if ordered else len(rounds) + 1
        for m in _matchings(avail, full, forced):
            for a, b in m:
                avail[a] &= ~(1 << b)
                avail[b] &= ~(1 << a)
            rounds.append(frozenset(fixture(a, b) for a, b in m))
            yield from extend(rounds)
            rounds.pop()
            for a, b in m:
                avail[a] |= 1 << b
                avail[b] |= 1 << a

    yield from extend(list(head))


def run_task(task: EnumerationTask, ordered: bool = True) -> Iterator[tuple]:
    return enumerate_one_factorisations(task.vertex_count, task.prefix, ordered)


def first_round_tasks(vertex_count: int, ordered: bool = True) -> list[EnumerationTask]:
    """Split the enumeration by its first round."""
    avail = [((1 << vertex_count) - 1) & ~(1 << v) for v in range(vertex_count)]
    forced = None if ordered else 1
    tasks = []
    for m in _matchings(avail, (1 << vertex_count) - 1, forced):
        tasks.append(EnumerationTask(vertex_count, (tuple(sorted(fixture(*e) for e in m)),)))
    return tasks


def count_one_factorisations(vertex_count: int, ordered: bool = False) -> int:
    return sum(1 for _ in enumerate_one_factorisations(vertex_count, ordered=ordered))


# --------------------------------------------------------------------------
# random draws


def random_one_factorisation(vertex_count: int, rng: random.Random, budget: int = 5000) -> tuple:
    """Randomised depth-first search; restarts after ``budget`` dead ends."""
    if vertex_count < 2 or vertex_count % 2:
        raise ValueError(f"vertex count must be even and >= 2, got {vertex_count}")
    full = (1 << vertex_count) - 1
    n_rounds = vertex_count - 1

    while True:
        avail = [full & ~(1 << v) for v in range(vertex_count)]
        rounds: list = []
        current: list = []
        failures = 0

        def step(uncovered: int) -> bool:
            nonlocal failures
            if not uncovered:
                rounds.append(frozenset(current))
                saved = current[:]
                current.clear()
                if len(rounds) == n_rounds or step(full):
                    return True
                current.extend(saved)
                rounds.pop()
                return False
            v = (uncovered & -uncovered).bit_length() - 1
            options = list(_bits(avail[v] & uncovered))
            rng.shuffle(options)
            for w in options:
                avail[v] &= ~(1 << w)
                avail[w] &= ~(1 << v)
                current.append(fixture(v, w))
                if step(uncovered & ~(1 << v) & ~(1 << w)):
                    return True
                current.pop()
                avail[v] |= 1 << w
                avail[w] |= 1 << v
            failures += 1
            if failures > budget:
                raise _Restart
            return False

        try:
            if step(full):
                return tuple(rounds)
        except _Restart:
            continue


class _Restart(Exception):
    pass


def random_draw(vertex_count: int, seed: int, division: int = 1) -> Draw:
    """A valid ordered one-factorisation, reproducible from ``seed``.

    ``division`` only decides the ``n`` recorded on the draw: ``vertex_count/2``
    for division one, one less for division two.
    """
    rng = random.Random(seed)
    rounds = random_one_factorisation(vertex_count, rng)
    n = vertex_count // 2 if division == 1 else vertex_count // 2 - 1
    return Draw(n, division, rounds)


# --------------------------------------------------------------------------
# exhaustive maximisation


def relabelling_orbit(factorisation: tuple, vertex_count: int) -> set:
    """All images of an ordered one-factorisation under permutations of its vertices."""
    images = set()
    for p in permutations(range(vertex_count)):
        images.add(tuple(frozenset(fixture(p[a], p[b]) for a, b in f) for f in factorisation))
    return images


def verify_transitivity(vertex_count: int) -> tuple[bool, tuple, int]:
    """Check that relabelling acts transitively on ordered one-factorisations.

    Returns ``(transitive, canonical, count)`` where ``canonical`` is the first
    ordered one-factorisation in enumeration order.
    """
    everything = set(enumerate_one_factorisations(vertex_count, ordered=True))
    canonical = next(enumerate_one_factorisations(vertex_count, ordered=True))
    return relabelling_orbit(canonical, vertex_count) == everything, canonical, len(everything)


def _weights(div1: tuple, div2: tuple, n: int, mode: str) -> np.ndarray:
    """``W[i, r]``: common fixtures if division-two factor i is played in round r+1."""
    col1 = {e: r for r, f in enumerate(div1, 1) for e in f}
    k = len(div2)
    w = np.zeros((k, k), dtype=np.int64)
    for i, factor in enumerate(div2):
        for e in factor:
            c = col1.get(e)
            if c is None:
                continue
            rounds = (c,) if mode == SINGLE else (c, c + 2 * n - 1)
            for r in rounds:
                if r <= k:
                    w[i, r - 1] += 1
    return w


def _search(args: tuple) -> tuple:
    """Best ordered division-two draw for each division-one candidate within one task."""
    n, mode, div1_candidates, task = args
    k = 2 * n + 1
    perms = np.array(list(permutations(range(k))), dtype=np.int64)
    rows = np.arange(k)
    best = -1
    witness = None
    states = 0
    for div1 in div1_candidates:
        for div2 in run_task(task, ordered=False):
            scores = _weights(div1, div2, n, mode)[rows, perms].sum(axis=1)
            states += len(perms)
            p = int(np.argmax(scores))
            if scores[p] > best:
                best = int(scores[p])
                rounds = [None] * k
                for i, r in enumerate(perms[p]):
                    rounds[r] = div2[i]
                witness = (div1, tuple(rounds))
    return best, witness, states


def exhaustive_max_common(n: int, mode: str = DOUBLE, jobs: int | None = 1) -> OracleResult:
    """Maximum number of common fixtures over all pairs of draws, for n <= 3.

    Division-two draws are handled as unordered one-factorisations whose
    ``(2n+1)!`` round orders are all scored. For n = 3 division one is fixed to
    a single ordered one-factorisation of K_6, which is only done after
    checking that vertex relabelling reaches every other one from it.
    """
    if n < 1 or n > 3:
        raise ValueError(f"exhaustive search supports n in 1..3, got {n}")
    if mode not in (DOUBLE, SINGLE):
        raise ValueError(f"unknown mode {mode!r}")

    reduced = False
    if n == 3:
        transitive, canonical, _ = verify_transitivity(2 * n)
        if transitive:
            div1_candidates = [canonical]
            reduced = True
        else:  # pragma: no cover - the check passes for K_6
            div1_candidates = list(enumerate_one_factorisations(2 * n, ordered=True))
    else:
        div1_candidates = list(enumerate_one_factorisations(2 * n, ordered=True))

    tasks = first_round_tasks(2 * n + 2, ordered=False)
    payload = [(n, mode, div1_candidates, t) for t in tasks]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search, payload))
    else:
        results = [_search(p) for p in payload]

    # first task wins ties, so the witness does not depend on scheduling
    best, witness, states = -1, None, 0
    for score, wit, st in results:
        states += st
        if score > best:
            best, witness = score, wit
    d1 = Draw(n, 1, witness[0])
    d2 = Draw(n, 2, witness[1])
    return OracleResult(n, mode, best, (d1, d2), states, reduced)
