"""Counting common fixtures and checking bounds and home/away balance."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .construction import DOUBLE, MODES, SINGLE, Schedule
from .graph_core import Draw, fixture


@dataclass(frozen=True)
class FixtureReport:
    n: int
    mode: str
    per_round_counts: tuple  # index r-1 holds f_r for division-two round r
    total: int
    q: int  # division-two round in which clubs 2n and 2n+1 meet
    fixtures: tuple = ()  # (round, fixture) pairs, sorted

    @property
    def profile(self) -> tuple:
        return self.per_round_counts


@dataclass(frozen=True)
class BalanceReport:
    home: dict = field(hash=False)
    away: dict = field(hash=False)
    max_spread: int = 0

    @property
    def balanced(self) -> bool:
        return self.max_spread <= 1


def c_max(n: int, mode: str = DOUBLE) -> int:
    """Maximum possible number of common fixtures."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if n == 1:
        return 1
    c = 2 * n * n - 3 * n + 4
    return c if mode == DOUBLE else c - 2


def division_one_rounds_for(col1: int, n: int, mode: str) -> tuple[int, ...]:
    """The division-one rounds in which an edge coloured ``col1`` is played."""
    if mode == SINGLE:
        return (col1,)
    return (col1, col1 + 2 * n - 1)


def common_fixtures(draw1: Draw, draw2: Draw, mode: str = DOUBLE) -> FixtureReport:
    """Count the edges played in the same round in both divisions.

    In double mode an edge of K_2n counts when its division-two round equals
    either of its two division-one rounds (``col1`` or ``col1 + 2n - 1``).
    Each edge has exactly one division-two round, so it is counted at most once.
    """
    if draw1.n != draw2.n:
        raise ValueError(f"draws disagree on n: {draw1.n} vs {draw2.n}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    n = draw1.n
    col1 = draw1.colouring()
    extra = fixture(2 * n, 2 * n + 1)
    counts = [0] * len(draw2.rounds)
    found = []
    q = 0
    for r, factor in enumerate(draw2.rounds, 1):
        for e in factor:
            e = fixture(*e)
            if e == extra:
                q = r
            c1 = col1.get(e)
            if c1 is not None and r in division_one_rounds_for(c1, n, mode):
                counts[r - 1] += 1
                found.append((r, e))
    return FixtureReport(n, mode, tuple(counts), sum(counts), q, tuple(sorted(found)))


def check_bound_lemmas(report: FixtureReport) -> list[str]:
    """Check the per-round and paired-round upper bounds on a double-mode report.

    These hold for every pair of draws, so any violation means the draws or
    the counting are wrong.
    """
    n = report.n
    f = list(report.per_round_counts)
    problems = []
    if len(f) != 2 * n + 1:
        return [f"expected {2 * n + 1} per-round counts, found {len(f)}"]
    if sum(f) != report.total:
        problems.append(f"total {report.total} differs from sum of counts {sum(f)}")
    q = report.q
    if not 1 <= q <= 2 * n + 1:
        problems.append(f"round q={q} outside 1..{2 * n + 1}")
    for r, fr in enumerate(f, 1):
        if r == q:
            if fr > n:
                problems.append(f"round {r} (q) has {fr} > n={n} common fixtures")
        elif fr > n - 1:
            problems.append(f"round {r} has {fr} > n-1={n - 1} common fixtures (q={q})")
    for r in (1, 2):
        partner = 2 * n - 1 + r
        if f[r - 1] + f[partner - 1] > n:
            problems.append(
                f"rounds {r} and {partner} share {f[r - 1] + f[partner - 1]} > n={n} common fixtures"
            )
    bound = c_max(n, DOUBLE)
    if report.total > bound:
        problems.append(f"total {report.total} exceeds the maximum {bound}")
    if n >= 2 and report.total == bound and not 3 <= q <= 2 * n - 1:
        problems.append(f"total reaches {bound} but q={q} is outside rounds 3..{2 * n - 1}")
    return problems


def q_allows_optimum(report: FixtureReport) -> bool:
    """Whether the round of the extra clubs' game leaves the optimum reachable."""
    return report.n == 1 or 3 <= report.q <= 2 * report.n - 1


def check_balance(rounds: Iterable, vertices: Iterable[int]) -> BalanceReport:
    home: Counter = Counter()
    away: Counter = Counter()
    for r in rounds:
        for h, a in r:
            home[h] += 1
            away[a] += 1
    vertices = list(vertices)
    home_d = {v: home[v] for v in vertices}
    away_d = {v: away[v] for v in vertices}
    spread = max(home_d.values()) - min(home_d.values()) if vertices else 0
    return BalanceReport(home_d, away_d, spread)


def schedule_balance(schedule: Schedule) -> dict[str, BalanceReport]:
    """Balance of each round robin in the schedule, keyed by a short name."""
    n = schedule.n
    half = 2 * n - 1
    out = {"division two": check_balance(schedule.div2_rounds, range(2 * n + 2))}
    out["division one, first round robin"] = check_balance(schedule.div1_rounds[:half], range(2 * n))
    if schedule.mode == DOUBLE:
        out["division one, second round robin"] = check_balance(
            schedule.div1_rounds[half:], range(2 * n)
        )
        out["division one, all rounds"] = check_balance(schedule.div1_rounds, range(2 * n))
    return out


def schedule_report(schedule: Schedule) -> FixtureReport:
    d1, d2 = schedule.draws()
    return common_fixtures(d1, d2, schedule.mode)


def check_common_orientation(schedule: Schedule) -> list[str]:
    """Every common fixture must have the same home club in both divisions."""
    report = schedule_report(schedule)
    div1 = [{fixture(*p): p for p in r} for r in schedule.div1_rounds]
    div2 = [{fixture(*p): p for p in r} for r in schedule.div2_rounds]
    problems = []
    for r, e in report.fixtures:
        home1 = div1[r - 1].get(e) if r <= len(div1) else None
        home2 = div2[r - 1][e]
        if home1 is None:
            problems.append(f"round {r}: common fixture {e} missing from division one round {r}")
        elif home1 != home2:
            problems.append(
                f"round {r}: fixture {e} is {home1} in division one but {home2} in division two"
            )
    return problems
