"""Schedule documents: JSON (canonical), CSV and plain-text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .analysis import schedule_balance, schedule_report
from .construction import MODES, Schedule
from .graph_core import fixture

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """A schedule file that cannot be read; the message names the field."""


@dataclass(frozen=True)
class FixtureEntry:
    home: int
    away: int
    common: bool


@dataclass(frozen=True)
class RoundEntry:
    round: int
    fixtures: tuple


@dataclass(frozen=True)
class DivisionEntry:
    division: int
    rounds: tuple


@dataclass(frozen=True)
class Summary:
    total_common: int
    per_round_counts: tuple
    q: int
    balanced: bool


@dataclass(frozen=True)
class ScheduleDocument:
    format_version: str
    n: int
    mode: str
    divisions: tuple
    summary: Summary

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "n": self.n,
            "mode": self.mode,
            "divisions": [
                {
                    "division": d.division,
                    "rounds": [
                        {
                            "round": r.round,
                            "fixtures": [
                                {"home": f.home, "away": f.away, "common": f.common}
                                for f in r.fixtures
                            ],
                        }
                        for r in d.rounds
                    ],
                }
                for d in self.divisions
            ],
            "summary": {
                "total_common": self.summary.total_common,
                "per_round_counts": list(self.summary.per_round_counts),
                "q": self.summary.q,
                "balanced": self.summary.balanced,
            },
        }

    @classmethod
    def from_dict(cls, data: Any) -> "ScheduleDocument":
        root = _obj(data, "document")
        version = _field(root, "format_version", str, "document")
        if version != FORMAT_VERSION:
            raise DocumentError(f"format_version: unsupported version {version!r}")
        n = _field(root, "n", int, "document")
        if n < 1:
            raise DocumentError(f"n: must be >= 1, got {n}")
        mode = _field(root, "mode", str, "document")
        if mode not in MODES:
            raise DocumentError(f"mode: must be one of {MODES}, got {mode!r}")

        divisions = []
        for i, d in enumerate(_field(root, "divisions", list, "document")):
            where = f"divisions[{i}]"
            d = _obj(d, where)
            rounds = []
            for j, r in enumerate(_field(d, "rounds", list, where)):
                rwhere = f"{where}.rounds[{j}]"
                r = _obj(r, rwhere)
                fixtures = []
                for k, f in enumerate(_field(r, "fixtures", list, rwhere)):
                    fwhere = f"{rwhere}.fixtures[{k}]"
                    f = _obj(f, fwhere)
                    fixtures.append(FixtureEntry(
                        _field(f, "home", int, fwhere),
                        _field(f, "away", int, fwhere),
                        _field(f, "common", bool, fwhere),
                    ))
                rounds.append(RoundEntry(_field(r, "round", int, rwhere), tuple(fixtures)))
            divisions.append(DivisionEntry(_field(d, "division", int, where), tuple(rounds)))
        found = sorted(d.division for d in divisions)
        if found != [1, 2]:
            raise DocumentError(f"divisions: expected divisions 1 and 2, found {found}")

        s = _obj(_field(root, "summary", dict, "document"), "summary")
        counts = _field(s, "per_round_counts", list, "summary")
        for k, c in enumerate(counts):
            if not isinstance(c, int) or isinstance(c, bool):
                raise DocumentError(f"summary.per_round_counts[{k}]: expected integer, got {c!r}")
        summary = Summary(
            _field(s, "total_common", int, "summary"),
            tuple(counts),
            _field(s, "q", int, "summary"),
            _field(s, "balanced", bool, "summary"),
        )
        return cls(version, n, mode, tuple(sorted(divisions, key=lambda d: d.division)), summary)

    def division(self, number: int) -> DivisionEntry:
        return next(d for d in self.divisions if d.division == number)


def _obj(value: Any, where: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _field(obj: dict, key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise DocumentError(f"{where}.{key}: missing field")
    value = obj[key]
    ok = isinstance(value, kind)
    if kind is int and isinstance(value, bool):
        ok = False
    if not ok:
        raise DocumentError(f"{where}.{key}: expected {kind.__name__}, got {value!r}")
    return value


# --------------------------------------------------------------------------
# schedule <-> document


def document_from_schedule(schedule: Schedule) -> ScheduleDocument:
    report = schedule_report(schedule)
    common = set(report.fixtures)
    balanced = all(b.balanced for b in schedule_balance(schedule).values())

    def block(number: int, rounds: Sequence) -> DivisionEntry:
        entries = []
        for r, fixtures in enumerate(rounds, 1):
            entries.append(RoundEntry(r, tuple(
                FixtureEntry(h, a, (r, fixture(h, a)) in common) for h, a in fixtures
            )))
        return DivisionEntry(number, tuple(entries))

    return ScheduleDocument(
        FORMAT_VERSION,
        schedule.n,
        schedule.mode,
        (block(1, schedule.div1_rounds), block(2, schedule.div2_rounds)),
        Summary(report.total, report.per_round_counts, report.q, balanced),
    )


def document_to_schedule(doc: ScheduleDocument) -> Schedule:
    def rounds(number: int) -> tuple:
        block = sorted(doc.division(number).rounds, key=lambda r: r.round)
        return tuple(tuple((f.home, f.away) for f in r.fixtures) for r in block)

    return Schedule(doc.n, doc.mode, rounds(1), rounds(2))


def recheck_document(doc: ScheduleDocument) -> list[str]:
    """Differences between the stored common flags/summary and a fresh analysis."""
    fresh = document_from_schedule(document_to_schedule(doc))
    problems = []
    for number in (1, 2):
        stored = {r.round: r for r in doc.division(number).rounds}
        for r in fresh.division(number).rounds:
            old = stored.get(r.round)
            old_flags = {(f.home, f.away): f.common for f in old.fixtures} if old else {}
            for f in r.fixtures:
                if old_flags.get((f.home, f.away)) != f.common:
                    problems.append(
                        f"division {number} round {r.round}: fixture ({f.home}, {f.away}) "
                        f"marked common={old_flags.get((f.home, f.away))}, analysis says {f.common}"
                    )
    if doc.summary != fresh.summary:
        problems.append(f"summary {doc.summary} disagrees with analysis {fresh.summary}")
    return problems


# --------------------------------------------------------------------------
# rendering


def render_json(doc: ScheduleDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def parse_json(text: str) -> ScheduleDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return ScheduleDocument.from_dict(data)


def render_csv(doc: ScheduleDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["division", "round", "home", "away", "common"])
    for d in doc.divisions:
        for r in d.rounds:
            for f in r.fixtures:
                writer.writerow([d.division, r.round, f.home, f.away, int(f.common)])
    return buf.getvalue()


def render_text(doc: ScheduleDocument, names: Sequence[str] | None = None) -> str:
    def label(v: int) -> str:
        if names is not None and v < len(names):
            return names[v]
        return str(v)

    lines = [f"n = {doc.n}, mode = {doc.mode}  (* marks a common fixture, home team first)"]
    for d in doc.divisions:
        lines.append("")
        lines.append(f"Division {d.division}")
        for r in d.rounds:
            cells = [f"{label(f.home)}-{label(f.away)}{'*' if f.common else ''}" for f in r.fixtures]
            lines.append(f"  round {r.round:>3}: " + "  ".join(cells))
    s = doc.summary
    lines.append("")
    lines.append(f"common fixtures: {s.total_common}")
    lines.append(f"per round (division two): {' '.join(map(str, s.per_round_counts))}")
    lines.append(f"extra clubs meet in round {s.q}")
    lines.append(f"balanced: {'yes' if s.balanced else 'no'}")
    return "\n".join(lines) + "\n"
