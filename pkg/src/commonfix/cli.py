"""Command-line front end.

Usage examples
--------------
  commonfix generate --n 7 --mode double --format json --output n7.json
  commonfix verify n7.json
  commonfix analyze n7.json
  commonfix analyze --n 4 --seed 11
  commonfix oracle --n 3 --jobs 4

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .analysis import (
    FixtureReport,
    c_max,
    check_bound_lemmas,
    check_common_orientation,
    common_fixtures,
    q_allows_optimum,
    schedule_balance,
    schedule_report,
)
from .construction import DOUBLE, MODES, Schedule, build_schedule
from .document import (
    DocumentError,
    document_from_schedule,
    document_to_schedule,
    parse_json,
    recheck_document,
    render_csv,
    render_json,
    render_text,
)
from .graph_core import Draw, fixture, validate_draw
from .oracle import exhaustive_max_common, random_draw

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Check:
    name: str
    passed: bool
    structural: bool
    details: list

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        kind = "" if self.structural else " (informational)"
        return f"{status}  {self.name}{kind}"


def structural_checks(schedule: Schedule) -> list[Check]:
    n = schedule.n
    half = 2 * n - 1
    checks = []

    want1 = 2 * half if schedule.mode == DOUBLE else half
    sizes = []
    if len(schedule.div1_rounds) != want1:
        sizes.append(f"division one has {len(schedule.div1_rounds)} rounds, expected {want1}")
    if len(schedule.div2_rounds) != 2 * n + 1:
        sizes.append(f"division two has {len(schedule.div2_rounds)} rounds, expected {2 * n + 1}")
    checks.append(Check("round counts", not sizes, True, sizes))

    d1, d2 = schedule.draws()
    for label, d in (("division one draw", d1), ("division two draw", d2)):
        problems = validate_draw(d)
        checks.append(Check(label, not problems, True, problems))

    if schedule.mode == DOUBLE:
        problems = []
        first, second = schedule.div1_rounds[:half], schedule.div1_rounds[half:]
        for r, (a, b) in enumerate(zip(first, second), 1):
            if sorted((y, x) for x, y in a) != sorted(b):
                problems.append(f"round {r + half} is not round {r} with home and away reversed")
        checks.append(Check("second round robin mirrors the first", not problems, True, problems))
    return checks


def schedule_checks(schedule: Schedule) -> list[Check]:
    checks = structural_checks(schedule)
    if not all(c.passed for c in checks):
        return checks
    report = schedule_report(schedule)
    for name, bal in schedule_balance(schedule).items():
        detail = [] if bal.balanced else [f"home counts {bal.home}"]
        checks.append(Check(f"balance: {name}", bal.balanced, False, detail))
    problems = check_common_orientation(schedule)
    checks.append(Check("common fixtures share home club", not problems, False, problems))
    if schedule.mode == DOUBLE:
        problems = check_bound_lemmas(report)
        checks.append(Check("upper-bound lemmas", not problems, False, problems))
    optimum = c_max(schedule.n, schedule.mode)
    checks.append(Check(
        f"optimal ({report.total} of {optimum})", report.total == optimum, False, []
    ))
    return checks


def report_text(report: FixtureReport) -> str:
    lines = [
        f"n = {report.n}, mode = {report.mode}",
        f"total common fixtures: {report.total} (maximum {c_max(report.n, report.mode)})",
        f"per round: {' '.join(map(str, report.per_round_counts))}",
        f"extra clubs meet in round q = {report.q}"
        + ("" if q_allows_optimum(report) else " (the maximum is out of reach)"),
        "common fixtures: " + ", ".join(f"r{r}:{a}-{b}" for r, (a, b) in report.fixtures),
    ]
    return "\n".join(lines)


def report_dict(report: FixtureReport) -> dict:
    return {
        "n": report.n,
        "mode": report.mode,
        "total": report.total,
        "maximum": c_max(report.n, report.mode),
        "per_round_counts": list(report.per_round_counts),
        "q": report.q,
        "fixtures": [{"round": r, "a": a, "b": b} for r, (a, b) in report.fixtures],
    }


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_names(path: str | None) -> list[str] | None:
    if not path:
        return None
    return [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines()]


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from exc
    return parse_json(text)


# --------------------------------------------------------------------------
# commands


def cmd_generate(args: argparse.Namespace) -> int:
    schedule = build_schedule(args.n, args.mode)
    doc = document_from_schedule(schedule)
    if args.format == "json":
        text = render_json(doc)
    elif args.format == "csv":
        text = render_csv(doc)
    else:
        text = render_text(doc, _read_names(args.names))
    _emit(text, args.output)

    failed = [c for c in schedule_checks(schedule) if not c.passed]
    for c in failed:
        print(f"self-check failed: {c.name}: {c.details[:5]}", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _load(args.path)
    schedule = document_to_schedule(doc)
    checks = schedule_checks(schedule)
    if all(c.passed for c in checks if c.structural):
        problems = recheck_document(doc)
        checks.append(Check("document flags and summary match analysis", not problems, True, problems))
    for c in checks:
        print(c.line())
        for d in c.details[:10]:
            print(f"      {d}")
    if all(c.passed for c in checks if c.structural):
        print()
        print(report_text(schedule_report(schedule)))
        return EXIT_OK
    return EXIT_FAILED


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.path:
        schedule = document_to_schedule(_load(args.path))
        report = schedule_report(schedule)
    elif args.n is not None:
        if args.seed is None:
            report = schedule_report(build_schedule(args.n, args.mode))
        else:
            d1 = random_draw(2 * args.n, args.seed, division=1)
            d2 = random_draw(2 * args.n + 2, args.seed + 1, division=2)
            report = common_fixtures(d1, d2, args.mode)
    else:
        print("analyze needs a schedule file or --n", file=sys.stderr)
        return EXIT_USAGE

    lemmas = check_bound_lemmas(report) if report.mode == DOUBLE else []
    if args.format == "json":
        out = report_dict(report)
        out["bound_violations"] = lemmas
        _emit(json.dumps(out, indent=2) + "\n", args.output)
    else:
        text = report_text(report) + "\n"
        if report.mode == DOUBLE:
            text += "upper-bound lemmas: " + ("hold" if not lemmas else "; ".join(lemmas)) + "\n"
        _emit(text, args.output)
    return EXIT_OK


def _draw_rows(d: Draw) -> list:
    return [sorted(list(e) for e in r) for r in d.rounds]


def cmd_oracle(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    result = exhaustive_max_common(args.n, args.mode, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    optimum = c_max(args.n, args.mode)
    d1, d2 = result.witness

    witness = {
        "n": result.n,
        "mode": result.mode,
        "maximum": result.maximum,
        "states_explored": result.states_explored,
        "division_one": _draw_rows(d1),
        "division_two": _draw_rows(d2),
    }
    if args.output:
        Path(args.output).write_text(json.dumps(witness, indent=2) + "\n", encoding="utf-8")

    if args.format == "json":
        out = dict(witness, expected=optimum, seconds=round(elapsed, 3),
                   symmetry_reduced=result.symmetry_reduced)
        print(json.dumps(out, indent=2))
    else:
        print(f"n = {result.n}, mode = {result.mode}")
        print(f"maximum common fixtures: {result.maximum} (expected {optimum})")
        print(f"states explored: {result.states_explored}")
        if result.symmetry_reduced:
            print("division one fixed by relabelling (transitivity checked)")
        print(f"wall time: {elapsed:.2f}s")
        print(f"witness: {args.output}" if args.output else "witness:")
        if not args.output:
            for name, rows in (("division one", witness["division_one"]),
                               ("division two", witness["division_two"])):
                print(f"  {name}:")
                for r, edges in enumerate(rows, 1):
                    print(f"    round {r}: " + "  ".join(f"{a}-{b}" for a, b in edges))
    return EXIT_OK if result.maximum == optimum else EXIT_FAILED


# --------------------------------------------------------------------------
# argument parsing


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commonfix",
        description="Two-division round-robin draws with the most common fixtures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build an optimal schedule")
    gen.add_argument("--n", type=_positive, required=True, help="division one has 2n clubs")
    gen.add_argument("--mode", choices=MODES, default=DOUBLE)
    gen.add_argument("--format", choices=("json", "csv", "text"), default="json")
    gen.add_argument("--output", help="write here instead of stdout")
    gen.add_argument("--names", help="club names, one per line, for text output")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check a schedule file")
    ver.add_argument("path")
    ver.set_defaults(func=cmd_verify)

    ana = sub.add_parser("analyze", help="count common fixtures")
    ana.add_argument("path", nargs="?")
    ana.add_argument("--n", type=_positive)
    ana.add_argument("--mode", choices=MODES, default=DOUBLE)
    ana.add_argument("--seed", type=int, help="analyse random draws instead of the construction")
    ana.add_argument("--format", choices=("json", "text"), default="text")
    ana.add_argument("--output")
    ana.set_defaults(func=cmd_analyze)

    orc = sub.add_parser("oracle", help="exhaustive search for n <= 3")
    orc.add_argument("--n", type=int, choices=(1, 2, 3), required=True)
    orc.add_argument("--mode", choices=MODES, default=DOUBLE)
    orc.add_argument("--jobs", type=_positive, default=None,
                     help="worker processes (default: all processors)")
    orc.add_argument("--format", choices=("json", "text"), default="text")
    orc.add_argument("--output", help="write the witness draws here as JSON")
    orc.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
