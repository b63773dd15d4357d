import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                rows.append((props["criterion"], outcome.upper()[:4]))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(rows, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{status}  {name}")
