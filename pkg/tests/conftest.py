import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m and rep.when == "call" or (m and outcome == "error"):
                verdicts[int(m.group(1))] = ("PASS" if outcome == "passed" else "FAIL", m.group(2))
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        status, name = verdicts[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {name.replace('_', ' ')}")
