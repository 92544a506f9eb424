import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acceptance_log.RESULTS):
        ok, elapsed, limit, title = acceptance_log.RESULTS[k]
        terminalreporter.write_line(
            f"criterion {k}: {'PASS' if ok else 'FAIL'}  {elapsed:7.1f}s (limit {limit:g}s)  {title}")
