import os
import sys

# make the shared test helpers importable as a plain module
sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    """Echo one line per acceptance criterion after the run."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        status, detail = RESULTS[num]
        line = f"[criterion {num}] {status}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)
