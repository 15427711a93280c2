import sys
from pathlib import Path

# make the sibling oracle module importable regardless of invocation dir
sys.path.insert(0, str(Path(__file__).parent))

# filled in by test_acceptance.py, one line per acceptance test
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
