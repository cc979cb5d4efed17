"""Echoes the acceptance criterion verdict lines after the run, so they
survive pytest's output capture (see tests/test_acceptance.py)."""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
