"""Shared pytest hooks: collects acceptance PASS lines and prints them in the
terminal summary, where capture cannot swallow them."""

_summary_lines = []


def record_summary(line: str) -> None:
    _summary_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _summary_lines:
        terminalreporter.section("acceptance criteria")
        for line in _summary_lines:
            terminalreporter.write_line(line)
