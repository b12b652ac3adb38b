import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance result line and fail the test if it did not pass."""
    def record(label: str, problems: list[str], elapsed: float, limit: float | None = None):
        problems = list(problems)
        if limit is not None and elapsed >= limit:
            problems.append(f"runtime {elapsed:.1f}s exceeds {limit:.0f}s")
        status = "FAIL" if problems else "PASS"
        line = f"{status} {label} ({elapsed:.1f}s)" + (": " + "; ".join(problems) if problems else "")
        _LINES.append(line)
        print(line)
        assert not problems, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
