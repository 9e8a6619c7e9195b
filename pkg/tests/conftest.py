import pytest

_LINES: list[str] = []


class Report:
    """Collects one PASS/FAIL line per acceptance criterion."""

    def __call__(self, number, name, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:>2} {name}" + (f": {detail}" if detail else "")
        _LINES.append(line)
        print(line)
        return ok


@pytest.fixture
def report():
    return Report()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
