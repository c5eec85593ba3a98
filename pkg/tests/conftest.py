import pytest

_LINES = []


def pytest_configure(config):
    for tier in ("small", "medium", "extended"):
        config.addinivalue_line("markers", f"{tier}: acceptance criterion of the {tier} tier")


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number, ok, detail):
        _LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({request.node.name}): {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
