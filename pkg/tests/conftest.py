import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    """Collect acceptance outcomes: record(criterion, label, ok, seconds)."""
    def _record(num, label, ok, seconds):
        prev = ACCEPTANCE.get(num)
        if prev is not None:
            ok = ok and prev[1]
            seconds += prev[2]
        ACCEPTANCE[num] = (label, ok, seconds)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        label, ok, secs = ACCEPTANCE[num]
        tr.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {label}  ({secs:.1f}s)")
