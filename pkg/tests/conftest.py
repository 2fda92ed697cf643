import pytest

ACCEPTANCE = []


@pytest.fixture
def acceptance_record():
    """Append ``(criterion, passed, detail)`` rows for the terminal summary."""
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, passed, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {crit:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
