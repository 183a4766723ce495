import pytest

from cecpoly.oracle import OracleConfig
from cecpoly.verify import run_claims

# (criterion, passed, detail) rows appended by test_acceptance
ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def full_reports():
    return run_claims(budget=OracleConfig(workers=1))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'} - {detail}")
