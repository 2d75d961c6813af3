from __future__ import annotations

import pytest

from hrms.store import Store


@pytest.fixture
def store(tmp_path):
    handle = Store(tmp_path / "data", create=True)
    yield handle
    handle.close()


def pytest_runtest_logreport(report):
    """Print one PASS/FAIL line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    status = "PASS" if report.passed else "FAIL"
    name = report.nodeid.split("::")[-1]
    print(f"\n[ACCEPTANCE {status}] {name}")
