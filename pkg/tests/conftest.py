import sys

import pytest

from weylcalc.weyl import build_root_system


@pytest.fixture(scope="session")
def systems():
    """Small root systems shared across tests (building them is cheap but not free)."""
    return {
        name: build_root_system(t, r)
        for name, (t, r) in {
            "A2": ("A", 2), "A3": ("A", 3), "B2": ("B", 2), "B3": ("B", 3),
            "D3": ("D", 3), "D4": ("D", 4), "G2": ("G2", None),
        }.items()
    }



def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance checks as one PASS/FAIL line each."""
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, (ok, detail) in results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  [{detail}]")
