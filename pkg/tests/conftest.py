import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from subspacecodes import field_new, projective_space, rref  # noqa: E402


@pytest.fixture(scope="session")
def F2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def P22(F2):
    return projective_space(F2, 2)


@pytest.fixture(scope="session")
def fig1(F2):
    """The five subspaces of F_2^2 named as in the Hasse diagram of P(F_2^2)."""
    return {
        "O": rref(F2, 2, []),
        "S1": rref(F2, 2, [(0, 1)]),
        "S2": rref(F2, 2, [(1, 0)]),
        "S3": rref(F2, 2, [(1, 1)]),
        "W": rref(F2, 2, [(1, 0), (0, 1)]),
    }


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
