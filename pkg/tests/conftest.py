import numpy as np
import pytest

from achull.geometry import PointSet

# filled by tests/test_acceptance.py, printed in the terminal summary
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{name}: {ACCEPTANCE[name]}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def square_center():
    return PointSet(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]]))
