import numpy as np
import pytest

from curvebranch import BivariatePolynomial, analyze, configure, discriminant_points, minimal_spanning_tree

# y^3 - 2 x^3 y - x^9
WORKED = {(0, 3): 1.0, (3, 1): -2.0, (9, 0): -1.0}
# y^9 + 2 x^2 y^6 + 2 x^4 y^3 + x^6 + y^2
LARGE = {(0, 9): 1.0, (2, 6): 2.0, (4, 3): 2.0, (6, 0): 1.0, (0, 2): 1.0}


@pytest.fixture(scope="session")
def worked():
    return BivariatePolynomial.from_terms(WORKED)


@pytest.fixture(scope="session")
def worked_config(worked):
    d = discriminant_points(worked)
    return configure(d.points, leading_zero=d.leading_zero)


@pytest.fixture(scope="session")
def worked_tree(worked_config):
    return minimal_spanning_tree(worked_config)


@pytest.fixture(scope="session")
def worked_analysis(worked):
    return analyze(worked)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = getattr(rep, "nodeid", "").split("::")[-1]
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and name.startswith("test_criterion_"):
                if rep.when == "call" or outcome == "error":
                    lines.append((int(name.split("_")[2]), "PASS" if outcome == "passed" else "FAIL", name))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, verdict, name in sorted(lines):
            terminalreporter.write_line(f"criterion {num:2d}: {verdict}  ({name})")
