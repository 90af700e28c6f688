import os

import pytest

from genus2split.algebra import SeededSampler
from genus2split.humbert import interpolate_mod_p, monomial_basis, DEFAULT_MARGIN, sample_invariants

HUMBERT_PRIME = 999983
HUMBERT_WEIGHT = 90


@pytest.fixture(scope="session")
def humbert_relation():
    """The weight-90 relation at one 6-digit prime, seed 0 (about a minute)."""
    n = len(monomial_basis(HUMBERT_WEIGHT)) + DEFAULT_MARGIN
    samples = sample_invariants(HUMBERT_PRIME, SeededSampler(0), n)
    return interpolate_mod_p(HUMBERT_PRIME, samples, HUMBERT_WEIGHT)


def pytest_report_header(config):
    if os.environ.get("GENUS2SPLIT_MULTIPRIME"):
        return "GENUS2SPLIT_MULTIPRIME set: the 8-prime reconstruction run is enabled"
    return None


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, passed: bool, text: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
