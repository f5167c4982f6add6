import os
from decimal import Decimal, getcontext

import pytest
from hypothesis import HealthCheck, settings

from ordlab.scalars import ExactScalar

settings.register_profile(
    "ordlab", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ordlab"))

getcontext().prec = 80


def dec_value(x: ExactScalar) -> Decimal:
    """High precision decimal value; an oracle independent of the enclosure code."""
    total = Decimal(x.coeffs[0].numerator) / Decimal(x.coeffs[0].denominator)
    for q, d in zip(x.coeffs[1:], x.basis.radicands):
        total += Decimal(q.numerator) / Decimal(q.denominator) * Decimal(d).sqrt()
    return total


@pytest.fixture
def v23():
    basis = (2, 3)
    return (ExactScalar.sqrt(2, basis), ExactScalar.sqrt(3, basis), ExactScalar.rational(1, basis))


# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
