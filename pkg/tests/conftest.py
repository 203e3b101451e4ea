from fractions import Fraction

import pytest
from hypothesis import strategies as st

from plancherel.partitions import enumerate_partitions

THETAS = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3, 5)]


@st.composite
def partitions(draw, max_size=8, min_size=0):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    return draw(st.sampled_from(enumerate_partitions(n)))


positive_thetas = st.fractions(min_value=Fraction(1, 10), max_value=5, max_denominator=12).filter(lambda t: t > 0)


def all_partitions(max_size):
    return [lam for n in range(max_size + 1) for lam in enumerate_partitions(n)]


@pytest.fixture(params=THETAS, ids=str)
def theta(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def report(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
