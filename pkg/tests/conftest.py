import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from convalgebra.scalars import CC, QQ, PrimeField

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)

EXACT_FIELDS = [QQ, F2, F5, F7, PrimeField(97)]


def rationals(bound=10):
    return st.builds(
        Fraction, st.integers(-bound, bound), st.integers(1, bound)
    )


def scalars(field, bound=10):
    if field == QQ:
        return rationals(bound)
    if field == CC:
        comp = st.floats(-bound, bound, allow_nan=False, allow_infinity=False)
        return st.builds(complex, comp, comp)
    return st.integers(0, field.p - 1).map(field)


def random_scalar(rng, field, bound=10):
    if field == QQ:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    if field == CC:
        return complex(rng.uniform(-bound, bound), rng.uniform(-bound, bound))
    return field(rng.randrange(field.p))


def random_nonzero_scalar(rng, field, bound=10):
    while True:
        c = random_scalar(rng, field, bound)
        if c:
            return c


@pytest.fixture
def rng():
    return random.Random(20261015)


# acceptance summary: one PASS/FAIL line per criterion

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {name}")
