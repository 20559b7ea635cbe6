import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from flaggcs.roots import root_system
from flaggcs.sampling import random_integrable
from flaggcs.structures import BTransform, Complex, InvariantGCS, NonComplex

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

BOUND = 50

rationals = st.builds(Fraction, st.integers(-BOUND, BOUND), st.integers(1, BOUND))
nonzero_rationals = rationals.filter(lambda q: q != 0)
positive_rationals = st.builds(Fraction, st.integers(1, BOUND), st.integers(1, BOUND))

complex_blocks = st.sampled_from([Complex(1), Complex(-1)])
noncomplex_blocks = st.builds(NonComplex, rationals, nonzero_rationals)
blocks = st.one_of(complex_blocks, noncomplex_blocks)


def structures(name: str, block_strategy=blocks):
    rs = root_system(name)
    return st.lists(block_strategy, min_size=rs.d, max_size=rs.d).map(lambda bs: InvariantGCS(rs, tuple(bs)))


def b_transforms(name: str):
    d = root_system(name).d
    return st.lists(rationals, min_size=d, max_size=d).map(BTransform)


def integrable_structures(name: str):
    rs = root_system(name)
    return st.integers(0, 2**32 - 1).map(lambda seed: random_integrable(rs, random.Random(seed)))


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[1][2:]) if n.startswith("test_ac") else 99):
        outcome = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
