import sys
from pathlib import Path

import pytest
from hypothesis import settings

from hsemi.constructions import cyclic_group, group_adjoin, paper_example_s7, symmetric_inverse_monoid
from hsemi.enumeration import EnumerationConfig, enumerate_semigroups

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def s7():
    return paper_example_s7()


@pytest.fixture(scope="session")
def i2():
    return symmetric_inverse_monoid(2)[0]


@pytest.fixture(scope="session")
def i3():
    return symmetric_inverse_monoid(3)[0]


@pytest.fixture(scope="session")
def z2_adjoined():
    return group_adjoin(cyclic_group(2), 1)


@pytest.fixture(scope="session")
def small_corpus():
    """Every labeled semigroup of order 1..3."""
    return [S for n in (1, 2, 3) for S in enumerate_semigroups(EnumerationConfig(n))]


@pytest.fixture(scope="session")
def order4():
    return list(enumerate_semigroups(EnumerationConfig(4)))


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    lines = acc.summary_lines() if acc is not None else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
