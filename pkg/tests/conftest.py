import random
import sys

import pytest
from hypothesis import strategies as st

from walkrho.digraph import Digraph


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Digraph(n, tuple(rows))


def random_digraph(rng: random.Random, max_n: int = 6, min_n: int = 1) -> Digraph:
    n = rng.randint(min_n, max_n)
    return Digraph(n, tuple(rng.randrange(1 << n) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines, key=lambda k: (int(k.split(".")[0]), k)):
        terminalreporter.write_line(lines[key])
