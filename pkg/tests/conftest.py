import sys
import random

import pytest
from hypothesis import settings, strategies as st

from hyperweyl.hyper import HyperPerm
from hyperweyl.perm import Perm

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def perms_of(degree: int):
    return st.permutations(list(range(degree))).map(lambda xs: Perm(xs))


def hyperperms(n: int = 4, t: int = 2):
    return st.permutations(list(range(n ** t))).map(lambda xs: HyperPerm.from_images(xs, n, t))


def random_hyper(rng: random.Random, n: int = 4, t: int = 2) -> HyperPerm:
    size = n ** t
    return HyperPerm.from_images(rng.sample(range(size), size), n, t)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
