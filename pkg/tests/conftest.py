import math
import random

import pytest

from frobkit.core import IntSet
from frobkit.instances import random_3dm

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def naive_reachable(a, limit):
    """Plain-loop representability table; shares no code with the package."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for x in range(1, limit + 1):
        reach[x] = any(x >= e and reach[x - e] for e in a)
    return reach


def naive_frobenius(a):
    reach = naive_reachable(a, max(a) ** 2)
    return max(i for i, ok in enumerate(reach) if not ok)


def random_coprime(rng, n_lo, n_hi, a_max):
    while True:
        n = rng.randint(n_lo, n_hi)
        a = sorted(rng.sample(range(2, a_max + 1), n))
        if math.gcd(*a) == 1:
            return IntSet(tuple(a))


@pytest.fixture
def rng():
    return random.Random(20241015)


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion, re-raising failures."""

    class _Recorder:
        def __init__(self):
            self.name = None

        def __call__(self, name):
            self.name = name
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            detail = "" if exc is None else f"{exc_type.__name__}: {exc}".splitlines()[0][:160]
            _ACCEPTANCE.append((self.name, exc is None, detail))
            return False

    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


def random_small_3dm(rng, q, m1_hi, m2_hi, m2_lo=0):
    cap = q**3
    return random_3dm(rng, q, rng.randint(0, min(m1_hi, cap)), rng.randint(min(m2_lo, cap), min(m2_hi, cap)))
