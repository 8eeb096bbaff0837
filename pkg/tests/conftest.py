import random

import pytest

from predcascade import ArrayCollection

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record a one-line acceptance verdict, printed in the terminal summary."""

    def _report(criterion, passed, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_collection(rng, n, k, style="random"):
    """Instances of several shapes: spread values, heavy duplicates, a single
    giant array with k-1 empties, strictly interleaved arrays, all-equal."""
    if style == "giant":
        arrays = [sorted(rng.randrange(-10 * n, 10 * n) for _ in range(n))]
        arrays += [[] for _ in range(k - 1)]
        rng.shuffle(arrays)
        return ArrayCollection(arrays)
    if style == "interleaved":
        return ArrayCollection([list(range(i, n, k)) for i in range(k)])
    if style == "all_equal":
        v = rng.randrange(-5, 5)
        values = [v] * n
    elif style == "dups":
        values = [rng.randrange(0, max(2, n // 8)) for _ in range(n)]
    else:
        values = [rng.randrange(-(2**40), 2**40) for _ in range(n)]
    buckets = [[] for _ in range(k)]
    for v in values:
        buckets[rng.randrange(k)].append(v)
    return ArrayCollection([sorted(b) for b in buckets])


def sweep_queries(c):
    """Every stored value, its neighbours, and values outside the range."""
    qs = {-(2**63), 2**63 - 1}
    for arr in c.arrays:
        for v in arr:
            qs.update((v - 1, v, v + 1))
    return sorted(qs)


@pytest.fixture
def rng():
    return random.Random(12345)
