import random

import pytest

from hyperind.downset import Downset


def random_downset(rng: random.Random, n: int) -> Downset:
    """Random height profile; mixes uniform drops with long flat runs."""
    hs, prev = [], n - 1
    for i in range(1, n - 1):
        if prev < i + 1 or rng.random() < 1 / (n - i):
            break
        if rng.random() < 0.6:
            h = prev
        else:
            h = rng.randint(i + 1, prev)
        hs.append(h)
        prev = h
    return Downset(n, hs)


@pytest.fixture
def rng():
    return random.Random(20261019)


def random_short_tail_downset(rng: random.Random, n: int):
    """Wide downsets whose last column sits just above the diagonal, the
    shape the trapezoid and column moves look for.  None if degenerate."""
    k = rng.randint(min(16, n - 3), n - 3)
    top = rng.randint(k + 1, n - 1)
    last = min(top, k + rng.randint(1, 6))
    cuts = sorted(rng.sample(range(1, k), min(rng.randint(0, 3), k - 1))) + [k]
    vals = sorted(rng.sample(range(last, top + 1), min(len(cuts), top - last + 1)), reverse=True)
    vals += [vals[-1]] * (len(cuts) - len(vals))
    vals[-1] = last
    hs, c0 = [], 0
    for c, v in zip(cuts, vals):
        hs += [v] * (c - c0)
        c0 = c
    hs = [max(h, i + 1) for i, h in enumerate(hs, 1)]
    for i in range(1, len(hs)):
        hs[i] = min(hs[i], hs[i - 1])
    try:
        return Downset(n, hs)
    except ValueError:
        return None


# acceptance criteria record their verdicts here; printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
