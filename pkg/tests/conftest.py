import random
from fractions import Fraction

import pytest

from ssm_kit.ringcore import Poly, substitute
from ssm_kit.schurbasis import SchurSeries


def S(terms, cap):
    """SchurSeries from ``{"31": 1, "41": -4}``; every part must be a single digit."""
    return SchurSeries({tuple(int(ch) for ch in key if ch != "0"): c for key, c in terms.items()}, cap)


def a(i):
    return Poly.var(f"a{i}")


def b(i):
    return Poly.var(f"b{i}")


def z(i):
    return Poly.var(f"z{i}")


def evaluate(p: Poly, point: dict):
    """Exact value of ``p`` at a point given as ``{name: number}``."""
    missing = set(p.vars) - set(point)
    if missing:
        raise KeyError(f"no value for {sorted(missing)}")
    return substitute(p, {v: point[v] for v in p.vars}).constant_term()


def random_point(names, rng, lo=-9, hi=9):
    return {v: Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for v in names}


@pytest.fixture
def rng():
    return random.Random(20241018)


ACCEPTANCE_LINES = []


def record_criterion(line: str):
    print(line)
    ACCEPTANCE_LINES.append(line)


def clear_caches():
    """Drop every memo table so timings measure a cold computation."""
    import ssm_kit

    for mod in (ssm_kit.ringcore, ssm_kit.schurbasis, ssm_kit.genfun, ssm_kit.a2pp):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
