import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pfaffcurves.field import GF, QQ
from pfaffcurves.poly import Poly

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def forms(draw, degree=None, field=QQ, max_terms=5):
    """Random homogeneous ternary forms."""
    d = draw(st.integers(0, 3)) if degree is None else degree
    monos = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
    chosen = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True))
    coeffs = st.integers(-5, 5) if field is not QQ else rationals
    terms = {m: draw(coeffs) for m in chosen}
    return Poly(field, terms, degree=d)


points = st.tuples(small_ints, small_ints, small_ints).filter(any)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def f101():
    return GF(101)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        parts = module.RESULTS[number]
        ok = all(p[1] for p in parts)
        elapsed = sum(p[2] for p in parts)
        notes = "; ".join(f"{p[0]}: {p[3]}" for p in parts if not p[1])
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s)"
        terminalreporter.write_line(line + (f" -- {notes}" if notes else ""))
