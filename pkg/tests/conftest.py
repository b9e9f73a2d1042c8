import hypothesis.strategies as st
from hypothesis import settings

from weylcycles.lattice import CurveClass, DivisorClass, cremona_sets

settings.register_profile("default", max_examples=300, deadline=None)
settings.load_profile("default")

AMBIENTS = [(3, 7), (4, 8)]


@st.composite
def ambient_and_set(draw, ambients=AMBIENTS):
    n, s = draw(st.sampled_from(ambients))
    return n, s, draw(st.sampled_from(cremona_sets(n, s)))


def divisors(n, s, lo=-3, hi=12):
    return st.builds(lambda d, m: DivisorClass(n, s, d, tuple(m)),
                     st.integers(-2, 2 * hi), st.lists(st.integers(lo, hi), min_size=s, max_size=s))


def curves(n, s, lo=-3, hi=12):
    return st.builds(lambda d, m: CurveClass(n, s, d, tuple(m)),
                     st.integers(-2, 2 * hi), st.lists(st.integers(lo, hi), min_size=s, max_size=s))


# -- acceptance report ----------------------------------------------------------

ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
