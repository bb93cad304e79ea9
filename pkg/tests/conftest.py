import pytest
from hypothesis import assume
from hypothesis import strategies as st

from eqred.cardinals import ALEPH_0, Cardinal, OrdinalW2, SymbolicProfile, aleph
from eqred.cardinals.profiles import AlephLimitFamily, ArithmeticFamily, Point
from eqred.relcore import FiniteEqRel, SizeProfile

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@st.composite
def relations(draw, max_ground=5, min_ground=0):
    n = draw(st.integers(min_ground, max_ground))
    labels = draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=n, max_size=n))
    return FiniteEqRel.from_labels(labels)


ordinals = st.builds(OrdinalW2, st.integers(0, 4), st.integers(0, 4))
counts = st.sampled_from([Cardinal(1), Cardinal(2), Cardinal(3), ALEPH_0])
points = st.builds(Point, st.one_of(st.integers(1, 12).map(Cardinal), ordinals.map(aleph)), counts)
arith = st.builds(ArithmeticFamily, st.integers(1, 6), st.integers(1, 4), counts)
limits = st.builds(AlephLimitFamily, st.sampled_from([0, 1]), counts)


@st.composite
def symbolic_profiles(draw):
    candidates = draw(st.lists(arith, max_size=2)) + draw(st.lists(limits, max_size=2)) + draw(st.lists(points, max_size=4))
    kept = []
    for entry in candidates:
        try:
            SymbolicProfile(tuple(kept + [entry]))
        except ValueError:
            continue
        kept.append(entry)
    assume(kept)
    return SymbolicProfile(tuple(kept))


@pytest.fixture
def v():
    return SizeProfile.from_vector


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
