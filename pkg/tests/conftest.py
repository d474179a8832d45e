import pytest
from hypothesis import strategies as st

from knotcert.codes import BraidWord
from knotcert.corpus import named_corpus
from knotcert.diagram import braid_closure, connected_sum, disjoint_union

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@st.composite
def braid_words(draw, max_strands=4, max_length=10, positive=False, min_length=0):
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1)
    if not positive:
        gens = st.tuples(gens, st.booleans()).map(lambda t: t[0] if t[1] else -t[0])
    letters = draw(st.lists(gens, min_size=min_length, max_size=max_length))
    return BraidWord(n, tuple(letters))


@st.composite
def diagrams(draw, min_crossings=0):
    """Braid closures, their disjoint unions and connected sums."""
    d = braid_closure(draw(braid_words(min_length=min_crossings)))
    how = draw(st.sampled_from(["plain", "plain", "union", "sum"]))
    if how == "union":
        d = disjoint_union(d, braid_closure(draw(braid_words())))
    elif how == "sum" and d.num_crossings:
        other = braid_closure(draw(braid_words(min_length=1)))
        a1 = draw(st.integers(0, d.num_arcs - 1))
        a2 = draw(st.integers(0, other.num_arcs - 1))
        d = connected_sum(d, other, a1, a2)
    return d


@pytest.fixture(scope="session")
def corpus():
    return named_corpus()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {desc}")
