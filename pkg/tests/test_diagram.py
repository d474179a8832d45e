import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotcert.codes import BraidWord, DiagramError, PDCode, parse_gauss, parse_pd
from knotcert.corpus import FIGURE_EIGHT_PD, HOPF_PD, TREFOIL_PD
from knotcert.diagram import (
    LinkDiagram,
    braid_closure,
    crossing_sign,
    gauss_to_diagram,
    pd_to_diagram,
)
from knotcert.topology import build_plane_graph, trace_faces

from .conftest import braid_words, diagrams
from .oracles import (
    arrival_slots,
    geometric_sign,
    has_planar_rotation,
    label_successors,
    pd_signs,
    permutation_cycles,
)


def canonical_pd(pd: PDCode):
    """PD crossings up to arc relabelling, crossing order and free loops."""
    return sorted(pd.crossings), pd.free_loops


def test_sign_convention_geometry():
    # under enters at slot 0 and leaves at slot 2; over from slot 1 to 3 is +1
    assert geometric_sign(0, 2, 1, 3) == 1
    assert geometric_sign(0, 2, 3, 1) == -1


def test_trefoil_orientation():
    pd = parse_pd(TREFOIL_PD)
    d = pd_to_diagram(pd)
    assert len(d.components) == 1 and d.num_arcs == 6
    heads = arrival_slots(pd)
    for a in range(d.num_arcs):
        assert d.head[a] == heads[d.label(a)]
    assert [crossing_sign(d, c) for c in range(3)] == pd_signs(pd) == [1, 1, 1]


def test_hopf_components():
    d = pd_to_diagram(parse_pd(HOPF_PD))
    assert len(d.components) == 2
    assert [d.sign(c) for c in range(2)] == pd_signs(parse_pd(HOPF_PD))


def test_figure_eight_signs():
    pd = parse_pd(FIGURE_EIGHT_PD)
    d = pd_to_diagram(pd)
    assert [d.sign(c) for c in range(4)] == pd_signs(pd)
    assert sorted(pd_signs(pd)) == [-1, -1, 1, 1]


def test_kinks_are_valid():
    d = pd_to_diagram(parse_pd("X(1,1,2,2) X(3,3,4,4)"))
    assert [d.sign(c) for c in range(2)] == [-1, -1]
    assert pd_to_diagram(parse_pd("X(1,2,2,1)")).sign(0) == 1


def test_free_loops_only():
    d = pd_to_diagram(PDCode((), 2))
    assert d.num_crossings == 0 and d.num_components == 2


def test_successor_orbits_are_components():
    d = pd_to_diagram(parse_pd(FIGURE_EIGHT_PD))
    for comp in d.components:
        for a, b in zip(comp, comp[1:] + comp[:1]):
            assert d.successor[a] == b


@pytest.mark.parametrize("text", [
    "X(1,2,3,4) X(1,4,3,2)",  # arc 1 enters twice
    "X(1,2,3,4) X(1,2,3,4)",
])
def test_orientation_conflicts(text):
    with pytest.raises(DiagramError):
        pd_to_diagram(parse_pd(text))


def test_non_consecutive_labels_rejected():
    with pytest.raises(DiagramError, match="consecutively"):
        pd_to_diagram(parse_pd("X(1,5,2,4) X(3,6,5,1) X(4,2,6,3)"))


def test_non_planar_pd_rejected():
    # the virtual trefoil written as a PD code
    with pytest.raises(DiagramError):
        pd_to_diagram(parse_pd("X(2,1,3,4) X(3,2,4,1)"))


def test_braid_closure_examples():
    t = braid_closure(BraidWord(2, (1, 1, 1)))
    assert t.num_crossings == 3 and t.num_components == 1
    assert all(t.sign(c) == 1 for c in range(3))
    h = braid_closure(BraidWord(2, (1, 1, 1, 1)))
    assert h.num_crossings == 4 and h.num_components == 2
    m = braid_closure(BraidWord(2, (-1, -1, -1)))
    assert all(m.sign(c) == -1 for c in range(3))
    u = braid_closure(BraidWord(3, ()))
    assert u.num_crossings == 0 and u.free_loops == 3


def test_braid_closure_matches_trefoil_pd():
    t = braid_closure(BraidWord(2, (1, 1, 1)))
    assert canonical_pd(t.to_pd()) == canonical_pd(parse_pd(TREFOIL_PD))


def _braid_crossing_oracle(letter):
    """Signs from the braid picture: sigma_i's under-strand runs SW -> NE.

    Corner positions, counterclockwise from SW: SW=0, SE=1, NE=2, NW=3 in
    units of a quarter turn starting at 225 degrees.
    """
    vec = {"SW": (-1, -1), "SE": (1, -1), "NE": (1, 1), "NW": (-1, 1)}
    if letter > 0:
        under, over = ("SW", "NE"), ("SE", "NW")
    else:
        under, over = ("SE", "NW"), ("SW", "NE")
    u = [vec[under[1]][i] - vec[under[0]][i] for i in range(2)]
    o = [vec[over[1]][i] - vec[over[0]][i] for i in range(2)]
    rot = (-u[1], u[0])
    return 1 if rot[0] * o[0] + rot[1] * o[1] > 0 else -1


@given(braid_words())
def test_braid_closure_properties(word):
    d = braid_closure(word)
    assert d.num_crossings == len(word.letters)
    assert d.num_components == permutation_cycles(word.strand_count, word.letters)
    assert [d.sign(c) for c in range(d.num_crossings)] == [
        _braid_crossing_oracle(x) for x in word.letters]


@given(diagrams())
def test_pd_round_trip(d):
    pd = d.to_pd()
    again = pd_to_diagram(pd)
    assert canonical_pd(again.to_pd()) == canonical_pd(pd)
    assert again.num_components == d.num_components


@given(diagrams())
def test_pd_signs_match_geometric_oracle(d):
    pd = d.to_pd()
    if not pd.crossings:
        return
    assert [pd_to_diagram(pd).sign(c) for c in range(d.num_crossings)] == pd_signs(pd)


@given(diagrams())
def test_global_reversal_keeps_signs(d):
    r = d.reverse()
    assert [r.sign(c) for c in range(d.num_crossings)] == [d.sign(c) for c in range(d.num_crossings)]
    assert r.reverse() == d


@given(diagrams(), st.data())
def test_single_component_reversal(d, data):
    if not d.components:
        return
    k = data.draw(st.integers(0, len(d.components) - 1))
    r = d.reverse_components([k])
    for c in range(d.num_crossings):
        u, o = d.strand_components(c)
        expected = d.sign(c) if (u == k) == (o == k) else -d.sign(c)
        assert r.sign(c) == expected


@given(diagrams())
def test_mirror_negates_signs(d):
    m = d.mirror()
    assert [m.sign(c) for c in range(d.num_crossings)] == [-d.sign(c) for c in range(d.num_crossings)]
    assert m.mirror() == d


def test_gauss_trefoil_matches_pd():
    g = gauss_to_diagram(parse_gauss("O1+U2+O3+U1+O2+U3+"))
    t = pd_to_diagram(parse_pd(TREFOIL_PD))
    assert len(trace_faces(build_plane_graph(g))) == len(trace_faces(build_plane_graph(t))) == 5
    assert sorted(g.sign(c) for c in range(3)) == sorted(t.sign(c) for c in range(3))
    assert canonical_pd(g.to_pd()) == canonical_pd(t.to_pd())


def test_gauss_empty_unknot():
    d = gauss_to_diagram(parse_gauss(""))
    assert d.num_crossings == 0 and d.num_components == 1


def test_gauss_hopf():
    d = gauss_to_diagram(parse_gauss("O1+U2+;U1+O2+"))
    assert d.num_components == 2 and all(d.sign(c) == 1 for c in range(2))


def test_virtual_trefoil_rejected():
    word = [[(1, True), (2, True), (1, False), (2, False)]]
    assert not has_planar_rotation(word)
    for signs in ("++", "+-", "-+", "--"):
        text = f"O1{signs[0]}O2{signs[1]}U1{signs[0]}U2{signs[1]}"
        with pytest.raises(DiagramError, match="non-realizable"):
            gauss_to_diagram(parse_gauss(text))


def test_classical_word_has_planar_rotation():
    word = [[(1, True), (2, False), (3, True), (1, False), (2, True), (3, False)]]
    assert has_planar_rotation(word)


@settings(max_examples=60)
@given(diagrams())
def test_gauss_round_trip_through_oracle(d):
    """Gauss codes read off real diagrams are realizable and rebuild the same PD."""
    if not d.num_crossings:
        return
    tokens = []
    for ci in range(len(d.components)):
        comp = []
        for c, over in d.passages(ci):
            comp.append(f"{'O' if over else 'U'}{c + 1}{'+' if d.sign(c) > 0 else '-'}")
        tokens.append("".join(comp))
    text = ";".join(tokens + [""] * d.free_loops)
    g = gauss_to_diagram(parse_gauss(text))
    assert canonical_pd(g.to_pd()) == canonical_pd(d.to_pd()) or _same_up_to_relabel(g, d)


def _same_up_to_relabel(a: LinkDiagram, b: LinkDiagram) -> bool:
    return (sorted(a.sign(c) for c in range(a.num_crossings))
            == sorted(b.sign(c) for c in range(b.num_crossings))
            and a.num_components == b.num_components
            and len(trace_faces(build_plane_graph(a))) == len(trace_faces(build_plane_graph(b))))


def test_label_successors_oracle():
    succ = label_successors(parse_pd(HOPF_PD))
    assert succ == {1: 2, 2: 1, 3: 4, 4: 3}


def test_relabel_invariance():
    d = pd_to_diagram(parse_pd(FIGURE_EIGHT_PD))
    arc_perm = [(a * 3 + 1) % 8 for a in range(8)]
    r = d.relabel(arc_perm, [2, 0, 3, 1])
    assert sorted(r.sign(c) for c in range(4)) == sorted(d.sign(c) for c in range(4))
