"""The 4-valent plane graph under a diagram: faces, connectivity, 2-point cuts.

Diagrams live on the sphere, so no face is distinguished as "outer".
A simple closed curve meeting the diagram in two non-crossing points is a
closed walk of length two in the dual graph.  If it crosses the same arc
twice, one side holds only a crossing-free piece of that arc.  If it crosses
two different arcs, both sides contain crossings and the diagram is not
prime.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .codes import DiagramError
from .diagram import LinkDiagram

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class PlaneGraph:
    rotation: tuple[tuple[int, int, int, int], ...]
    tail: tuple[tuple[int, int], ...]
    head: tuple[tuple[int, int], ...]
    free_loops: int = 0

    @property
    def num_vertices(self) -> int:
        return len(self.rotation)

    @property
    def num_edges(self) -> int:
        return len(self.tail)


@dataclass(frozen=True)
class FaceSet:
    """Faces as walks of arc-sides ``(arc, LEFT|RIGHT)``; ``face_of[2*arc+side]``."""

    faces: tuple[tuple[tuple[int, int], ...], ...]
    face_of: tuple[int, ...]

    def __len__(self):
        return len(self.faces)

    def sides(self, arc: int) -> tuple[int, int]:
        return self.face_of[2 * arc + LEFT], self.face_of[2 * arc + RIGHT]


@dataclass(frozen=True)
class CutWitness:
    kind: str  # "edge-pair" or "single-edge"
    arcs: tuple[int, ...]
    side_crossings: tuple[int, int]

    def to_json(self, d: LinkDiagram | None = None) -> dict:
        out = {"kind": self.kind, "arcs": list(self.arcs),
               "side_crossings": list(self.side_crossings)}
        if d is not None:
            out["arc_labels"] = [d.label(a) for a in self.arcs]
        return out


@dataclass(frozen=True)
class CutSearch:
    """Outcome of the exhaustive 2-point curve search."""

    witness: CutWitness | None
    faces: int
    same_arc_curves: int
    distinct_arc_curves: int
    single_edge_curves: int
    witnesses: int

    @property
    def curves_examined(self) -> int:
        return self.same_arc_curves + self.distinct_arc_curves + self.single_edge_curves

    def record(self) -> dict:
        return {"faces": self.faces, "curves_examined": self.curves_examined,
                "same_arc_curves": self.same_arc_curves,
                "distinct_arc_curves": self.distinct_arc_curves,
                "single_edge_curves": self.single_edge_curves,
                "witnesses": self.witnesses}


def build_plane_graph(d: LinkDiagram) -> PlaneGraph:
    return PlaneGraph(d.crossings, d.tail, d.head, d.free_loops)


def trace_faces(g: PlaneGraph) -> FaceSet:
    """Trace every face keeping it on the left of the walk.

    Arriving at a vertex through slot ``s`` the walk leaves through slot
    ``s - 1``; a walk along an arc in its own direction sees the arc's left
    side.
    """
    face_of = [-1] * (2 * g.num_edges)
    faces = []
    for start in range(2 * g.num_edges):
        if face_of[start] >= 0:
            continue
        walk, dart = [], start
        while face_of[dart] < 0:
            face_of[dart] = len(faces)
            arc, side = divmod(dart, 2)
            walk.append((arc, side))
            c, s = g.head[arc] if side == LEFT else g.tail[arc]
            s = (s - 1) % 4
            nxt = g.rotation[c][s]
            dart = 2 * nxt + (LEFT if g.tail[nxt] == (c, s) else RIGHT)
        faces.append(tuple(walk))
    return FaceSet(tuple(faces), tuple(face_of))


def vertex_components(g: PlaneGraph, removed: frozenset[int] = frozenset()) -> list[int]:
    """Component label per vertex, ignoring the ``removed`` edges."""
    parent = list(range(g.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for arc in range(g.num_edges):
        if arc in removed:
            continue
        a, b = find(g.tail[arc][0]), find(g.head[arc][0])
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(g.num_vertices)]


def euler_by_component(g: PlaneGraph, faces: FaceSet | None = None) -> dict[int, int]:
    """V - E + F for each connected piece of the graph, keyed by component root."""
    faces = faces or trace_faces(g)
    comp = vertex_components(g)
    chi: dict[int, int] = defaultdict(int)
    for v in range(g.num_vertices):
        chi[comp[v]] += 1
    for arc in range(g.num_edges):
        chi[comp[g.tail[arc][0]]] -= 1
    for walk in faces.faces:
        chi[comp[g.tail[walk[0][0]][0]]] += 1
    return dict(chi)


def is_planar(d: LinkDiagram) -> bool:
    g = build_plane_graph(d)
    return all(v == 2 for v in euler_by_component(g).values())


def diagram_connected(d: LinkDiagram) -> bool:
    if d.num_crossings == 0:
        return d.free_loops == 1
    if d.free_loops:
        return False
    return len(set(vertex_components(build_plane_graph(d)))) == 1


def cut_sides(g: PlaneGraph, arcs: tuple[int, ...]) -> tuple[int, int] | None:
    comp = vertex_components(g, frozenset(arcs))
    a = comp[g.tail[arcs[0]][0]]
    if comp[g.head[arcs[0]][0]] == a:
        return None
    left = sum(1 for c in comp if c == a)
    return left, g.num_vertices - left


def search_prime_cuts(d: LinkDiagram) -> CutSearch:
    if d.num_crossings == 0 or not diagram_connected(d):
        raise DiagramError("prime-cut search needs a connected diagram with crossings")
    g = build_plane_graph(d)
    fs = trace_faces(g)
    by_pair: dict[tuple[int, int], list[int]] = defaultdict(list)
    bridges = []
    for arc in range(g.num_edges):
        f, h = fs.sides(arc)
        if f == h:
            bridges.append(arc)
        else:
            by_pair[(min(f, h), max(f, h))].append(arc)

    candidates = [(arc,) for arc in bridges]
    distinct = 0
    for arcs in by_pair.values():
        for i, e1 in enumerate(arcs):
            for e2 in arcs[i + 1:]:
                candidates.append((e1, e2))
                distinct += 1

    found = []
    for arcs in candidates:
        sides = cut_sides(g, arcs)
        if sides and min(sides) >= 1:
            kind = "edge-pair" if len(arcs) == 2 else "single-edge"
            found.append(CutWitness(kind, arcs, sides))
    best = min(found, key=lambda w: (abs(w.side_crossings[0] - w.side_crossings[1]), w.arcs),
               default=None)
    return CutSearch(best, len(fs), g.num_edges, distinct, len(bridges), len(found))


def find_prime_cut(d: LinkDiagram) -> CutWitness | None:
    """A 2-point curve with crossings on both sides, or None if the diagram is prime."""
    return search_prime_cuts(d).witness


def is_prime_diagram(d: LinkDiagram) -> bool:
    if d.num_crossings == 0 or not diagram_connected(d):
        return False
    return find_prime_cut(d) is None


def split_along(d: LinkDiagram, w: CutWitness) -> tuple[LinkDiagram, LinkDiagram]:
    """Cut along an edge-pair witness and close each side with one arc."""
    if w.kind != "edge-pair":
        # a single arc is never crossed once by a closed curve on a 4-valent diagram
        raise DiagramError("only edge-pair cuts can be split")
    e1, e2 = w.arcs
    (c1, s1), (c2, s2) = d.head[e1], d.head[e2]
    crossings = [list(x) for x in d.crossings]
    crossings[c1][s1] = e2
    crossings[c2][s2] = e1
    joined = LinkDiagram(tuple(map(tuple, crossings)), d.over_forward)
    comp = vertex_components(build_plane_graph(joined))
    pieces = []
    for root in sorted(set(comp)):
        keep = [c for c in range(d.num_crossings) if comp[c] == root]
        arcs = sorted({a for c in keep for a in joined.crossings[c]})
        dense = {a: i for i, a in enumerate(arcs)}
        pieces.append(LinkDiagram(
            tuple(tuple(dense[a] for a in joined.crossings[c]) for c in keep),
            tuple(joined.over_forward[c] for c in keep)))
    if len(pieces) != 2:
        raise DiagramError("cut does not separate the diagram")
    return pieces[0], pieces[1]
