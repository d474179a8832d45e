"""Orientation-dependent diagram invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .codes import DiagramError
from .diagram import LinkDiagram
from .topology import diagram_connected


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix: lk off the diagonal, self-writhe on it."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class PositivityVerdict:
    positive: bool
    witness_orientation: tuple[bool, ...] | None = None  # True = component reversed
    obstruction: tuple[int, ...] | None = None  # one of these is negative under every orientation

    def __post_init__(self):
        if (self.witness_orientation is None) == (self.obstruction is None):
            raise ValueError("exactly one of witness_orientation / obstruction is required")
        if self.positive != (self.witness_orientation is not None):
            raise ValueError("positive verdicts carry a witness, negative ones an obstruction")

    def to_json(self) -> dict:
        out: dict = {"positive": self.positive}
        if self.positive:
            out["witness_orientation"] = list(self.witness_orientation)
        else:
            out["obstruction"] = list(self.obstruction)
        return out


def writhe(d: LinkDiagram) -> int:
    return sum(d.sign(c) for c in range(d.num_crossings))


def oriented(d: LinkDiagram, flips) -> LinkDiagram:
    """``d`` with every component whose flip bit is set reversed."""
    if not flips or not any(flips):
        return d
    return d.reverse_components(i for i, f in enumerate(flips) if f and i < len(d.components))


def signs_under(d: LinkDiagram, flips) -> list[int]:
    """Crossing signs after reversing the flipped components (no rebuild)."""
    out = []
    for c in range(d.num_crossings):
        u, o = d.strand_components(c)
        s = d.sign(c)
        if u != o and bool(flips[u]) != bool(flips[o]):
            s = -s
        out.append(s)
    return out


def _parity_conflict(d: LinkDiagram) -> tuple[int, ...]:
    """Crossings forming a cycle of inconsistent sign constraints between components."""
    k = len(d.components)
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for c in range(d.num_crossings):
        u, o = d.strand_components(c)
        if u != o:
            want = 1 if d.sign(c) < 0 else 0  # need flip[u] xor flip[o] == want
            adj[u].append((o, want, c))
            adj[o].append((u, want, c))
    colour: list[int | None] = [None] * k
    parent: list[tuple[int, int] | None] = [None] * k
    depth = [0] * k
    for root in range(k):
        if colour[root] is not None:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, want, c in adj[a]:
                if colour[b] is None:
                    colour[b] = colour[a] ^ want
                    parent[b] = (a, c)
                    depth[b] = depth[a] + 1
                    queue.append(b)
                elif colour[b] != colour[a] ^ want:
                    path = {c}
                    x, y = a, b
                    while x != y:
                        if depth[x] < depth[y]:
                            x, y = y, x
                        px, cx = parent[x]
                        path.add(cx)
                        x = px
                    return tuple(sorted(path))
    raise AssertionError("no parity conflict")


def is_positive(d: LinkDiagram) -> PositivityVerdict:
    """Search every orientation of the components (the first one pinned)."""
    for c in range(d.num_crossings):
        u, o = d.strand_components(c)
        if u == o and d.sign(c) < 0:
            return PositivityVerdict(False, obstruction=(c,))
    k = len(d.components)
    pad = (False,) * d.free_loops
    for rest in product((False, True), repeat=max(k - 1, 0)):
        flips = ((False,) + rest)[:k] if k else ()
        if all(s > 0 for s in signs_under(d, flips)):
            return PositivityVerdict(True, witness_orientation=tuple(flips) + pad)
    return PositivityVerdict(False, obstruction=_parity_conflict(d))


def linking_matrix(d: LinkDiagram, flips=None) -> LinkingMatrix:
    signs = signs_under(d, flips) if flips else [d.sign(c) for c in range(d.num_crossings)]
    k = d.num_components
    m = [[0] * k for _ in range(k)]
    for c, s in enumerate(signs):
        u, o = d.strand_components(c)
        m[u][o] += s
        if u != o:
            m[o][u] += s
    for i in range(k):
        for j in range(k):
            if i != j:
                if m[i][j] % 2:
                    raise DiagramError("odd crossing count between two components")
                m[i][j] //= 2
    return LinkingMatrix(tuple(map(tuple, m)))


def linking_graph_witness(m: LinkingMatrix) -> list[tuple[int, int, int]] | None:
    """Spanning tree ``[(i, j, lk), ...]`` of the nonzero-lk graph, or None if disconnected."""
    k = m.size
    if k == 0:
        return None
    seen = {0}
    tree = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(k):
            if j not in seen and i != j and m[i, j] != 0:
                seen.add(j)
                tree.append((min(i, j), max(i, j), m[i, j]))
                queue.append(j)
    return tree if len(seen) == k else None


def linking_graph_connected(m: LinkingMatrix) -> bool:
    return linking_graph_witness(m) is not None


def seifert_circles(d: LinkDiagram, flips=None) -> int:
    d = oriented(d, flips)
    nxt = []
    for a in range(d.num_arcs):
        c, slot = d.head[a]
        if slot == 0:
            nxt.append(d.over_arcs(c)[1])
        else:
            nxt.append(d.under_arcs(c)[1])
    seen = [False] * d.num_arcs
    cycles = 0
    for a in range(d.num_arcs):
        if not seen[a]:
            cycles += 1
            while not seen[a]:
                seen[a] = True
                a = nxt[a]
    return cycles + d.free_loops


def canonical_euler_characteristic(d: LinkDiagram, flips=None) -> int:
    """Euler characteristic ``s - c`` of the canonical Seifert surface."""
    if not diagram_connected(d):
        raise DiagramError("canonical surface needs a connected diagram")
    return seifert_circles(d, flips) - d.num_crossings


def canonical_genus(d: LinkDiagram, flips=None) -> int:
    chi = canonical_euler_characteristic(d, flips)
    return (2 - d.num_components - chi) // 2
