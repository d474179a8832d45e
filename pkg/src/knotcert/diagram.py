"""Oriented link diagrams on the 2-sphere.

A :class:`LinkDiagram` stores, for every crossing, the four incident arcs in
counterclockwise order starting from the incoming under-strand (the PD
convention), plus one bit saying which way the over-strand runs.  Everything
else (arc endpoints, successor map, components) is derived and cached.

Sign convention: a crossing is positive when the under-strand direction,
turned a quarter turn counterclockwise, points along the over-strand.  With
the PD layout (under enters at slot 0, leaves at slot 2) that happens exactly
when the over-strand enters at slot 1 and leaves at slot 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .codes import BraidWord, DiagramError, GaussCode, PDCode

Crossing = tuple[int, int, int, int]
End = tuple[int, int]  # (crossing, slot)


def _slot_is_incoming(slot: int, over_forward: bool) -> bool:
    if slot == 0:
        return True
    if slot == 2:
        return False
    return (slot == 1) == over_forward


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented, component-labelled diagram; arcs are dense indices ``0..2c-1``."""

    crossings: tuple[Crossing, ...]
    over_forward: tuple[bool, ...]
    free_loops: int = 0
    arc_labels: tuple[int, ...] | None = field(default=None, compare=False)

    tail: tuple[End, ...] = field(init=False, repr=False, compare=False)
    head: tuple[End, ...] = field(init=False, repr=False, compare=False)
    successor: tuple[int, ...] = field(init=False, repr=False, compare=False)
    components: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    arc_component: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        crossings = tuple(tuple(x) for x in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "over_forward", tuple(bool(b) for b in self.over_forward))
        if len(self.over_forward) != len(crossings):
            raise DiagramError("one over-direction bit is needed per crossing")
        if self.free_loops < 0:
            raise DiagramError("free_loops must be non-negative")
        n_arcs = 2 * len(crossings)
        tails: list[End | None] = [None] * n_arcs
        heads: list[End | None] = [None] * n_arcs
        for c, (x, fwd) in enumerate(zip(crossings, self.over_forward)):
            for slot, a in enumerate(x):
                if not 0 <= a < n_arcs:
                    raise DiagramError(f"arc index {a} out of range")
                ends = heads if _slot_is_incoming(slot, fwd) else tails
                if ends[a] is not None:
                    raise DiagramError(
                        f"arc {self.label(a)} is forced in both directions")
                ends[a] = (c, slot)
        if any(t is None for t in tails) or any(h is None for h in heads):
            raise DiagramError("every arc needs exactly one tail and one head")
        succ = tuple(crossings[c][(s + 2) % 4] for c, s in heads)

        comps = []
        comp_of = [-1] * n_arcs
        for start in range(n_arcs):
            if comp_of[start] >= 0:
                continue
            run, a = [], start
            while comp_of[a] < 0:
                comp_of[a] = len(comps)
                run.append(a)
                a = succ[a]
            comps.append(tuple(run))
        object.__setattr__(self, "tail", tuple(tails))
        object.__setattr__(self, "head", tuple(heads))
        object.__setattr__(self, "successor", succ)
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "arc_component", tuple(comp_of))

    # -- basic queries -----------------------------------------------------

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_arcs(self) -> int:
        return 2 * len(self.crossings)

    @property
    def num_components(self) -> int:
        """Link components, counting crossing-free loops."""
        return len(self.components) + self.free_loops

    def label(self, arc: int) -> int:
        return self.arc_labels[arc] if self.arc_labels else arc + 1

    def sign(self, c: int) -> int:
        return 1 if self.over_forward[c] else -1

    def under_arcs(self, c: int) -> tuple[int, int]:
        """(incoming, outgoing) under arcs at crossing ``c``."""
        x = self.crossings[c]
        return x[0], x[2]

    def over_arcs(self, c: int) -> tuple[int, int]:
        """(incoming, outgoing) over arcs at crossing ``c``."""
        x = self.crossings[c]
        return (x[1], x[3]) if self.over_forward[c] else (x[3], x[1])

    def strand_components(self, c: int) -> tuple[int, int]:
        """(under component, over component) at crossing ``c``."""
        return (self.arc_component[self.crossings[c][0]],
                self.arc_component[self.over_arcs(c)[0]])

    def passages(self, component: int) -> list[tuple[int, bool]]:
        """Crossings met along a component, in order, as ``(crossing, is_over)``."""
        out = []
        for a in self.components[component]:
            c, slot = self.head[a]
            out.append((c, slot % 2 == 1))
        return out

    # -- transformations ---------------------------------------------------

    def reverse_components(self, which: Iterable[int]) -> "LinkDiagram":
        """Reverse the orientation of the given components (arc indices kept)."""
        flip = set(which)
        crossings, bits = [], []
        for c, x in enumerate(self.crossings):
            under_comp, over_comp = self.strand_components(c)
            fwd = self.over_forward[c]
            if under_comp in flip:
                x = (x[2], x[3], x[0], x[1])
                fwd = not fwd
            if over_comp in flip:
                fwd = not fwd
            crossings.append(x)
            bits.append(fwd)
        return LinkDiagram(tuple(crossings), tuple(bits), self.free_loops, self.arc_labels)

    def reverse(self) -> "LinkDiagram":
        return self.reverse_components(range(len(self.components)))

    def mirror(self) -> "LinkDiagram":
        """Swap over and under at every crossing (orientation kept)."""
        crossings, bits = [], []
        for x, fwd in zip(self.crossings, self.over_forward):
            if fwd:
                crossings.append((x[1], x[2], x[3], x[0]))
            else:
                crossings.append((x[3], x[0], x[1], x[2]))
            bits.append(not fwd)
        return LinkDiagram(tuple(crossings), tuple(bits), self.free_loops, self.arc_labels)

    def relabel(self, arc_perm: Sequence[int], crossing_perm: Sequence[int]) -> "LinkDiagram":
        """Apply permutations to arc and crossing indices (for invariance checks)."""
        n = self.num_crossings
        crossings: list = [None] * n
        bits: list = [None] * n
        for c, x in enumerate(self.crossings):
            crossings[crossing_perm[c]] = tuple(arc_perm[a] for a in x)
            bits[crossing_perm[c]] = self.over_forward[c]
        return LinkDiagram(tuple(crossings), tuple(bits), self.free_loops)

    def to_pd(self) -> PDCode:
        """PD code with labels running consecutively along each component."""
        new = [0] * self.num_arcs
        nxt = 1
        for comp in self.components:
            for a in comp:
                new[a] = nxt
                nxt += 1
        return PDCode(tuple(tuple(new[a] for a in x) for x in self.crossings),
                      self.free_loops)


# -- constructors ----------------------------------------------------------

def _require_planar(d: LinkDiagram, what: str) -> LinkDiagram:
    from .topology import is_planar

    if not is_planar(d):
        raise DiagramError(f"{what} does not embed in the sphere")
    return d


def empty_diagram(free_loops: int) -> LinkDiagram:
    return LinkDiagram((), (), free_loops)


def pd_to_diagram(pd: PDCode) -> LinkDiagram:
    """Orient a PD code.

    Under-strands are oriented by the slot convention.  Over-strand
    directions are propagated along arcs; a component that is over at every
    crossing is oriented so its labels increase.
    """
    labels = sorted({a for x in pd.crossings for a in x})
    index = {lab: i for i, lab in enumerate(labels)}
    if len(labels) != 2 * len(pd.crossings):
        raise DiagramError("PD code must have exactly two arcs per crossing")
    crossings = tuple(tuple(index[a] for a in x) for x in pd.crossings)

    # incoming-ness of each arc end: True/False for under slots, (c, negate)
    # for over slots whose truth is over_forward[c] xor negate
    ends: list[list] = [[] for _ in labels]
    for c, x in enumerate(crossings):
        for slot, a in enumerate(x):
            if slot == 0:
                ends[a].append(True)
            elif slot == 2:
                ends[a].append(False)
            else:
                ends[a].append((c, slot == 3))

    n = len(crossings)
    value: list[bool | None] = [None] * n
    links: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for a, (e1, e2) in enumerate(ends):
        if isinstance(e1, bool) and isinstance(e2, bool):
            if e1 == e2:
                raise DiagramError(f"arc {labels[a]} is forced in both directions")
        elif isinstance(e1, bool) or isinstance(e2, bool):
            fixed, (c, neg) = (e1, e2) if isinstance(e1, bool) else (e2, e1)
            want = (not fixed) != neg
            if value[c] is not None and value[c] != want:
                raise DiagramError(f"arc {labels[a]} is forced in both directions")
            value[c] = want
        else:
            (c1, n1), (c2, n2) = e1, e2
            # (x1 ^ n1) ^ (x2 ^ n2) must be 1
            rel = not (n1 != n2)
            if c1 == c2:
                if rel:
                    raise DiagramError(f"arc {labels[a]} is forced in both directions")
                continue
            links[c1].append((c2, rel))
            links[c2].append((c1, rel))

    def propagate(start: int):
        stack = [start]
        while stack:
            c = stack.pop()
            for other, rel in links[c]:
                want = value[c] != rel
                if value[other] is None:
                    value[other] = want
                    stack.append(other)
                elif value[other] != want:
                    raise DiagramError("inconsistent over-strand orientation")

    for c in range(n):
        if value[c] is not None:
            propagate(c)
    for c in range(n):
        if value[c] is None:
            j, l = pd.crossings[c][1], pd.crossings[c][3]
            value[c] = l == j + 1 or j > l + 1
            propagate(c)

    d = LinkDiagram(crossings, tuple(value), pd.free_loops, tuple(labels))
    for comp in d.components:
        seq = [labels[a] for a in comp]
        lo, hi = min(seq), max(seq)
        if hi - lo + 1 != len(seq) or any(
                b != a + 1 and not (a == hi and b == lo)
                for a, b in zip(seq, seq[1:] + seq[:1])):
            raise DiagramError(
                "arc labels of a component must run consecutively along it: "
                + ",".join(map(str, seq)))
    return _require_planar(d, "PD code")


def braid_closure(b: BraidWord) -> LinkDiagram:
    """Closure of a braid drawn bottom to top, strands numbered left to right.

    For sigma_i the strand moving from position i to i+1 passes under.
    """
    n = b.strand_count
    bottom = list(range(n))
    current = list(bottom)
    nxt = n
    crossings, bits = [], []
    for letter in b.letters:
        i = abs(letter) - 1
        a, bb = current[i], current[i + 1]
        a2, b2 = nxt, nxt + 1
        nxt += 2
        if letter > 0:
            crossings.append((a, bb, a2, b2))
            bits.append(True)
        else:
            crossings.append((bb, a2, b2, a))
            bits.append(False)
        current[i], current[i + 1] = b2, a2
    alias = {top: bot for top, bot in zip(current, bottom) if top != bot}
    loops = sum(1 for top, bot in zip(current, bottom) if top == bot)
    used = sorted({alias.get(a, a) for x in crossings for a in x})
    dense = {a: i for i, a in enumerate(used)}
    crossings = [tuple(dense[alias.get(a, a)] for a in x) for x in crossings]
    return LinkDiagram(tuple(crossings), tuple(bits), loops)


def gauss_to_diagram(g: GaussCode) -> LinkDiagram:
    """Realize a signed Gauss code, rejecting codes with no planar embedding.

    The crossing signs fix the local picture at every crossing, so the
    rotation system is determined; the code is classical iff that rotation
    system has genus zero.
    """
    arc_ids: list[list[int]] = []
    nxt = 0
    for comp in g.components:
        arc_ids.append(list(range(nxt, nxt + len(comp))))
        nxt += len(comp)
    where: dict[int, dict[bool, tuple[int, int]]] = {}
    for ci, comp in enumerate(g.components):
        for ti, tok in enumerate(comp):
            where.setdefault(tok.label, {})[tok.over] = (ci, ti)
    signs = {tok.label: tok.sign for comp in g.components for tok in comp}

    def arcs_at(ci: int, ti: int) -> tuple[int, int]:
        ids = arc_ids[ci]
        return ids[ti - 1], ids[ti]  # arriving, leaving

    crossings, bits = [], []
    for label in sorted(where):
        u_in, u_out = arcs_at(*where[label][False])
        o_in, o_out = arcs_at(*where[label][True])
        if signs[label] > 0:
            crossings.append((u_in, o_in, u_out, o_out))
            bits.append(True)
        else:
            crossings.append((u_in, o_out, u_out, o_in))
            bits.append(False)
    loops = sum(1 for comp in g.components if not comp)
    try:
        d = LinkDiagram(tuple(crossings), tuple(bits), loops)
    except DiagramError as exc:
        raise DiagramError(f"non-realizable Gauss code: {exc}") from None
    try:
        return _require_planar(d, "Gauss code")
    except DiagramError:
        raise DiagramError("non-realizable Gauss code (virtual diagram)") from None


def crossing_sign(d: LinkDiagram, c: int) -> int:
    return d.sign(c)


def to_diagram(code) -> LinkDiagram:
    if isinstance(code, PDCode):
        return pd_to_diagram(code)
    if isinstance(code, BraidWord):
        return braid_closure(code)
    if isinstance(code, GaussCode):
        return gauss_to_diagram(code)
    if isinstance(code, LinkDiagram):
        return code
    raise TypeError(f"cannot build a diagram from {type(code).__name__}")


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = d1.num_arcs
    crossings = d1.crossings + tuple(tuple(a + shift for a in x) for x in d2.crossings)
    return LinkDiagram(crossings, d1.over_forward + d2.over_forward,
                       d1.free_loops + d2.free_loops)


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, arc1: int = 0, arc2: int = 0) -> LinkDiagram:
    """Band ``arc1`` of ``d1`` to ``arc2`` of ``d2`` by swapping their heads."""
    u = disjoint_union(d1, d2)
    b = arc2 + d1.num_arcs
    (c1, s1), (c2, s2) = u.head[arc1], u.head[b]
    crossings = [list(x) for x in u.crossings]
    crossings[c1][s1] = b
    crossings[c2][s2] = arc1
    return LinkDiagram(tuple(map(tuple, crossings)), u.over_forward, u.free_loops)
