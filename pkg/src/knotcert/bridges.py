"""Over/under bridge decomposition of a fixed diagram.

Walking along a component, every crossing is passed either over or under.
Maximal runs of over-passages are the over bridges, maximal runs of
under-passages the under bridges.  A component that is over (or under) at
every crossing still needs one bridge of the other kind; it gets a
crossing-free one sitting on its first arc.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import DiagramError
from .diagram import LinkDiagram


@dataclass(frozen=True)
class Bridge:
    component: int
    over: bool
    crossings: tuple[int, ...]
    arcs: tuple[int, ...]  # first and last arcs are shared with the neighbouring bridges

    def to_json(self) -> dict:
        return {"component": self.component, "crossings": list(self.crossings),
                "arcs": list(self.arcs)}


@dataclass(frozen=True)
class BridgePresentation:
    over_bridges: tuple[Bridge, ...]
    under_bridges: tuple[Bridge, ...]
    crossing_free_components: int = 0

    @property
    def n(self) -> int:
        return len(self.over_bridges)

    def to_json(self) -> dict:
        return {"n": self.n,
                "over_bridges": [b.to_json() for b in self.over_bridges],
                "under_bridges": [b.to_json() for b in self.under_bridges],
                "crossing_free_components": self.crossing_free_components}


def _component_runs(d: LinkDiagram, ci: int) -> list[Bridge]:
    arcs = d.components[ci]
    passes = d.passages(ci)
    m = len(passes)
    kinds = [over for _, over in passes]
    if all(kinds) or not any(kinds):
        whole = Bridge(ci, kinds[0], tuple(c for c, _ in passes), arcs)
        return [whole, Bridge(ci, not kinds[0], (), (arcs[0],))]
    start = next(j for j in range(m) if kinds[j] != kinds[j - 1])
    order = [(start + i) % m for i in range(m)]
    runs = []
    i = 0
    while i < m:
        k = i
        while k + 1 < m and kinds[order[k + 1]] == kinds[order[i]]:
            k += 1
        runs.append(Bridge(ci, kinds[order[i]],
                           tuple(passes[order[t]][0] for t in range(i, k + 1)),
                           tuple(arcs[(start + t) % m] for t in range(i, k + 2))))
        i = k + 1
    return runs


def bridge_decomposition(d: LinkDiagram) -> BridgePresentation:
    if d.num_crossings == 0:
        raise DiagramError("a diagram without crossings has no bridges")
    over, under = [], []
    for ci in range(len(d.components)):
        for b in _component_runs(d, ci):
            (over if b.over else under).append(b)
    return BridgePresentation(tuple(over), tuple(under), d.free_loops)


def bridge_number(d: LinkDiagram) -> int:
    """Over-bridge count of the maximal-run decomposition (minimal for this diagram)."""
    return bridge_decomposition(d).n
