"""Named diagrams and random generators used by the test-suite and the CLI demo."""

from __future__ import annotations

import random

from .codes import BraidWord, parse_pd
from .diagram import (
    LinkDiagram,
    braid_closure,
    connected_sum,
    disjoint_union,
    empty_diagram,
    pd_to_diagram,
)

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF_PD = "X(1,4,2,3) X(3,2,4,1)"
POSITIVE_KINK_PD = "X(1,2,2,1)"


def trefoil() -> LinkDiagram:
    return pd_to_diagram(parse_pd(TREFOIL_PD))


def figure_eight() -> LinkDiagram:
    return pd_to_diagram(parse_pd(FIGURE_EIGHT_PD))


def hopf() -> LinkDiagram:
    return pd_to_diagram(parse_pd(HOPF_PD))


def positive_kink() -> LinkDiagram:
    return pd_to_diagram(parse_pd(POSITIVE_KINK_PD))


def unknot() -> LinkDiagram:
    return empty_diagram(1)


def torus_2q(q: int) -> LinkDiagram:
    """Standard closed 2-braid diagram of the positive (2, q) torus knot or link."""
    return braid_closure(BraidWord(2, (1,) * q))


def granny() -> LinkDiagram:
    return connected_sum(trefoil(), trefoil())


def square() -> LinkDiagram:
    return connected_sum(trefoil(), trefoil().mirror())


def two_trefoils() -> LinkDiagram:
    return disjoint_union(trefoil(), trefoil())


def two_hopf() -> LinkDiagram:
    return disjoint_union(hopf(), hopf())


POSITIVE_BRAIDS = {
    "pretzel_3_3_3": BraidWord(3, (1, 1, 1, 2, 2, 2)),
    "braid_3_1212": BraidWord(3, (1, 2, 1, 2)),
    "braid_3_11221122": BraidWord(3, (1, 1, 2, 2, 1, 1, 2, 2)),
    "braid_4_112233": BraidWord(4, (1, 1, 2, 2, 3, 3)),
    "braid_4_123123": BraidWord(4, (1, 2, 3, 1, 2, 3)),
}


def named_corpus() -> dict[str, LinkDiagram]:
    corpus = {
        "trefoil": trefoil(),
        "figure_eight": figure_eight(),
        "hopf": hopf(),
        "positive_kink": positive_kink(),
        "unknot": unknot(),
        "granny": granny(),
        "square": square(),
        "two_trefoils": two_trefoils(),
        "two_hopf": two_hopf(),
    }
    for q in range(2, 9):
        corpus[f"torus_2_{q}"] = torus_2q(q)
    for name, word in POSITIVE_BRAIDS.items():
        corpus[name] = braid_closure(word)
    return corpus


def random_braid(rng: random.Random, max_strands: int = 4, max_length: int = 10,
                 positive: bool = False) -> BraidWord:
    n = rng.randint(2, max_strands)
    length = rng.randint(1, max_length)
    letters = []
    for _ in range(length):
        g = rng.randint(1, n - 1)
        letters.append(g if positive or rng.random() < 0.5 else -g)
    return BraidWord(n, tuple(letters))


def random_diagram(rng: random.Random, max_strands: int = 4, max_length: int = 10) -> LinkDiagram:
    """A random braid closure, sometimes combined with a second one."""
    d = braid_closure(random_braid(rng, max_strands, max_length))
    roll = rng.random()
    if roll < 0.15:
        d = disjoint_union(d, braid_closure(random_braid(rng, max_strands, max_length)))
    elif roll < 0.3 and d.num_crossings:
        other = braid_closure(random_braid(rng, max_strands, max_length))
        if other.num_crossings:
            d = connected_sum(d, other, rng.randrange(d.num_arcs), rng.randrange(other.num_arcs))
    return d
