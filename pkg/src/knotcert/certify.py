"""Sound splitness and primeness certificates for positive diagrams.

Two implications are applied, both one-directional:

* a connected positive diagram presents a non-split link;
* a connected, prime, positive diagram of a non-trivial link presents a
  prime link.

A disconnected diagram is split outright (a circle on the sphere between
the pieces bounds a splitting sphere).  Nothing else is ever concluded, so
"inconclusive" is a normal outcome and a non-prime diagram never yields a
"composite" claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .bridges import bridge_number
from .codes import DiagramError, parse_any, parse_record_json
from .diagram import LinkDiagram, to_diagram
from .invariants import (
    LinkingMatrix,
    PositivityVerdict,
    is_positive,
    linking_graph_witness,
    linking_matrix,
    seifert_circles,
    signs_under,
    writhe,
)
from .topology import (
    CutSearch,
    CutWitness,
    cut_sides,
    build_plane_graph,
    diagram_connected,
    search_prime_cuts,
    trace_faces,
)

SCHEMA = 1

NONSPLIT_RULE = "connected positive diagram => non-split link"
PRIME_RULE = "connected prime positive diagram of a non-trivial link => prime link"
SPLIT_RULE = "disconnected diagram => split link"

CERTIFIED, NOT_CERTIFIED, ASSERTED = "certified", "not-certified", "asserted-by-flag"
NONSPLIT, SPLIT, INCONCLUSIVE = "nonsplit-certified", "split-certified", "inconclusive"
PRIME = "prime-certified"


@dataclass(frozen=True)
class NontrivialVerdict:
    status: str
    evidence: dict = field(compare=False)

    def to_json(self) -> dict:
        return {"status": self.status, **self.evidence}


@dataclass(frozen=True)
class Certificate:
    diagram: LinkDiagram = field(repr=False)
    positivity: PositivityVerdict
    connectivity: bool
    diagram_prime: bool
    cut_search: CutSearch | None
    nontrivial: NontrivialVerdict
    splitness: str
    primeness: str
    linking: LinkingMatrix
    evidence: dict = field(repr=False)

    @property
    def cut_witness(self) -> CutWitness | None:
        return self.cut_search.witness if self.cut_search else None

    def invariants(self) -> dict:
        return invariant_summary(self.diagram, self.positivity)

    def to_json(self, source=None) -> dict:
        prime: dict = {"prime": self.diagram_prime}
        if self.cut_search is not None:
            w = self.cut_search.witness
            prime["witness"] = w.to_json(self.diagram) if w else None
            prime["search"] = self.cut_search.record()
        else:
            prime["witness"] = None
            prime["search"] = None
        out = {
            "positivity": self.positivity.to_json(),
            "connectivity": self.connectivity,
            "diagram_prime": prime,
            "nontrivial": self.nontrivial.to_json(),
            "splitness": self.splitness,
            "primeness": self.primeness,
            "invariants": self.invariants(),
            "evidence": self.evidence,
            "schema": SCHEMA,
        }
        if source is not None:
            out["input"] = source
        return out


def _witness_flips(d: LinkDiagram, pos: PositivityVerdict):
    return pos.witness_orientation if pos.positive else None


def invariant_summary(d: LinkDiagram, pos: PositivityVerdict | None = None) -> dict:
    """Invariants, computed under the positive orientation when there is one."""
    pos = pos or is_positive(d)
    flips = _witness_flips(d, pos)
    connected = diagram_connected(d)
    s = seifert_circles(d, flips)
    return {
        "crossings": d.num_crossings,
        "components": d.num_components,
        "orientation": list(flips) if flips else [False] * d.num_components,
        "writhe": sum(signs_under(d, flips)) if flips else writhe(d),
        "linking_matrix": linking_matrix(d, flips).to_json(),
        "seifert_circles": s,
        "euler_characteristic": s - d.num_crossings if connected else None,
        "bridge_number": bridge_number(d) if d.num_crossings else None,
    }


def check_nontrivial(d: LinkDiagram, assume_flag: bool = False,
                     positivity: PositivityVerdict | None = None) -> NontrivialVerdict:
    """Sufficient conditions for the link to be non-trivial.

    Genus route: for a connected positive diagram the canonical Seifert
    surface has minimal genus, so chi < 1 (knot) or chi < k (k-component
    link) rules out the trivial link.  Linking route: a nonzero linking
    number rules it out for any diagram.
    """
    positivity = positivity or is_positive(d)
    flips = _witness_flips(d, positivity)
    k = d.num_components
    genus_route = None
    if positivity.positive and diagram_connected(d):
        s = seifert_circles(d, flips)
        chi = s - d.num_crossings
        genus_route = {
            "seifert_circles": s, "crossings": d.num_crossings, "components": k,
            "euler_characteristic": chi,
            "genus": (2 - k - chi) // 2,
            "fires": chi < 1 if k == 1 else chi < k,
        }
    lk = linking_matrix(d, flips)
    pair = next(([i, j, lk[i, j]] for i in range(k) for j in range(i + 1, k) if lk[i, j]), None)
    linking_route = {"pair": pair, "fires": pair is not None}
    evidence = {"genus_route": genus_route, "linking_route": linking_route,
                "assumed_by_flag": bool(assume_flag)}
    if (genus_route and genus_route["fires"]) or linking_route["fires"]:
        status = CERTIFIED
    elif assume_flag:
        status = ASSERTED
    else:
        status = NOT_CERTIFIED
    return NontrivialVerdict(status, evidence)


def _pieces(d: LinkDiagram) -> list[int]:
    """Crossing count of every connected piece of the diagram (free loops give 0)."""
    from .topology import vertex_components

    comp = vertex_components(build_plane_graph(d))
    sizes: dict[int, int] = {}
    for root in comp:
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values(), reverse=True) + [0] * d.free_loops


def certify(d: LinkDiagram, assume_nontrivial: bool = False) -> Certificate:
    pos = is_positive(d)
    flips = _witness_flips(d, pos)
    connected = diagram_connected(d)
    search = None
    if connected and d.num_crossings:
        search = search_prime_cuts(d)
    prime_diag = search is not None and search.witness is None
    nontrivial = check_nontrivial(d, assume_nontrivial, pos)
    lk = linking_matrix(d, flips)

    if connected and pos.positive:
        splitness = NONSPLIT
        split_ev = {"rule": NONSPLIT_RULE,
                    "hypotheses": {"connected": True, "positive": True},
                    "witness_orientation": list(flips),
                    "linking_graph": None}
        if d.num_components > 1:
            tree = linking_graph_witness(lk)
            split_ev["linking_graph"] = [list(e) for e in tree] if tree else None
    elif not connected:
        splitness = SPLIT
        split_ev = {"rule": SPLIT_RULE, "hypotheses": {"connected": False},
                    "piece_crossings": _pieces(d)}
    else:
        splitness = INCONCLUSIVE
        split_ev = {"rule": None,
                    "hypotheses": {"connected": connected, "positive": pos.positive}}

    hyps = {"positive": pos.positive, "connected": connected,
            "diagram_prime": prime_diag,
            "nontrivial": nontrivial.status in (CERTIFIED, ASSERTED)}
    primeness = PRIME if all(hyps.values()) else INCONCLUSIVE
    prime_ev = {"rule": PRIME_RULE if primeness == PRIME else None, "hypotheses": hyps}

    return Certificate(d, pos, connected, prime_diag, search, nontrivial,
                       splitness, primeness, lk,
                       {"splitness": split_ev, "primeness": prime_ev})


# -- replay validation -------------------------------------------------------

def diagram_from_source(source: dict) -> LinkDiagram:
    record = source["record"]
    if source["format"] == "json" and not isinstance(record, str):
        return to_diagram(parse_record_json(record))
    return to_diagram(parse_any(record, source["format"]))


def validate_report(report: dict, d: LinkDiagram | None = None) -> list[str]:
    """Replay the evidence of one report; returns the problems found (empty = accepted)."""
    problems: list[str] = []

    def fail(msg):
        problems.append(msg)

    try:
        if d is None:
            d = diagram_from_source(report["input"])
        if report.get("schema") != SCHEMA:
            fail("unknown schema")
        k = d.num_components

        # positivity
        pos = report["positivity"]
        if pos["positive"] is True:
            w = pos.get("witness_orientation")
            if "obstruction" in pos or not isinstance(w, list) or len(w) != k:
                fail("positivity: malformed witness")
            elif w and w[0]:
                fail("positivity: first component must stay pinned")
            elif any(s < 0 for s in signs_under(d, w)):
                fail("positivity: witness orientation leaves a negative crossing")
        elif pos["positive"] is False:
            obs = pos.get("obstruction")
            if "witness_orientation" in pos or not obs or any(
                    not isinstance(c, int) or not 0 <= c < d.num_crossings for c in obs):
                fail("positivity: malformed obstruction")
            else:
                ncomp = len(d.components)
                for rest in product((False, True), repeat=max(ncomp - 1, 0)):
                    flips = ((False,) + rest)[:ncomp]
                    signs = signs_under(d, flips)
                    if all(signs[c] > 0 for c in obs):
                        fail("positivity: obstruction avoided by some orientation")
                        break
        else:
            fail("positivity: verdict missing")
        positive = pos.get("positive") is True and not any(p.startswith("positivity") for p in problems)

        # connectivity
        connected = diagram_connected(d)
        if report["connectivity"] is not connected:
            fail("connectivity: recorded value does not replay")

        # diagram primeness
        dp = report["diagram_prime"]
        prime_ok = False
        if not connected or d.num_crossings == 0:
            if dp["prime"] is not False:
                fail("diagram_prime: only connected diagrams with crossings can be prime")
        else:
            search = search_prime_cuts(d)
            if dp.get("search") != search.record():
                fail("diagram_prime: cut-search record does not replay")
            if dp["prime"] is True:
                if dp.get("witness") is not None or search.witness is not None:
                    fail("diagram_prime: a 2-point cut with crossings on both sides exists")
                else:
                    prime_ok = True
            elif dp["prime"] is False:
                w = dp.get("witness")
                if not w:
                    fail("diagram_prime: non-prime verdict without a witness")
                else:
                    g = build_plane_graph(d)
                    fs = trace_faces(g)
                    arcs = tuple(w["arcs"])
                    if "arc_labels" in w and w["arc_labels"] != [d.label(a) for a in arcs]:
                        fail("diagram_prime: witness labels disagree with its arcs")
                    if len(arcs) == 2:
                        same = sorted(fs.sides(arcs[0])) == sorted(fs.sides(arcs[1]))
                    else:
                        same = len(set(fs.sides(arcs[0]))) == 1
                    sides = cut_sides(g, arcs) if same else None
                    if not sides or list(sides) != w["side_crossings"] or min(sides) < 1:
                        fail("diagram_prime: witness does not replay")
            else:
                fail("diagram_prime: verdict missing")

        # nontriviality
        nt = report["nontrivial"]
        replay = check_nontrivial(d, nt.get("assumed_by_flag", False))
        if nt != replay.to_json():
            fail("nontrivial: evidence does not replay")
        nontrivial = nt.get("status") in (CERTIFIED, ASSERTED) and not any(
            p.startswith("nontrivial") for p in problems)

        # verdicts follow from the replayed hypotheses
        if connected and positive:
            want_split = NONSPLIT
        elif not connected:
            want_split = SPLIT
        else:
            want_split = INCONCLUSIVE
        if report["splitness"] != want_split:
            fail("splitness: verdict not licensed by the hypotheses")
        want_prime = PRIME if (positive and connected and prime_ok and nontrivial) else INCONCLUSIVE
        if report["primeness"] != want_prime:
            fail("primeness: verdict not licensed by the hypotheses")
        ev = report["evidence"]["primeness"]["hypotheses"]
        if ev != {"positive": positive, "connected": connected,
                  "diagram_prime": prime_ok, "nontrivial": nontrivial}:
            fail("evidence: primeness hypotheses do not replay")
        if report["splitness"] == NONSPLIT and d.num_components > 1:
            tree = report["evidence"]["splitness"].get("linking_graph")
            lk = linking_matrix(d, report["positivity"].get("witness_orientation"))
            if tree is not None and any(lk[i, j] != v for i, j, v in tree):
                fail("evidence: linking graph does not replay")
        if report["invariants"] != invariant_summary(d):
            fail("invariants: values do not replay")
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        fail(f"malformed report: {exc!r}")
    return problems


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


__all__ = [
    "Certificate", "NontrivialVerdict", "certify", "check_nontrivial",
    "validate_report", "invariant_summary", "diagram_from_source", "DiagramError",
]
