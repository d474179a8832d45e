"""Link-diagram parsing, invariants and sound splitness/primeness certificates."""

from .bridges import BridgePresentation, bridge_decomposition, bridge_number
from .certify import Certificate, certify, check_nontrivial, validate_report
from .codes import (
    BraidWord,
    DiagramError,
    GaussCode,
    ParseError,
    PDCode,
    parse_braid,
    parse_gauss,
    parse_pd,
)
from .diagram import (
    LinkDiagram,
    braid_closure,
    connected_sum,
    crossing_sign,
    disjoint_union,
    gauss_to_diagram,
    pd_to_diagram,
)
from .invariants import (
    canonical_euler_characteristic,
    is_positive,
    linking_graph_connected,
    linking_matrix,
    seifert_circles,
    writhe,
)
from .topology import (
    build_plane_graph,
    diagram_connected,
    find_prime_cut,
    is_prime_diagram,
    trace_faces,
)

__version__ = "0.1.0"
