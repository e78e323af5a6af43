"""Smoothness of graphs: interval checks, class recognizers, constructions and small-graph surveys."""

from .canonical import canonical_form, canonical_labeling, is_isomorphic
from .constructors import (
    AmalgamSpec,
    EmbeddingMap,
    cartesian_product,
    cocktail_party,
    complete,
    cycle,
    gated_amalgam,
    half_cube,
    half_cube_embedding,
    hamming,
    hypercube,
    lexicographic_product,
    make,
    path,
    strong_product,
    verify_scale_embedding,
)
from .convexity import (
    GateReport,
    HullResult,
    convex_hull,
    gate_report,
    is_convex,
    is_gated,
    point_shadow,
    u_set,
    w_set,
)
from .errors import GraphError
from .formats import graph6_decode, graph6_encode, parse_edge_list, read_graph6_stream
from .graph import (
    UNREACHABLE,
    DistMatrix,
    Graph,
    Witness,
    apsp,
    contains_induced,
    from_edges,
    induced_subgraph,
    interval,
    is_connected,
    is_isometric_subgraph,
    step_set,
)
from .patterns import FIXTURES, fixture
from .recognizers import ClassReport, classify
from .smoothness import (
    Method,
    SmoothnessVerdict,
    check_all,
    check_sm_edge,
    check_sm_star,
    check_smoothness,
    check_via_u_convexity,
    is_smooth,
)
from .survey import SurveyQuery, SurveyResult, bridged_survey, enumerate_graphs, run_survey

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
