"""Membership tests for the graph classes around smoothness.

Every predicate has a ``find_*`` companion returning evidence for a failure
(a violating tuple or a pattern embedding) or ``None``; the boolean form is
``find_* is None``. :func:`classify` collects all of them in a ClassReport.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .convexity import convexity_violation
from .graph import DistMatrix, Graph, bits, contains_induced
from .patterns import C4, C5, FAN3, K4E, K23, K113, K113PLUS, W4, W4MINUS
from .smoothness import check_sm_edge

Evidence = dict


def _connected_dist(g: Graph, d: DistMatrix | None) -> DistMatrix:
    d = g.distances if d is None else d
    d.require_connected()
    return d


# -- bipartite, partial cubes, BP ------------------------------------------


def find_odd_edge(g: Graph) -> tuple[int, int] | None:
    """An edge joining two vertices of equal BFS parity, if any."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        for v in queue:
            for w in bits(g.masks[v]):
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    queue.append(w)
    for u, v in g.edges():
        if color[u] == color[v]:
            return u, v
    return None


def is_bipartite(g: Graph) -> bool:
    return find_odd_edge(g) is None


def find_partial_cube_violation(g: Graph, d: DistMatrix | None = None) -> Evidence | None:
    d = _connected_dist(g, d)
    odd = find_odd_edge(g)
    if odd is not None:
        return {"reason": "not bipartite", "edge": list(odd)}
    vals = d.values
    imasks = d.interval_masks
    for u, v in g.ordered_edges():
        # W_uv: vertices closer to u than to v
        wmask = 0
        for x in np.flatnonzero(vals[:, u] < vals[:, v]).tolist():
            wmask |= 1 << x
        bad = convexity_violation(imasks, wmask)
        if bad is not None:
            return {"reason": "W set not convex", "edge": [u, v], "pair": list(bad[:2]), "outside": bad[2]}
    return None


def is_partial_cube(g: Graph, d: DistMatrix | None = None) -> bool:
    """Bipartite and every half-space ``W_uv`` is convex."""
    return find_partial_cube_violation(g, d) is None


def find_bp_violation(g: Graph, d: DistMatrix | None = None) -> tuple[int, int, int] | None:
    """Edge ``uv`` and ``x`` with ``v`` not in ``S(u, x)`` and ``u`` not in ``S(v, x)``."""
    d = _connected_dist(g, d)
    b = d.between
    for u, v in g.edges():
        bad = np.flatnonzero(~b[u, v, :] & ~b[v, u, :])
        if len(bad):
            return u, v, int(bad[0])
    return None


def check_step_axiom_bp(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_bp_violation(g, d) is None


# -- chordal and Ptolemaic --------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visiting order (ties broken by least id)."""
    n = g.n
    weight = [0] * n
    done = 0
    order = []
    for _ in range(n):
        v = max((w for w in range(n) if not done >> w & 1), key=lambda w: (weight[w], -w))
        order.append(v)
        done |= 1 << v
        for w in bits(g.masks[v] & ~done):
            weight[w] += 1
    return order


def find_chordal_violation(g: Graph) -> tuple[int, int, int] | None:
    """``(v, a, b)``: earlier-visited neighbours ``a, b`` of ``v`` that are not adjacent.

    The reverse of a maximum cardinality search order is a perfect
    elimination ordering iff the graph is chordal.
    """
    order = mcs_order(g)
    seen = 0
    for v in order:
        earlier = bits(g.masks[v] & seen)
        for a, b in combinations(earlier, 2):
            if not g.has_edge(a, b):
                return v, a, b
        seen |= 1 << v
    return None


def is_chordal(g: Graph) -> bool:
    return find_chordal_violation(g) is None


def find_ptolemaic_violation(g: Graph, d: DistMatrix | None = None) -> Evidence | None:
    _connected_dist(g, d)
    bad = find_chordal_violation(g)
    if bad is not None:
        return {"reason": "not chordal", "vertex": bad[0], "pair": [bad[1], bad[2]]}
    emb = contains_induced(g, FAN3)
    if emb is not None:
        return {"reason": "induced 3-fan", "pattern": "FAN3", "embedding": list(emb)}
    return None


def is_ptolemaic(g: Graph, d: DistMatrix | None = None) -> bool:
    """Chordal and free of the 3-fan."""
    return find_ptolemaic_violation(g, d) is None


def find_ptolemy_inequality_violation(
    g: Graph, d: DistMatrix | None = None
) -> tuple[int, int, int, int] | None:
    """Four vertices with ``d(u,v)d(w,x) + d(u,x)d(v,w) < d(u,w)d(v,x)``."""
    d = _connected_dist(g, d)
    D = d.values.astype(np.int64)
    uv_wx = D[:, :, None, None] * D[None, None, :, :]
    ux_vw = D[:, None, None, :] * D[None, :, :, None]
    uw_vx = D[:, None, :, None] * D[None, :, None, :]
    bad = np.argwhere(uv_wx + ux_vw < uw_vx)
    if len(bad):
        return tuple(int(t) for t in bad[0])
    return None


def is_ptolemaic_by_inequality(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_ptolemy_inequality_violation(g, d) is None


# -- weakly modular family --------------------------------------------------


def find_weakly_modular_violation(g: Graph, d: DistMatrix | None = None) -> Evidence | None:
    """Triangle and quadrangle conditions for every base vertex.

    Triangle: adjacent ``v, w`` with ``d(u,v) = d(u,w) >= 2`` need a common
    neighbour ``z`` with ``d(u,z) = d(u,v) - 1``. Quadrangle: ``v, w`` at
    distance 2 with ``d(u,v) = d(u,w) >= 2`` and a common neighbour one step
    farther from ``u`` need a common neighbour one step closer.
    """
    d = _connected_dist(g, d)
    D = d.values
    adj = g.adjacency_matrix()
    for u in range(g.n):
        k = D[u]
        same = (k[:, None] == k[None, :]) & (k[:, None] >= 2)
        lower = (adj & (k[None, :] == k[:, None] - 1)).astype(np.float32)
        has_lower = (lower @ lower.T) > 0
        tri = np.argwhere(adj & same & ~has_lower)
        if len(tri):
            v, w = (int(t) for t in tri[0])
            return {"property": "triangle", "u": u, "v": v, "w": w}
        upper = (adj & (k[None, :] == k[:, None] + 1)).astype(np.float32)
        has_upper = (upper @ upper.T) > 0
        quad = np.argwhere((D == 2) & same & has_upper & ~has_lower)
        if len(quad):
            v, w = (int(t) for t in quad[0])
            z = int(np.flatnonzero(upper[v] * upper[w])[0])
            return {"property": "quadrangle", "u": u, "v": v, "w": w, "z": z}
    return None


def is_weakly_modular(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_weakly_modular_violation(g, d) is None


def find_pseudo_modular_violation(g: Graph, d: DistMatrix | None = None) -> tuple[int, int, int] | None:
    """``(u, v, w)`` with ``1 <= d(u,w) <= 2``, ``d(v,u) = d(v,w) = k >= 2`` and
    no common neighbour ``x`` of ``u`` and ``w`` at distance ``k - 1`` from ``v``."""
    d = _connected_dist(g, d)
    D = d.values
    adj = g.adjacency_matrix().astype(np.float32)
    near = (D >= 1) & (D <= 2)
    for v in range(g.n):
        k = D[v]
        closer = adj * (k[None, :] == k[:, None] - 1)
        # common neighbour x of u and w with d(v, x) = k - 1 where k = d(v, u) = d(v, w)
        ok = (closer @ adj.T) > 0
        cand = near & (k[:, None] == k[None, :]) & (k[:, None] >= 2)
        bad = np.argwhere(cand & ~ok)
        if len(bad):
            u, w = (int(t) for t in bad[0])
            return u, v, w
    return None


def is_pseudo_modular(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_pseudo_modular_violation(g, d) is None


PATTERNS_BY_CLASS: dict[str, tuple[str, ...]] = {
    "premedian": ("K23", "W4MINUS"),
    "bridged": ("C4", "C5"),
    "weakly_bridged": ("C4",),
    "bucolic": ("K23", "W4", "W4MINUS"),
    "weakly_median": ("K113", "K23", "K113PLUS", "W4MINUS"),
    "quasi_median": ("K23", "K4E"),
}

_PATTERN_GRAPHS = {
    "K23": K23,
    "K113": K113,
    "K113PLUS": K113PLUS,
    "W4": W4,
    "W4MINUS": W4MINUS,
    "C4": C4,
    "C5": C5,
    "K4E": K4E,
}


def find_derived_class_violation(g: Graph, name: str, d: DistMatrix | None = None) -> Evidence | None:
    try:
        forbidden = PATTERNS_BY_CLASS[name]
    except KeyError:
        raise ValueError(f"unknown derived class {name!r}") from None
    wm = find_weakly_modular_violation(g, d)
    if wm is not None:
        return {"reason": "not weakly modular", **wm}
    for pat in forbidden:
        emb = contains_induced(g, _PATTERN_GRAPHS[pat])
        if emb is not None:
            return {"reason": "forbidden induced subgraph", "pattern": pat, "embedding": list(emb)}
    return None


def derived_class(g: Graph, name: str, d: DistMatrix | None = None) -> bool:
    """Weakly modular and free of the class's forbidden induced subgraphs."""
    return find_derived_class_violation(g, name, d) is None


def is_premedian(g, d=None):
    return derived_class(g, "premedian", d)


def is_bridged(g, d=None):
    return derived_class(g, "bridged", d)


def is_weakly_bridged(g, d=None):
    return derived_class(g, "weakly_bridged", d)


def is_bucolic(g, d=None):
    return derived_class(g, "bucolic", d)


def is_weakly_median(g, d=None):
    return derived_class(g, "weakly_median", d)


def is_quasi_median(g, d=None):
    return derived_class(g, "quasi_median", d)


# -- interval axioms --------------------------------------------------------


def find_pasch_violation(g: Graph, d: DistMatrix | None = None) -> tuple[int, int, int, int, int] | None:
    """``(p, a, b, a', b')`` with ``a' in I[p,a]``, ``b' in I[p,b]`` and ``I[a',b]`` disjoint from ``I[b',a]``."""
    d = _connected_dist(g, d)
    B = d.between.astype(np.float32)
    n = g.n
    for a1 in range(n):
        # meet[b, b1, a] = |I[a1, b] & I[b1, a]|
        meet = np.einsum("zb,kza->bka", B[a1], B)
        # pre[a, b1, b] = #p with a1 in I[p, a] and b1 in I[p, b]
        pre = np.einsum("pa,pkb->akb", B[:, a1, :], B)
        bad = np.argwhere((pre > 0) & (meet.transpose(2, 1, 0) == 0))
        if len(bad):
            a, b1, b = (int(t) for t in bad[0])
            p = next(p for p in range(n) if B[p, a1, a] and B[p, b1, b])
            return p, a, b, a1, b1
    return None


def has_pasch_property(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_pasch_violation(g, d) is None


def find_monotonicity_violation(g: Graph, d: DistMatrix | None = None) -> tuple[int, int, int, int, int] | None:
    """``(u, v, a, b, z)``: ``a, b`` in ``I[u,v]`` but ``z`` in ``I[a,b]`` outside it."""
    d = _connected_dist(g, d)
    imasks = d.interval_masks
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bad = convexity_violation(imasks, imasks[u][v])
            if bad is not None:
                return (u, v, *bad)
    return None


def has_monotone_intervals(g: Graph, d: DistMatrix | None = None) -> bool:
    return find_monotonicity_violation(g, d) is None


def verify_retraction(g: Graph, phi, d: DistMatrix | None = None) -> bool:
    """``phi`` is idempotent and does not increase distances."""
    n = g.n
    phi = [int(phi[v]) for v in range(n)]
    if any(not 0 <= p < n for p in phi):
        return False
    if any(phi[p] != p for p in phi):
        return False
    d = g.distances if d is None else d
    vals = d.values
    reach = d.reachable
    idx = np.array(phi)
    img = vals[np.ix_(idx, idx)]
    img_reach = reach[np.ix_(idx, idx)]
    # disconnected source pairs impose no constraint
    return bool(np.all(~reach | (img_reach & (img <= vals))))


# -- report -----------------------------------------------------------------


CLASS_NAMES = (
    "bipartite",
    "partial_cube",
    "chordal",
    "ptolemaic",
    "weakly_modular",
    "pseudo_modular",
    "bridged",
    "weakly_bridged",
    "bucolic",
    "premedian",
    "weakly_median",
    "quasi_median",
    "pasch",
    "monotone_intervals",
    "smooth",
)


def _as_evidence(found) -> Evidence | None:
    if found is None:
        return None
    if isinstance(found, dict):
        return found
    return {"tuple": list(found)}


def _bipartite_evidence(g: Graph, d: DistMatrix) -> Evidence | None:
    odd = find_odd_edge(g)
    return None if odd is None else {"edge": list(odd)}


def _smooth_evidence(g: Graph, d: DistMatrix) -> Evidence | None:
    verdict = check_sm_edge(g, d)
    return None if verdict.smooth else {"witness": verdict.witness._asdict()}


FINDERS: dict[str, Callable[[Graph, DistMatrix], object]] = {
    "bipartite": _bipartite_evidence,
    "partial_cube": find_partial_cube_violation,
    "chordal": lambda g, d: find_chordal_violation(g),
    "ptolemaic": find_ptolemaic_violation,
    "weakly_modular": find_weakly_modular_violation,
    "pseudo_modular": find_pseudo_modular_violation,
    "pasch": find_pasch_violation,
    "monotone_intervals": find_monotonicity_violation,
    "smooth": _smooth_evidence,
    **{
        name: (lambda name: lambda g, d: find_derived_class_violation(g, name, d))(name)
        for name in PATTERNS_BY_CLASS
    },
}


def predicate(name: str) -> Callable[[Graph, DistMatrix], bool]:
    finder = FINDERS[name]
    return lambda g, d=None: finder(g, g.distances if d is None else d) is None


@dataclass
class ClassReport:
    values: dict[str, bool] = field(default_factory=dict)
    evidence: dict[str, Evidence] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.values[name]

    def __getattr__(self, name: str) -> bool:
        values = self.__dict__.get("values", {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        out: dict = dict(sorted(self.values.items()))
        out["evidence"] = dict(sorted(self.evidence.items()))
        return out


def classify(g: Graph, d: DistMatrix | None = None, names=CLASS_NAMES) -> ClassReport:
    d = _connected_dist(g, d)
    report = ClassReport()
    for name in names:
        found = _as_evidence(FINDERS[name](g, d))
        report.values[name] = found is None
        if found is not None:
            report.evidence[name] = found
    return report
