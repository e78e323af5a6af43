"""Three independent checks of the five-point smoothness condition.

* ``check_sm_edge``: ``uv`` and ``wx`` range over edges only.
* ``check_sm_star``: the same implication over all five-tuples.
* ``check_via_u_convexity``: convexity of ``U(v, u)`` for every ordered edge.

Each check reports the least violation in its own search order and turns it
into a :class:`~smoothgraph.graph.Witness` whose ``uv`` and ``wx`` are edges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .convexity import convexity_violation, u_set_mask
from .errors import Disconnected
from .graph import DistMatrix, Graph, Witness


class Method(str, enum.Enum):
    EDGE = "edge"
    STAR = "star"
    U_CONVEXITY = "convexity"


_METHOD_ALIASES = {
    "edge": Method.EDGE,
    "naive": Method.EDGE,
    "sm": Method.EDGE,
    "star": Method.STAR,
    "sm*": Method.STAR,
    "convexity": Method.U_CONVEXITY,
    "u": Method.U_CONVEXITY,
    "u_convexity": Method.U_CONVEXITY,
}


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    method: Method
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.smooth

    def to_dict(self) -> dict:
        out: dict = {"smooth": self.smooth, "method": self.method.value}
        if self.witness is not None:
            out["witness"] = self.witness._asdict()
        return out


def _connected_dist(g: Graph, d: DistMatrix | None) -> DistMatrix:
    d = g.distances if d is None else d
    d.require_connected()
    return d


def distance_condition(d: DistMatrix, u: int, v: int, w: int, x: int, y: int) -> bool:
    """Distance form of the condition; ``True`` when the premise fails."""
    r = d.reachable
    if not (r[u, v] and r[u, w] and r[u, x] and r[u, y]):
        raise Disconnected("the five vertices are not in one component")
    b = d.between
    if b[u, v, w] and b[u, v, y] and b[w, x, y]:
        return bool(b[u, v, x])
    return True


def is_witness(g: Graph, d: DistMatrix, t: tuple[int, int, int, int, int]) -> bool:
    """Whether ``t`` satisfies every invariant of a witness in ``g``."""
    u, v, w, x, y = t
    return (
        g.has_edge(u, v)
        and g.has_edge(w, x)
        and len(set(t)) == 5
        and not distance_condition(d, u, v, w, x, y)
    )


def _geodesic(g: Graph, d: DistMatrix, a: int, b: int) -> list[int]:
    """Shortest ``a, b``-path, smallest next vertex first."""
    vals = d.values
    path = [a]
    cur = a
    while cur != b:
        target = vals[cur, b] - 1
        cur = next(nb for nb in sorted(g.neighbors(cur)) if vals[nb, b] == target)
        path.append(cur)
    return path


def edge_witness(g: Graph, d: DistMatrix, t: tuple[int, int, int, int, int]) -> Witness:
    """Turn any violating five-tuple into one whose ``uv`` and ``wx`` are edges.

    ``x`` is first pulled back along a shortest ``w, x``-path to the first
    vertex that breaks the conclusion; then ``u`` is pushed along a shortest
    ``u, v``-path to the last vertex that still breaks it.
    """
    u, v, w, x, y = t
    b = d.between
    if distance_condition(d, u, v, w, x, y):
        raise ValueError(f"{t} does not violate the smoothness condition")
    path = _geodesic(g, d, w, x)
    i = next(i for i in range(1, len(path)) if not b[u, v, path[i]])
    w, x = path[i - 1], path[i]
    path = _geodesic(g, d, u, v)
    j = max(j for j in range(len(path)) if not b[path[j], v, x])
    u, v = path[j], path[j + 1]
    out = Witness(u, v, w, x, y)
    assert is_witness(g, d, out), out
    return out


def _first_violation(
    q: np.ndarray, pairs: np.ndarray, exclude_equal: bool
) -> tuple[int, int, int, int, int] | None:
    """Least ``(u, v, w, x, y)`` over rows ``q[p, y] = v_p in I[u_p, y]``.

    ``pairs`` lists ``(u, v)`` for every row, sorted lexicographically; the
    same rows serve as the ``(w, x)`` pairs.
    """
    qf = q.astype(np.float32)
    common = (qf @ qf.T) > 0
    hit_w = q[:, pairs[:, 0]]
    miss_x = ~q[:, pairs[:, 1]]
    viol = hit_w & miss_x & common
    if not viol.any():
        return None
    for e, f in np.argwhere(viol):
        u, v = (int(t) for t in pairs[e])
        w, x = (int(t) for t in pairs[f])
        head = {u, v, w, x}
        if exclude_equal and len(head) < 4:
            continue
        for y in np.flatnonzero(q[e] & q[f]).tolist():
            if not exclude_equal or y not in head:
                return u, v, w, x, y
    return None


def check_sm_edge(g: Graph, d: DistMatrix | None = None) -> SmoothnessVerdict:
    """Check the condition over ordered edge pairs ``(u, v), (w, x)`` and all ``y``."""
    d = _connected_dist(g, d)
    edges = g.ordered_edges()
    if not edges:
        return SmoothnessVerdict(True, Method.EDGE)
    pairs = np.array(edges)
    q = d.between[pairs[:, 0], pairs[:, 1], :]
    found = _first_violation(q, pairs, exclude_equal=True)
    if found is None:
        return SmoothnessVerdict(True, Method.EDGE)
    return SmoothnessVerdict(False, Method.EDGE, Witness(*found))


def check_sm_star(g: Graph, d: DistMatrix | None = None) -> SmoothnessVerdict:
    """Check the condition over all five-tuples, without adjacency premises."""
    d = _connected_dist(g, d)
    n = g.n
    if n < 5:
        return SmoothnessVerdict(True, Method.STAR)
    pairs = np.array([(u, v) for u in range(n) for v in range(n) if u != v])
    q = d.between[pairs[:, 0], pairs[:, 1], :]
    found = _first_violation(q, pairs, exclude_equal=False)
    if found is None:
        return SmoothnessVerdict(True, Method.STAR)
    return SmoothnessVerdict(False, Method.STAR, edge_witness(g, d, found))


def check_via_u_convexity(g: Graph, d: DistMatrix | None = None) -> SmoothnessVerdict:
    """Smooth iff ``U(v, u)`` is convex for every ordered edge ``(u, v)``.

    A convexity violation ``z in I[a, b]`` outside ``U(v, u)`` yields a witness
    by walking a shortest ``a, b``-path through ``z`` to its first exit from
    ``U(v, u)``.
    """
    d = _connected_dist(g, d)
    imasks = d.interval_masks
    for u, v in g.ordered_edges():
        umask = u_set_mask(d, v, u)
        bad = convexity_violation(imasks, umask)
        if bad is None:
            continue
        a, b, z = bad
        path = _geodesic(g, d, a, z) + _geodesic(g, d, z, b)[1:]
        i = next(i for i in range(len(path) - 1) if not umask >> path[i + 1] & 1)
        witness = Witness(u, v, path[i], path[i + 1], b)
        assert is_witness(g, d, witness), witness
        return SmoothnessVerdict(False, Method.U_CONVEXITY, witness)
    return SmoothnessVerdict(True, Method.U_CONVEXITY)


_CHECKERS = {
    Method.EDGE: check_sm_edge,
    Method.STAR: check_sm_star,
    Method.U_CONVEXITY: check_via_u_convexity,
}


def resolve_method(name: str | Method) -> Method:
    if isinstance(name, Method):
        return name
    try:
        return _METHOD_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown smoothness method {name!r}") from None


def check_smoothness(
    g: Graph, method: str | Method = Method.EDGE, d: DistMatrix | None = None
) -> SmoothnessVerdict:
    return _CHECKERS[resolve_method(method)](g, d)


def check_all(g: Graph, d: DistMatrix | None = None) -> dict[Method, SmoothnessVerdict]:
    return {m: fn(g, d) for m, fn in _CHECKERS.items()}


def is_smooth(g: Graph, d: DistMatrix | None = None) -> bool:
    return check_sm_edge(g, d).smooth
