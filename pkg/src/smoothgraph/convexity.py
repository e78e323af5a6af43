"""Geodesic convexity: hulls, convex sets, U- and W-sets, point-shadows, gates."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from .errors import DisconnectedInduced, EmptySet, NotAnEdge
from .graph import DistMatrix, Graph, bits, induced_subgraph, is_connected, to_mask


@dataclass(frozen=True)
class HullResult:
    """Convex hull of a seed set.

    ``iterations`` counts the interval-closure rounds that still added
    vertices, so an already convex seed has ``iterations == 0``.
    """

    hull: frozenset[int]
    iterations: int

    @property
    def geodetic_iteration_number(self) -> int:
        """Least ``k`` with ``I^k[S] == I^(k-1)[S]``."""
        return self.iterations + 1


@dataclass(frozen=True)
class GateReport:
    gated: bool
    gates: dict[int, int] = field(default_factory=dict)
    violator: int | None = None

    def to_dict(self) -> dict:
        out: dict = {"gated": self.gated}
        if self.gated:
            out["gates"] = {str(k): v for k, v in sorted(self.gates.items())}
        else:
            out["violator"] = self.violator
        return out


def _connected_dist(g: Graph, d: DistMatrix | None) -> DistMatrix:
    d = g.distances if d is None else d
    d.require_connected()
    return d


def interval_closure(imasks: list[list[int]], mask: int) -> int:
    """Union of ``I[a, b]`` over all ``a, b`` in ``mask``."""
    members = bits(mask)
    out = mask
    for i, a in enumerate(members):
        row = imasks[a]
        for b in members[i + 1:]:
            out |= row[b]
    return out


def hull_mask(imasks: list[list[int]], mask: int) -> tuple[int, int]:
    rounds = 0
    while True:
        nxt = interval_closure(imasks, mask)
        if nxt == mask:
            return mask, rounds
        mask = nxt
        rounds += 1


def convexity_violation(imasks: list[list[int]], mask: int) -> tuple[int, int, int] | None:
    """Lexicographically least ``(a, b, z)`` with ``a < b`` in the set and ``z`` in ``I[a, b]`` outside it."""
    members = bits(mask)
    for i, a in enumerate(members):
        row = imasks[a]
        for b in members[i + 1:]:
            out = row[b] & ~mask
            if out:
                return a, b, (out & -out).bit_length() - 1
    return None


def convex_hull(g: Graph, seed: Iterable[int], d: DistMatrix | None = None) -> HullResult:
    d = _connected_dist(g, d)
    mask = to_mask(seed)
    if not mask:
        raise EmptySet("hull of an empty seed")
    hull, rounds = hull_mask(d.interval_masks, mask)
    return HullResult(frozenset(bits(hull)), rounds)


def is_convex(g: Graph, s: Iterable[int], d: DistMatrix | None = None) -> bool:
    d = _connected_dist(g, d)
    return convexity_violation(d.interval_masks, to_mask(s)) is None


def u_set_mask(d: DistMatrix, v: int, u: int) -> int:
    """Bitmask of ``{x : v in I[x, u]}``."""
    col = d.between[:, v, u]
    return to_mask(np.flatnonzero(col).tolist())


def u_set(g: Graph, v: int, u: int, d: DistMatrix | None = None) -> frozenset[int]:
    d = _connected_dist(g, d)
    return frozenset(bits(u_set_mask(d, v, u)))


def w_set(g: Graph, v: int, u: int, d: DistMatrix | None = None) -> frozenset[int]:
    """Vertices strictly closer to ``v`` than to ``u``; ``uv`` must be an edge."""
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    d = _connected_dist(g, d)
    vals = d.values
    return frozenset(np.flatnonzero(vals[:, v] < vals[:, u]).tolist())


def pair_hull_mask(d: DistMatrix, x: int, u: int) -> int:
    cache = d.memo.setdefault("pair_hull", {})
    key = (x, u) if x <= u else (u, x)
    hull = cache.get(key)
    if hull is None:
        hull = hull_mask(d.interval_masks, (1 << x) | (1 << u))[0]
        cache[key] = hull
    return hull


def point_shadow_mask(d: DistMatrix, v: int, u: int) -> int:
    out = 0
    for x in range(d.n):
        if pair_hull_mask(d, x, u) >> v & 1:
            out |= 1 << x
    return out


def point_shadow(g: Graph, v: int, u: int, d: DistMatrix | None = None) -> frozenset[int]:
    """``v/u``: vertices ``x`` whose hull with ``u`` contains ``v``."""
    d = _connected_dist(g, d)
    return frozenset(bits(point_shadow_mask(d, v, u)))


def gate_report(g: Graph, s: Iterable[int], d: DistMatrix | None = None) -> GateReport:
    members = sorted(set(s))
    if not members:
        raise EmptySet("gate report of an empty set")
    if not is_connected(induced_subgraph(g, members)):
        raise DisconnectedInduced("the induced subgraph on the set is not connected")
    d = _connected_dist(g, d)
    vals = d.values
    idx = np.array(members)
    inside = set(members)
    gates: dict[int, int] = {}
    for u in range(g.n):
        if u in inside:
            continue
        row = vals[u, idx]
        # candidate x is a gate iff d(u, y) = d(u, x) + d(x, y) for every y
        ok = (vals[u, idx][:, None] + vals[np.ix_(idx, idx)] == row[None, :]).all(axis=1)
        found = idx[ok]
        if len(found) == 0:
            return GateReport(False, {}, u)
        assert len(found) == 1, f"vertex {u} has several gates {found.tolist()}"
        gates[u] = int(found[0])
    return GateReport(True, gates, None)


def is_gated(g: Graph, s: Iterable[int], d: DistMatrix | None = None) -> bool:
    return gate_report(g, s, d).gated
