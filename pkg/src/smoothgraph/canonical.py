"""Canonical labeling by ordered partition refinement and individualization.

The search tree individualizes one vertex of the first non-singleton cell at
each level and refines to an equitable partition. Two vertices of a cell that
are twins (``N(v) - {w} == N(w) - {v}``) are swapped by an automorphism that
fixes the current partition, so only one of them is branched on. The leaf
whose relabelled adjacency is lexicographically least defines the labeling.
"""

from __future__ import annotations

from .errors import TooLarge
from .formats import graph6_encode
from .graph import Graph, bits

DEFAULT_MAX_N = 10


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                new.extend(groups[k] for k in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def canonical_labeling(g: Graph, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """Vertex order ``order`` such that relabelling ``order[i] -> i`` is canonical."""
    n = g.n
    if n > max_n:
        raise TooLarge(f"canonical labeling is bounded to n <= {max_n}, got n={n}")
    adj = g.masks
    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            m = 0
            for w in bits(adj[v]):
                m |= 1 << pos[w]
            cert.append(m)
        cert_t = tuple(cert)
        if best_cert is None or cert_t < best_cert:
            best_cert = cert_t
            best_order = order

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf(cells)
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            av = adj[v]
            if any((av ^ adj[w]) & ~((1 << v) | (1 << w)) == 0 for w in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search([list(range(n))])
    return best_order


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        m = 0
        for w in bits(g.masks[v]):
            m |= 1 << pos[w]
        adj.append(m)
    return Graph._trusted(g.n, tuple(adj))


def canonical_graph(g: Graph, max_n: int = DEFAULT_MAX_N) -> Graph:
    return relabel(g, canonical_labeling(g, max_n))


def canonical_form(g: Graph, max_n: int = DEFAULT_MAX_N) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return graph6_encode(canonical_graph(g, max_n))


def is_isomorphic(g: Graph, h: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g, max_n) == canonical_form(h, max_n)
