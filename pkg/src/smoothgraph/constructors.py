"""Graph families, the three standard products, gated amalgams and scaled embeddings.

Product vertices are ordered row-major: vertex ``(i, j)`` of ``G x H`` gets
id ``i * H.n + j``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .convexity import gate_report
from .errors import BadParams, GluePartMismatch, NotGated
from .graph import Graph, from_edges
from .patterns import fixture

MAX_CUBE_DIM = 12


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise BadParams("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(k: int) -> Graph:
    """``Q_k`` on the integers ``0..2^k-1``; adjacent iff they differ in one bit."""
    if not 0 <= k <= MAX_CUBE_DIM:
        raise BadParams(f"hypercube dimension must be in 0..{MAX_CUBE_DIM}")
    n = 1 << k
    return Graph._trusted(n, tuple(sum(1 << (x ^ (1 << i)) for i in range(k)) for x in range(n)))


def half_cube(k: int) -> Graph:
    """Square of ``Q_{k-1}``: binary strings of length ``k-1``, adjacent at Hamming distance 1 or 2."""
    if not 1 <= k <= MAX_CUBE_DIM:
        raise BadParams(f"half-cube parameter must be in 1..{MAX_CUBE_DIM}")
    n = 1 << (k - 1)
    adj = []
    for x in range(n):
        m = 0
        for y in range(n):
            if 1 <= (x ^ y).bit_count() <= 2:
                m |= 1 << y
        adj.append(m)
    return Graph._trusted(n, tuple(adj))


def cocktail_party(m: int) -> Graph:
    """``K_2m`` minus the perfect matching ``{2i, 2i+1}``."""
    if m < 2:
        raise BadParams("cocktail party graph needs m >= 2")
    n = 2 * m
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) & ~(1 << (v ^ 1)) for v in range(n)))


def hamming(*sizes: int) -> Graph:
    """Cartesian product of complete graphs ``K_{k1} x ... x K_{km}``."""
    if not sizes:
        raise BadParams("hamming graph needs at least one factor")
    return reduce(cartesian_product, [complete(k) for k in sizes])


FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "hypercube": hypercube,
    "hamming": hamming,
    "cocktail_party": cocktail_party,
    "half_cube": half_cube,
}


def make(family: str, *params: int | str) -> Graph:
    family = family.lower().replace("-", "_")
    if family == "fixture":
        if len(params) != 1:
            raise BadParams("fixture takes exactly one name")
        return fixture(str(params[0]))
    try:
        build = FAMILIES[family]
    except KeyError:
        raise BadParams(f"unknown family {family!r}") from None
    try:
        return build(*(int(p) for p in params))
    except (TypeError, ValueError) as exc:
        raise BadParams(f"bad parameters for {family}: {exc}") from None


# -- products ---------------------------------------------------------------


def product_coordinates(g: Graph, h: Graph) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g.n) for j in range(h.n)]


def layer(g: Graph, h: Graph, *, g_vertex: int | None = None, h_vertex: int | None = None) -> frozenset[int]:
    """Product vertices with the given fixed coordinate (an ``H``- or ``G``-layer)."""
    if (g_vertex is None) == (h_vertex is None):
        raise BadParams("fix exactly one coordinate")
    if g_vertex is not None:
        return frozenset(g_vertex * h.n + j for j in range(h.n))
    return frozenset(i * h.n + h_vertex for i in range(g.n))


def _product(g: Graph, h: Graph, adjacent) -> Graph:
    ga = g.adjacency_matrix()
    ha = h.adjacency_matrix()
    geq = np.eye(g.n, dtype=bool)
    heq = np.eye(h.n, dtype=bool)
    mat = adjacent(ga[:, None, :, None], geq[:, None, :, None], ha[None, :, None, :], heq[None, :, None, :])
    mat = mat.reshape(g.n * h.n, g.n * h.n)
    n = g.n * h.n
    packed = np.packbits(mat, axis=1, bitorder="little")
    return Graph._trusted(n, tuple(int.from_bytes(packed[v].tobytes(), "little") for v in range(n)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda ga, ge, ha, he: (ge & ha) | (ga & he))


def strong_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda ga, ge, ha, he: (ge & ha) | (ga & he) | (ga & ha))


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """``(g, h) ~ (g', h')`` iff ``gg'`` is an edge, or ``g = g'`` and ``hh'`` is an edge."""
    return _product(g, h, lambda ga, ge, ha, he: ga | (ge & ha))


PRODUCTS = {
    "box": cartesian_product,
    "cartesian": cartesian_product,
    "strong": strong_product,
    "lex": lexicographic_product,
    "lexicographic": lexicographic_product,
}


# -- gated amalgam ----------------------------------------------------------


@dataclass(frozen=True)
class AmalgamSpec:
    """Glue ``g1`` and ``g2`` by identifying ``a[i]`` in ``g1`` with ``b[i]`` in ``g2``."""

    g1: Graph
    g2: Graph
    a: tuple[int, ...]
    b: tuple[int, ...]


def glue(spec: AmalgamSpec) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Quotient of the disjoint union, without any gatedness check.

    ``g1`` keeps its ids; the unglued vertices of ``g2`` follow in ascending
    order. Returns the graph and the images of ``V(g1)`` and ``V(g2)``.
    """
    g1, g2, a, b = spec.g1, spec.g2, tuple(spec.a), tuple(spec.b)
    if not a or len(a) != len(b):
        raise GluePartMismatch("glue lists must be non-empty and of equal length")
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        raise GluePartMismatch("glue lists must not repeat vertices")
    if any(not 0 <= x < g1.n for x in a) or any(not 0 <= y < g2.n for y in b):
        raise GluePartMismatch("glue vertex out of range")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if g1.has_edge(a[i], a[j]) != g2.has_edge(b[i], b[j]):
                raise GluePartMismatch(
                    f"pair {a[i]},{a[j]} in g1 and {b[i]},{b[j]} in g2 disagree on adjacency"
                )
    image = {}
    glued = dict(zip(b, a))
    nxt = g1.n
    for y in range(g2.n):
        if y in glued:
            image[y] = glued[y]
        else:
            image[y] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((image[x], image[y]) for x, y in g2.edges())
    g = from_edges(nxt, edges)
    return g, frozenset(range(g1.n)), frozenset(image.values())


def gated_amalgam(spec: AmalgamSpec) -> Graph:
    """Glue and verify that both sides are gated in the result."""
    g, w1, w2 = glue(spec)
    for side, w in ((1, w1), (2, w2)):
        report = gate_report(g, w)
        if not report.gated:
            raise NotGated(
                f"image of g{side} is not gated: vertex {report.violator} has no gate",
                violator=report.violator,
                side=side,
            )
    return g


# -- scaled embeddings ------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingMap:
    phi: tuple[int, ...]
    scale: int = 1


def verify_scale_embedding(g: Graph, h: Graph, m: EmbeddingMap | Sequence[int], scale: int | None = None) -> bool:
    """``d_H(phi(x), phi(y)) == scale * d_G(x, y)`` for every pair."""
    if not isinstance(m, EmbeddingMap):
        m = EmbeddingMap(tuple(m), 1 if scale is None else scale)
    elif scale is not None:
        m = EmbeddingMap(m.phi, scale)
    if m.scale < 1 or len(m.phi) != g.n:
        return False
    if any(not 0 <= p < h.n for p in m.phi):
        return False
    dg, dh = g.distances, h.distances
    if not (dg.connected and dh.connected):
        return False
    idx = np.array(m.phi)
    return bool(np.array_equal(dh.values[np.ix_(idx, idx)], m.scale * dg.values))


def half_cube_embedding(k: int) -> EmbeddingMap:
    """Scale-2 map of ``half_cube(k)`` into ``hypercube(k)``: append the parity bit."""
    n = 1 << (k - 1)
    return EmbeddingMap(tuple((x << 1) | (x.bit_count() & 1) for x in range(n)), 2)

