"""Simple undirected graphs on dense ids, shortest-path distances and intervals.

Vertex sets are plain ``frozenset`` objects. Internally adjacency is kept as
one integer bitmask per vertex, which makes the small-graph workloads of the
survey engine cheap.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from typing import NamedTuple

import numpy as np

from .errors import (
    Disconnected,
    DisconnectedInduced,
    DisconnectedPair,
    EmptySet,
    EqualEndpoints,
    IdOutOfRange,
    SelfLoop,
)

VertexSet = frozenset


def bits(mask: int) -> list[int]:
    """Ids of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph on the vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_dist", "_hash")

    def __init__(self, n: int, adjacency: Iterable[int]):
        adj = tuple(int(a) for a in adjacency)
        if n < 1:
            raise IdOutOfRange("a graph needs at least one vertex")
        if len(adj) != n:
            raise IdOutOfRange(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise IdOutOfRange(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for w in bits(a):
                if not adj[w] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {w})")
        self._n = n
        self._adj = adj
        self._dist: DistMatrix | None = None
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, n: int, adjacency: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g._n = n
        g._adj = adjacency
        g._dist = None
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an integer bitmask."""
        return self._adj

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def ordered_edges(self) -> list[tuple[int, int]]:
        """Both orientations of every edge, in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u])]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def adjacency_matrix(self) -> np.ndarray:
        n = self._n
        mat = np.zeros((n, n), dtype=bool)
        for u, a in enumerate(self._adj):
            mat[u, bits(a)] = True
        return mat

    @property
    def distances(self) -> DistMatrix:
        """All-pairs distances, computed once per graph."""
        if self._dist is None:
            self._dist = apsp(self)
        return self._dist

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if n < 1:
        raise IdOutOfRange("a graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


class Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE


class DistMatrix:
    """Hop distances between all vertex pairs.

    ``d[u, v]`` is an ``int`` or :data:`UNREACHABLE`. The raw ``int32`` array
    is exposed as :attr:`values` together with the boolean :attr:`reachable`
    mask; entries of unreachable pairs in ``values`` carry no meaning.
    """

    __slots__ = ("_values", "_reach", "_connected", "_between", "_imasks", "memo")

    def __init__(self, values: np.ndarray, reachable: np.ndarray):
        self._values = np.asarray(values, dtype=np.int32)
        self._values.setflags(write=False)
        self._reach = np.asarray(reachable, dtype=bool)
        self._reach.setflags(write=False)
        self._connected = bool(self._reach.all())
        self._between: np.ndarray | None = None
        self._imasks: list[list[int]] | None = None
        # derived per-graph tables (e.g. hulls of vertex pairs)
        self.memo: dict = {}

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def reachable(self) -> np.ndarray:
        return self._reach

    @property
    def connected(self) -> bool:
        return self._connected

    def __getitem__(self, key: tuple[int, int]) -> int | Unreachable:
        u, v = key
        if not self._reach[u, v]:
            return UNREACHABLE
        return int(self._values[u, v])

    @property
    def between(self) -> np.ndarray:
        """Boolean tensor ``B[u, v, w]``: ``v`` lies in ``I[u, w]``."""
        if self._between is None:
            d = self._values.astype(np.int64)
            r = self._reach
            b = (d[:, :, None] + d[None, :, :]) == d[:, None, :]
            b &= r[:, :, None] & r[None, :, :]
            b.setflags(write=False)
            self._between = b
        return self._between

    @property
    def interval_masks(self) -> list[list[int]]:
        """``masks[u][w]`` is the interval ``I[u, w]`` as a bitmask."""
        if self._imasks is None:
            n = self.n
            b = np.ascontiguousarray(self.between.transpose(0, 2, 1))
            packed = np.packbits(b, axis=2, bitorder="little")
            self._imasks = [
                [int.from_bytes(packed[u, w].tobytes(), "little") for w in range(n)]
                for u in range(n)
            ]
        return self._imasks

    def require_connected(self) -> None:
        if not self._connected:
            raise Disconnected("graph is not connected")


def apsp(g: Graph) -> DistMatrix:
    """Breadth-first search from every vertex."""
    n = g.n
    adj = g.masks
    values = np.zeros((n, n), dtype=np.int32)
    reach = np.zeros((n, n), dtype=bool)
    for s in range(n):
        seen = frontier = 1 << s
        level = 0
        row = values[s]
        while frontier:
            for v in bits(frontier):
                row[v] = level
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            level += 1
        reach[s, bits(seen)] = True
    return DistMatrix(values, reach)


def _dist(g: Graph, d: DistMatrix | None) -> DistMatrix:
    return g.distances if d is None else d


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    adj = g.masks
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def components(g: Graph) -> list[frozenset[int]]:
    left = (1 << g.n) - 1
    out = []
    adj = g.masks
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(frozenset(bits(seen)))
        left &= ~seen
    return out


def interval(g: Graph, u: int, v: int, d: DistMatrix | None = None) -> frozenset[int]:
    """The geodesic interval ``I[u, v]``."""
    d = _dist(g, d)
    if not d.reachable[u, v]:
        raise DisconnectedPair(f"{u} and {v} lie in different components")
    return frozenset(bits(d.interval_masks[u][v]))


def step_set(g: Graph, u: int, v: int, d: DistMatrix | None = None) -> frozenset[int]:
    """Neighbours of ``u`` that lie on some shortest ``u, v``-path."""
    if u == v:
        raise EqualEndpoints("step set needs two distinct vertices")
    d = _dist(g, d)
    if not d.reachable[u, v]:
        raise DisconnectedPair(f"{u} and {v} lie in different components")
    return frozenset(bits(d.interval_masks[u][v] & g.masks[u]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertex ``i`` of the result is ``sorted(s)[i]``."""
    order = sorted(set(s))
    if not order:
        raise EmptySet("cannot induce on an empty vertex set")
    for v in order:
        if not 0 <= v < g.n:
            raise IdOutOfRange(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        a = 0
        for w in bits(g.masks[v]):
            if w in pos:
                a |= 1 << pos[w]
        adj.append(a)
    return Graph._trusted(len(order), tuple(adj))


def is_isometric_subgraph(g: Graph, s: Iterable[int], d: DistMatrix | None = None) -> bool:
    order = sorted(set(s))
    h = induced_subgraph(g, order)
    dh = h.distances
    if not dh.connected:
        raise DisconnectedInduced("induced subgraph is not connected")
    d = _dist(g, d)
    idx = np.array(order)
    sub = d.values[np.ix_(idx, idx)]
    return bool(np.array_equal(sub, dh.values))


def contains_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``pattern`` into ``g``.

    The result maps pattern vertex ``i`` to ``result[i]``; ``None`` if the
    pattern does not occur as an induced subgraph.
    """
    k = pattern.n
    if k > g.n:
        return None
    gadj = g.masks
    padj = pattern.masks
    pdeg = [a.bit_count() for a in padj]
    candidates = [
        [v for v in range(g.n) if gadj[v].bit_count() >= pdeg[i]] for i in range(k)
    ]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        for v in candidates[i]:
            if used >> v & 1:
                continue
            av = gadj[v]
            pa = padj[i]
            ok = True
            for j in range(i):
                if (av >> image[j] & 1) != (pa >> j & 1):
                    ok = False
                    break
            if ok:
                image[i] = v
                if extend(i + 1, used | 1 << v):
                    return True
        return False

    return tuple(image) if extend(0, 0) else None


class Witness(NamedTuple):
    """Five vertices violating the smoothness condition.

    ``uv`` and ``wx`` are edges, ``v`` lies in ``I[u, w]`` and ``I[u, y]``,
    ``x`` lies in ``I[w, y]`` but ``v`` is not in ``I[u, x]``.
    """

    u: int
    v: int
    w: int
    x: int
    y: int


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v
