"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's algorithms; graphs are plain
``(n, edge list)`` pairs or anything with ``.n`` and ``.edges()``.
"""

from __future__ import annotations

import itertools
from collections import deque


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_distances(n, edges):
    """``dist[u][v]`` or ``None`` when unreachable."""
    adj = adjacency(n, edges)
    out = []
    for s in range(n):
        dist = [None] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if dist[b] is None:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        out.append(dist)
    return out


def of(g):
    return g.n, g.edges()


def interval(dist, u, v):
    return {w for w in range(len(dist)) if dist[u][w] + dist[w][v] == dist[u][v]}


def smooth_violation(n, edges):
    """First ``(u, v, w, x, y)`` in plain nested-loop order violating the edge form, or None."""
    dist = bfs_distances(n, edges)
    adj = adjacency(n, edges)
    arcs = [(u, v) for u in range(n) for v in sorted(adj[u])]

    def between(a, b, c):
        return dist[a][b] + dist[b][c] == dist[a][c]

    for u, v in arcs:
        for w, x in arcs:
            if len({u, v, w, x}) < 4 or not between(u, v, w) or between(u, v, x):
                continue
            for y in range(n):
                if y in (u, v, w, x):
                    continue
                if between(u, v, y) and between(w, x, y):
                    return u, v, w, x, y
    return None


def star_violation(n, edges):
    """Violation of the condition over all five-tuples, no adjacency premise."""
    dist = bfs_distances(n, edges)
    r = range(n)
    for u, v, w, x, y in itertools.product(r, repeat=5):
        d = dist
        if (
            d[u][v] + d[v][w] == d[u][w]
            and d[u][v] + d[v][y] == d[u][y]
            and d[w][x] + d[x][y] == d[w][y]
            and d[u][v] + d[v][x] != d[u][x]
        ):
            return u, v, w, x, y
    return None


def is_convex(dist, s):
    s = set(s)
    return all(interval(dist, a, b) <= s for a in s for b in s)


def hull(dist, s):
    s = set(s)
    while True:
        t = set(s)
        for a in s:
            for b in s:
                t |= interval(dist, a, b)
        if t == s:
            return s
        s = t


def is_connected(n, edges):
    return all(d is not None for d in bfs_distances(n, edges)[0])


def is_bipartite(n, edges):
    dist = bfs_distances(n, edges)
    return all(dist[0][u] % 2 != dist[0][v] % 2 for u, v in edges)


def induced_contains(n, edges, pn, pedges):
    """Whether the pattern occurs as an induced subgraph, by trying every injection."""
    adj = adjacency(n, edges)
    pset = {frozenset(e) for e in pedges}
    for image in itertools.permutations(range(n), pn):
        if all(
            (image[j] in adj[image[i]]) == (frozenset((i, j)) in pset)
            for i in range(pn)
            for j in range(i + 1, pn)
        ):
            return True
    return False


def isomorphic(n, e1, e2):
    if len(e1) != len(e2):
        return False
    target = {frozenset(e) for e in e2}
    for p in itertools.permutations(range(n)):
        if all(frozenset((p[u], p[v])) in target for u, v in e1):
            return True
    return False


def labeled_class_counts(n):
    """``(all, connected)`` isomorphism-class counts by scanning every labelled graph.

    Every labelled graph is an integer over the ``n(n-1)/2`` edge slots. The
    first unseen one starts a new class, and all its relabellings are marked.
    """
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for p in itertools.permutations(range(n)):
        perms.append([index[tuple(sorted((p[a], p[b])))] for a, b in pairs])
    seen = bytearray(1 << len(pairs))
    total = connected = 0
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        total += 1
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        if is_connected(n, edges):
            connected += 1
        slots = [i for i in range(len(pairs)) if code >> i & 1]
        for mp in perms:
            c = 0
            for i in slots:
                c |= 1 << mp[i]
            seen[c] = 1
    return total, connected


def is_partial_cube_by_theta(n, edges):
    """Bipartite and the Djokovic-Winkler relation is transitive."""
    if not is_bipartite(n, edges):
        return False
    d = bfs_distances(n, edges)
    es = [tuple(e) for e in edges]

    def theta(e, f):
        (x, y), (u, v) = e, f
        return d[x][u] + d[y][v] != d[x][v] + d[y][u]

    for e, f, h in itertools.product(es, repeat=3):
        if theta(e, f) and theta(f, h) and not theta(e, h):
            return False
    return True


def is_weakly_modular(n, edges):
    d = bfs_distances(n, edges)
    adj = adjacency(n, edges)
    for u in range(n):
        for v in range(n):
            for w in range(n):
                k = d[u][v]
                if d[u][w] != k or k < 1:
                    continue
                if d[v][w] == 1:
                    if not any(d[u][z] == k - 1 for z in adj[v] & adj[w]):
                        return False
                if d[v][w] == 2:
                    for z in adj[v] & adj[w]:
                        if d[u][z] == k + 1 and not any(d[u][x] == k - 1 for x in adj[v] & adj[w]):
                            return False
    return True


def is_pseudo_modular(n, edges):
    d = bfs_distances(n, edges)
    adj = adjacency(n, edges)
    for u, v, w in itertools.product(range(n), repeat=3):
        k = d[v][u]
        if 1 <= d[u][w] <= 2 and k >= 2 and d[v][w] == k:
            if not any(d[v][x] == k - 1 for x in adj[u] & adj[w]):
                return False
    return True


def has_pasch(n, edges):
    d = bfs_distances(n, edges)
    iv = [[interval(d, a, b) for b in range(n)] for a in range(n)]
    for p, a, b in itertools.product(range(n), repeat=3):
        for a1 in iv[p][a]:
            for b1 in iv[p][b]:
                if not iv[a1][b] & iv[b1][a]:
                    return False
    return True


def has_monotone_intervals(n, edges):
    d = bfs_distances(n, edges)
    return all(is_convex(d, interval(d, u, v)) for u in range(n) for v in range(n))


def is_ptolemaic(n, edges):
    d = bfs_distances(n, edges)
    for u, v, w, x in itertools.product(range(n), repeat=4):
        if d[u][v] * d[w][x] + d[u][x] * d[v][w] < d[u][w] * d[v][x]:
            return False
    return True
