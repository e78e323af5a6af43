"""graph6 and edge-list codecs.

Only the single-byte size form of graph6 is supported (``n <= 62``).
The edge-list format is a header line ``"n m"`` followed by ``m`` lines
``"u v"`` with 0-based ids.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import TextIO

from .errors import MalformedEdgeList, MalformedGraph6, UnsupportedSize
from .graph import Graph, from_edges

HEADER = ">>graph6<<"
MAX_N = 62


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_N:
        raise UnsupportedSize(f"graph6 long form (n={n}) is not supported")
    adj = g.masks
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise MalformedGraph6("empty graph6 record")
    if s[0] == ":" or s[0] == ";":
        raise MalformedGraph6("sparse6 records are not supported")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"invalid graph6 character in {s!r}")
    if s[0] == "~":
        raise UnsupportedSize("graph6 long size form (n >= 63) is not supported")
    n = ord(s[0]) - 63
    if n == 0:
        raise UnsupportedSize("graphs need at least one vertex")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    value = 0
    for c in body:
        value = (value << 6) | (ord(c) - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise MalformedGraph6("non-zero padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, start=1):
        record = line.strip()
        if not record or record == HEADER:
            continue
        try:
            yield graph6_decode(record)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line=lineno) from None
        except UnsupportedSize as exc:
            raise MalformedGraph6(str(exc), line=lineno) from None


def read_graph6_stream(source: str | Path | TextIO) -> Iterator[Graph]:
    """Decode one graph per line from a path, ``"-"`` (stdin) or a text stream."""
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            yield from read_graph6_lines(sys.stdin)
            return
        with open(source, encoding="ascii") as fh:
            yield from read_graph6_lines(fh)
        return
    yield from read_graph6_lines(source)


def write_graph6_stream(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(graph6_encode(g) + "\n")
        count += 1
    return count


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise MalformedEdgeList("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(f"cannot parse edge list: {exc}") from None
    if len(edges) != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(edges)}")
    return from_edges(n, edges)


def looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        return len(parts) == 2 and all(p.isdigit() for p in parts)
    return False
