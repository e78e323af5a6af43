"""Named fixture graphs.

Figure drawings label some vertices with letters; the id assigned to each
letter is listed next to every edge list. Unlabelled drawing nodes get the
remaining ids and are called ``o``, ``a``, ``b`` here.
"""

from __future__ import annotations

from .errors import UnknownPattern
from .graph import Graph, from_edges

# K_{2,3}: u=0, v=1, x=2, w=3, y=4.  Parts {v, x} and {u, w, y}.
K23 = from_edges(5, [(0, 1), (1, 4), (4, 2), (2, 3), (3, 1), (2, 0)])

# K_{1,1,3}: same labels as K23 plus the edge vx.  Hubs v, x; leaves u, w, y.
K113 = from_edges(5, [(0, 1), (1, 4), (4, 2), (2, 3), (3, 1), (0, 2), (2, 1)])

# x-house K_{1,1,3}^+: K113 plus the edge wy, i.e. the K4 {v, x, w, y}
# with the triangle uvx attached along vx.
K113PLUS = from_edges(
    5, [(0, 1), (1, 4), (4, 2), (2, 3), (3, 1), (0, 2), (2, 1), (3, 4)]
)

# Smooth/non-smooth example with a non-convex point-shadow.
# u=0, v=1, w=2, x=3, y=4; rim u-x-w-y-u, hub v misses the spoke vw.
W4MINUS = from_edges(5, [(0, 3), (3, 2), (2, 4), (4, 0), (0, 1), (1, 3), (1, 4)])

# 4-wheel: rim 0-1-2-3-0, hub 4.
W4 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])

C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

# K4 - e (diamond): missing edge 0-3.
K4E = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])

# 3-fan (gem): path 0-1-2-3 plus hub 4.
FAN3 = from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])

# K2,3- and K1,1,3-free, not smooth.
# u=0, v=1, w=2, x=3, y=4, o=5 (unlabelled node).
FIG2 = from_edges(
    6, [(3, 2), (2, 5), (5, 0), (0, 1), (1, 4), (4, 3), (3, 5), (2, 1)]
)

# K1,1,3-free premedian, chordal, not smooth; contains an x-house.
# u=0, v=1, w=2, x=3, y=4, a=5, b=6.
FIG4 = from_edges(
    7,
    [
        (0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 6), (6, 0),
        (1, 6), (6, 5), (5, 3), (3, 2), (2, 6), (1, 5),
    ],
)

# (K113, K23, K113+)-free weakly modular, pseudo-modular, not smooth.
# w=0, u=1, y=2, v=3, x=4; 5 and 6 unlabelled.  The induced W4- is
# {1, 3, 4, 5, 6} with rim 1-5-4-6 and hub 3 missing the spoke to 4.
FIG5 = from_edges(
    7,
    [
        (0, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 0), (0, 3),
        (3, 2), (6, 4), (4, 5), (6, 1), (1, 5), (1, 3),
    ],
)

# Labelled five-tuples (u, v, w, x, y) drawn in the figures.
FIGURE_TUPLES: dict[str, tuple[int, int, int, int, int]] = {
    "K23": (0, 1, 3, 2, 4),
    "K113": (0, 1, 3, 2, 4),
    "FIG2": (0, 1, 2, 3, 4),
    "FIG4": (0, 1, 2, 3, 4),
    "FIG5": (1, 3, 0, 4, 2),
}

FIXTURES: dict[str, Graph] = {
    "K23": K23,
    "K113": K113,
    "K113PLUS": K113PLUS,
    "W4": W4,
    "W4MINUS": W4MINUS,
    "C4": C4,
    "C5": C5,
    "K4E": K4E,
    "FAN3": FAN3,
    "FIG2": FIG2,
    "FIG4": FIG4,
    "FIG5": FIG5,
}

_ALIASES = {"W4-": "W4MINUS", "K113+": "K113PLUS", "GEM": "FAN3", "DIAMOND": "K4E"}


def fixture(name: str) -> Graph:
    key = name.strip().upper().replace("_", "")
    key = _ALIASES.get(key, key)
    try:
        return FIXTURES[key]
    except KeyError:
        raise UnknownPattern(f"unknown fixture {name!r}") from None


def is_fixture_name(name: str) -> bool:
    try:
        fixture(name)
    except UnknownPattern:
        return False
    return True
