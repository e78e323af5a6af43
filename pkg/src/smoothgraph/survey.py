"""Isomorph-free enumeration of small graphs and the survey pipeline on top of it.

Layer ``n`` is built from layer ``n - 1`` by adding one vertex with every
possible neighbourhood and keeping one graph per canonical form. Layers are
cached for the life of the process, so repeated surveys only pay once.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import IO

from .canonical import canonical_form, canonical_graph
from .errors import BadParams, TooLarge, UnknownPredicate
from .formats import graph6_decode, graph6_encode, read_graph6_stream
from .graph import Graph, contains_induced, is_connected
from .patterns import fixture
from .recognizers import CLASS_NAMES, ClassReport, classify, predicate

MAX_N = 9
BATCH_SIZE = 512

_LAYERS: list[list[Graph]] = []


def _next_layer(prev: list[Graph], n: int) -> list[Graph]:
    seen: dict[str, Graph] = {}
    new_bit = n - 1
    for g in prev:
        adj = g.masks
        for nb in range(1 << new_bit):
            masks = tuple(m | ((nb >> i & 1) << new_bit) for i, m in enumerate(adj)) + (nb,)
            h = Graph._trusted(n, masks)
            cf = canonical_form(h)
            if cf not in seen:
                seen[cf] = h
    return [canonical_graph(seen[cf]) for cf in sorted(seen)]


def graphs_on(n: int) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, canonically labelled and sorted by canonical form."""
    if n < 1:
        raise BadParams("n must be at least 1")
    if n > MAX_N:
        raise TooLarge(f"enumeration is bounded to n <= {MAX_N}")
    if not _LAYERS:
        _LAYERS.append([Graph._trusted(1, (0,))])
    while len(_LAYERS) < n:
        k = len(_LAYERS) + 1
        _LAYERS.append(_next_layer(_LAYERS[-1], k))
    return _LAYERS[n - 1]


def enumerate_graphs(max_n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonically labelled representative per class, ascending ``n``."""
    if max_n > MAX_N:
        raise TooLarge(f"enumeration is bounded to n <= {MAX_N}")
    for n in range(1, max_n + 1):
        for g in graphs_on(n):
            if not connected_only or is_connected(g):
                yield g


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs_on(n) if is_connected(g)]


# -- queries ----------------------------------------------------------------


class Source(str, enum.Enum):
    BUILTIN = "builtin_enumerator"
    GRAPH6_STREAM = "graph6_stream"


# cheapest first; names not listed here cost the most
_COST = {
    "bipartite": 0,
    "chordal": 0,
    "ptolemaic": 1,
    "partial_cube": 2,
    "smooth": 3,
    "pseudo_modular": 4,
    "weakly_modular": 4,
    "pasch": 6,
    "monotone_intervals": 6,
}


def _split_predicate(name: str) -> tuple[str, bool]:
    """``(base, wanted)`` for a predicate name such as ``smooth`` or ``not-smooth``."""
    key = name.strip().lower().replace("-", "_")
    wanted = True
    if key.startswith("not_"):
        key, wanted = key[4:], False
    if key not in CLASS_NAMES:
        raise UnknownPredicate(f"unknown predicate {name!r}")
    return key, wanted


@dataclass(frozen=True)
class SurveyQuery:
    max_n: int
    source: Source = Source.BUILTIN
    forbidden_patterns: tuple[str, ...] = ()
    predicates: tuple[str, ...] = ()
    connected_only: bool = True
    source_path: str | Path | IO[str] | None = None
    min_n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "source", Source(self.source))
        object.__setattr__(self, "forbidden_patterns", tuple(self.forbidden_patterns))
        object.__setattr__(self, "predicates", tuple(self.predicates))
        if not 1 <= self.max_n <= MAX_N:
            raise TooLarge(f"max_n must be in 1..{MAX_N}, got {self.max_n}")
        if self.source is Source.GRAPH6_STREAM and self.source_path is None:
            raise BadParams("a graph6 source needs a path or stream")

    def resolved_patterns(self) -> list[tuple[str, Graph]]:
        return [(name, fixture(name)) for name in self.forbidden_patterns]

    def resolved_predicates(self) -> list[tuple[str, bool]]:
        parsed = [_split_predicate(p) for p in self.predicates]
        return sorted(parsed, key=lambda p: _COST.get(p[0], 5))


@dataclass
class SurveyResult:
    max_n: int
    counts: dict[int, int]
    graphs: list[str]
    reports: dict[str, ClassReport] = field(default_factory=dict)
    scanned: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return len(self.graphs)

    def to_dict(self) -> dict:
        return {
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "graphs": [
                {"graph6": s, "n": graph6_decode(s).n, "report": self.reports[s].to_dict()}
                if s in self.reports
                else {"graph6": s, "n": graph6_decode(s).n}
                for s in self.graphs
            ],
            "max_n": self.max_n,
            "scanned": {str(n): c for n, c in sorted(self.scanned.items())},
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = ["n\tscanned\tmatched"]
        for n in range(1, self.max_n + 1):
            lines.append(f"{n}\t{self.scanned.get(n, 0)}\t{self.counts.get(n, 0)}")
        lines.append(f"total\t{sum(self.scanned.values())}\t{self.total}")
        lines.extend(self.graphs)
        return "\n".join(lines) + "\n"


def _matches(
    g: Graph,
    patterns: list[tuple[str, Graph]],
    preds: list[tuple[str, bool]],
    connected_only: bool,
) -> bool:
    connected = is_connected(g)
    if connected_only and not connected:
        return False
    for _, pat in patterns:
        if contains_induced(g, pat) is not None:
            return False
    if preds and not connected:
        # every class predicate is defined on connected graphs only
        return False
    d = g.distances if preds else None
    for name, wanted in preds:
        if predicate(name)(g, d) != wanted:
            return False
    return True


def _report_names(preds: list[tuple[str, bool]]) -> tuple[str, ...]:
    names = {name for name, _ in preds} | {"smooth"}
    return tuple(n for n in CLASS_NAMES if n in names)


def _evaluate_batch(args: tuple[list[str], SurveyQuery]) -> list[tuple[str, ClassReport | None]]:
    """Canonical forms of the matching graphs in one batch, in input order."""
    forms, q = args
    patterns = q.resolved_patterns()
    preds = q.resolved_predicates()
    names = _report_names(preds)
    out = []
    for cf in forms:
        g = graph6_decode(cf)
        if _matches(g, patterns, preds, q.connected_only):
            report = classify(g, names=names) if is_connected(g) else None
            out.append((cf, report))
    return out


def _candidates(q: SurveyQuery) -> list[str]:
    """Sorted canonical forms of every graph the query scans."""
    if q.source is Source.BUILTIN:
        forms = [graph6_encode(g) for g in enumerate_graphs(q.max_n) if g.n >= q.min_n]
    else:
        seen = set()
        for g in read_graph6_stream(q.source_path):
            if q.min_n <= g.n <= q.max_n:
                seen.add(canonical_form(g))
        forms = list(seen)
    return sorted(forms, key=lambda s: (graph6_decode(s).n, s))


def run_survey(q: SurveyQuery, jobs: int = 1) -> SurveyResult:
    """Apply connectivity, forbidden patterns and predicates, in that order.

    Work is cut into fixed batches of the sorted candidate list and merged in
    batch order, so the result does not depend on ``jobs``.
    """
    # resolve names up front so bad input fails before any work
    q.resolved_patterns()
    q.resolved_predicates()
    forms = _candidates(q)
    plain = replace(q, source=Source.BUILTIN, source_path=None)
    batches = [(forms[i:i + BATCH_SIZE], plain) for i in range(0, len(forms), BATCH_SIZE)]
    if jobs > 1 and len(batches) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_batch, batches))
    else:
        results = [_evaluate_batch(b) for b in batches]
    scanned: dict[int, int] = {}
    for cf in forms:
        n = graph6_decode(cf).n
        scanned[n] = scanned.get(n, 0) + 1
    counts: dict[int, int] = {}
    graphs: list[str] = []
    reports: dict[str, ClassReport] = {}
    for batch in results:
        for cf, report in batch:
            n = graph6_decode(cf).n
            counts[n] = counts.get(n, 0) + 1
            graphs.append(cf)
            if report is not None:
                reports[cf] = report
    return SurveyResult(q.max_n, counts, graphs, reports, scanned)


# -- the bridged survey -----------------------------------------------------


@dataclass
class BridgedSurvey:
    """Connected bridged ``K113``-free graphs, split by smoothness and ``K113PLUS``."""

    max_n: int
    total: int
    non_smooth: list[str]
    non_smooth_with_plus: list[str]
    all_with_plus: list[str]

    @property
    def non_smooth_reading_holds(self) -> bool:
        return self.non_smooth == self.non_smooth_with_plus

    @property
    def literal_reading_holds(self) -> bool:
        return len(self.all_with_plus) == self.total

    def to_dict(self) -> dict:
        return {
            "all_with_k113plus": len(self.all_with_plus),
            "literal_reading_holds": self.literal_reading_holds,
            "max_n": self.max_n,
            "non_smooth": len(self.non_smooth),
            "non_smooth_reading_holds": self.non_smooth_reading_holds,
            "non_smooth_with_k113plus": len(self.non_smooth_with_plus),
            "total": self.total,
        }


def bridged_survey(max_n: int = 8, graphs: Iterable[Graph] | None = None) -> BridgedSurvey:
    k113, plus = fixture("K113"), fixture("K113PLUS")
    is_bridged = predicate("bridged")
    is_smooth = predicate("smooth")
    pool = connected_graphs(max_n) if graphs is None else graphs
    total = 0
    non_smooth: list[str] = []
    non_smooth_plus: list[str] = []
    all_plus: list[str] = []
    for g in pool:
        if contains_induced(g, k113) is not None or not is_bridged(g):
            continue
        total += 1
        cf = canonical_form(g)
        has_plus = contains_induced(g, plus) is not None
        if has_plus:
            all_plus.append(cf)
        if not is_smooth(g):
            non_smooth.append(cf)
            if has_plus:
                non_smooth_plus.append(cf)
    return BridgedSurvey(max_n, total, non_smooth, non_smooth_plus, all_plus)


def survey_from_stream(source: str | Path | IO[str], q: SurveyQuery) -> SurveyResult:
    """Re-run ``q`` with its candidates read from a graph6 stream."""
    return run_survey(replace(q, source=Source.GRAPH6_STREAM, source_path=source))


def write_layers(path: str | Path, max_n: int, keep: Callable[[Graph], bool] | None = None) -> int:
    """Write the enumerated graphs (optionally filtered) as graph6 lines."""
    count = 0
    with open(path, "w") as fh:
        for g in enumerate_graphs(max_n):
            if keep is None or keep(g):
                fh.write(graph6_encode(g) + "\n")
                count += 1
    return count
