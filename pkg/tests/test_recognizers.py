import itertools

import networkx as nx
import pytest

import oracles
from smoothgraph.constructors import complete, cycle, hypercube, path
from smoothgraph.errors import Disconnected
from smoothgraph.graph import contains_induced, from_edges, induced_subgraph
from smoothgraph.patterns import FIXTURES, fixture
from smoothgraph.recognizers import (
    CLASS_NAMES,
    PATTERNS_BY_CLASS,
    check_step_axiom_bp,
    classify,
    derived_class,
    find_chordal_violation,
    has_monotone_intervals,
    has_pasch_property,
    is_bipartite,
    is_chordal,
    is_partial_cube,
    is_ptolemaic,
    is_ptolemaic_by_inequality,
    is_pseudo_modular,
    is_weakly_modular,
    mcs_order,
    predicate,
    verify_retraction,
)
from smoothgraph.smoothness import is_smooth
from smoothgraph.survey import connected_graphs, graphs_on


def _nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


# -- frozen examples --------------------------------------------------------


def test_bipartite_examples():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(fixture("K23"))


def test_partial_cube_examples():
    assert is_partial_cube(cycle(6))
    assert not is_partial_cube(fixture("K23"))
    assert is_partial_cube(hypercube(4))
    assert not is_partial_cube(cycle(5))


def test_chordal_examples():
    assert is_chordal(fixture("K113"))
    assert not is_chordal(fixture("C4"))
    assert is_chordal(fixture("FIG4"))


def test_ptolemaic_examples():
    for name in ("K113", "K113PLUS"):
        assert is_ptolemaic(fixture(name))
        assert is_ptolemaic_by_inequality(fixture(name))
    assert not is_ptolemaic(fixture("C5"))
    assert not is_ptolemaic(fixture("FAN3"))


def test_weakly_modular_examples():
    assert not is_weakly_modular(cycle(6))
    assert is_weakly_modular(fixture("FIG5"))


def test_pseudo_modular_examples():
    assert is_pseudo_modular(fixture("FIG5"))
    assert not is_pseudo_modular(cycle(6))
    for n in range(1, 7):
        assert is_pseudo_modular(complete(n))


def test_derived_class_examples():
    fig4 = fixture("FIG4")
    assert derived_class(fig4, "premedian")
    assert derived_class(fig4, "bridged")
    assert not derived_class(fig4, "weakly_median")
    assert not derived_class(fixture("K113PLUS"), "weakly_median")
    with pytest.raises(ValueError):
        derived_class(fig4, "bogus")


def test_pasch_examples():
    assert not has_pasch_property(fixture("K23"))
    assert has_pasch_property(complete(4))
    trees = [g for g in connected_graphs(7) if g.m == g.n - 1]
    assert len(trees) == 1 + 1 + 1 + 2 + 3 + 6 + 11
    for t in trees:
        assert has_pasch_property(t)


def test_monotone_examples():
    assert has_monotone_intervals(path(5))
    assert has_monotone_intervals(cycle(6))
    assert not has_monotone_intervals(fixture("K23"))


def test_bp_examples():
    assert check_step_axiom_bp(cycle(6))
    assert not check_step_axiom_bp(complete(3))


def test_retraction_examples():
    g = path(4)
    assert verify_retraction(g, [0, 1, 2, 3])
    assert verify_retraction(g, [2, 2, 2, 2])
    assert not verify_retraction(g, [1, 0, 2, 3])
    # fold the path onto its first edge
    assert verify_retraction(g, [0, 1, 0, 1])
    # idempotent but stretches the edge 1-2
    assert not verify_retraction(g, [0, 0, 3, 3])


def test_connected_only():
    g = from_edges(4, [(0, 1), (2, 3)])
    for fn in (is_partial_cube, is_ptolemaic, is_weakly_modular, is_pseudo_modular, has_pasch_property):
        with pytest.raises(Disconnected):
            fn(g)


# -- differential checks against brute force -------------------------------


def test_chordal_and_bipartite_match_networkx():
    for n in range(1, 8):
        for g in graphs_on(n):
            G = _nx(g)
            assert is_bipartite(g) == nx.is_bipartite(G)
            assert is_chordal(g) == nx.is_chordal(G)


def test_mcs_order_is_a_permutation():
    for g in FIXTURES.values():
        assert sorted(mcs_order(g)) == list(range(g.n))
    bad = find_chordal_violation(fixture("C4"))
    v, a, b = bad
    assert fixture("C4").has_edge(v, a) and fixture("C4").has_edge(v, b) and not fixture("C4").has_edge(a, b)


def test_partial_cube_matches_theta_oracle(connected_upto7):
    for g in connected_upto7:
        if g.n <= 7 and is_bipartite(g):
            assert is_partial_cube(g) == oracles.is_partial_cube_by_theta(*oracles.of(g))


def test_ptolemaic_agrees_with_inequality(connected_upto7):
    for g in connected_upto7:
        assert is_ptolemaic(g) == is_ptolemaic_by_inequality(g), g


def test_ptolemaic_inequality_matches_loop_oracle(connected_upto6):
    for g in connected_upto6:
        assert is_ptolemaic_by_inequality(g) == oracles.is_ptolemaic(*oracles.of(g))


def test_weakly_and_pseudo_modular_match_oracle(connected_upto6):
    for g in connected_upto6:
        assert is_weakly_modular(g) == oracles.is_weakly_modular(*oracles.of(g)), g
        assert is_pseudo_modular(g) == oracles.is_pseudo_modular(*oracles.of(g)), g


def test_pasch_and_monotone_match_oracle(connected_upto6):
    for g in connected_upto6:
        if g.n > 6:
            continue
        assert has_pasch_property(g) == oracles.has_pasch(*oracles.of(g)), g
        assert has_monotone_intervals(g) == oracles.has_monotone_intervals(*oracles.of(g)), g


def test_chordal_graphs_are_weakly_modular(connected_upto7):
    for g in connected_upto7:
        if is_chordal(g):
            assert is_weakly_modular(g), g


def test_class_hierarchy(connected_upto7):
    chains = [
        ("bridged", "weakly_bridged"),
        ("weakly_bridged", "bucolic"),
        ("bucolic", "premedian"),
        ("quasi_median", "weakly_median"),
        ("weakly_median", "premedian"),
        ("premedian", "weakly_modular"),
        ("pseudo_modular", "weakly_modular"),
    ]
    for g in connected_upto7:
        report = classify(g, names=tuple(sorted({a for pair in chains for a in pair})))
        for small, big in chains:
            if report[small]:
                assert report[big], (g, small, big)


def test_pasch_implies_smooth_and_monotone(connected_upto6):
    for g in connected_upto6:
        if has_pasch_property(g):
            assert is_smooth(g)
            assert has_monotone_intervals(g)


def test_bp_is_bipartiteness(connected_upto7):
    for g in connected_upto7:
        assert check_step_axiom_bp(g) == is_bipartite(g)


def test_retractions_preserve_smoothness():
    # every retract of a smooth graph n<=5 is smooth
    for g in connected_graphs(5):
        if not is_smooth(g):
            continue
        for phi in itertools.product(range(g.n), repeat=g.n):
            if verify_retraction(g, phi):
                assert is_smooth(induced_subgraph(g, sorted(set(phi))))


# -- the report -------------------------------------------------------------


def test_classify_fig4():
    report = classify(fixture("FIG4"))
    assert report.chordal and report.premedian and report.bridged
    assert not report.weakly_median and not report.smooth
    d = report.to_dict()
    assert list(d) == sorted(CLASS_NAMES) + ["evidence"]
    assert d["evidence"]["weakly_median"]["pattern"] == "K113PLUS"
    assert d["evidence"]["smooth"]["witness"] == {"u": 0, "v": 1, "w": 2, "x": 3, "y": 4}


def test_classify_k113plus_and_c4():
    report = classify(fixture("K113PLUS"))
    assert report.ptolemaic and report.smooth and not report.weakly_median
    assert not classify(fixture("C4")).chordal


def test_report_evidence_only_for_failures():
    report = classify(fixture("FIG5"))
    assert set(report.evidence) == {n for n in CLASS_NAMES if not report[n]}
    with pytest.raises(AttributeError):
        report.not_a_class


def test_derived_class_patterns_route_through_fixtures():
    for name, patterns in PATTERNS_BY_CLASS.items():
        for p in patterns:
            assert contains_induced(fixture(p), fixture(p)) is not None
        # a pattern itself violates its class unless it fails weak modularity first
        for p in patterns:
            assert not predicate(name)(fixture(p))
