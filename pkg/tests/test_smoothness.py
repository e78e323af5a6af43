import itertools

import pytest

import oracles
from smoothgraph.errors import Disconnected
from smoothgraph.graph import Witness, from_edges
from smoothgraph.patterns import FIGURE_TUPLES, FIXTURES, fixture
from smoothgraph.smoothness import (
    Method,
    check_all,
    check_sm_edge,
    check_sm_star,
    check_smoothness,
    check_via_u_convexity,
    distance_condition,
    edge_witness,
    is_smooth,
    is_witness,
    resolve_method,
)

NOT_SMOOTH = {"K23", "K113", "FIG2", "FIG4", "FIG5"}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_verdicts(name):
    g = fixture(name)
    verdicts = check_all(g)
    for v in verdicts.values():
        assert v.smooth == (name not in NOT_SMOOTH)
        assert bool(v) == v.smooth


@pytest.mark.parametrize("name", sorted(FIGURE_TUPLES))
def test_witness_reproduces_figure_labels(name):
    g = fixture(name)
    expected = Witness(*FIGURE_TUPLES[name])
    for verdict in check_all(g).values():
        assert verdict.witness == expected


def test_edge_method_matches_loop_oracle(connected_upto6):
    for g in connected_upto6:
        expected = oracles.smooth_violation(*oracles.of(g))
        got = check_sm_edge(g)
        if expected is None:
            assert got.smooth
        else:
            assert got.witness == Witness(*expected)


def test_star_method_matches_five_tuple_oracle(connected_upto6):
    for g in connected_upto6:
        if g.n > 6:
            continue
        assert check_sm_star(g).smooth == (oracles.star_violation(*oracles.of(g)) is None)


def test_u_convexity_matches_oracle(connected_upto6):
    for g in connected_upto6:
        assert check_via_u_convexity(g).smooth == (oracles.smooth_violation(*oracles.of(g)) is None)


def test_repeated_vertices_never_violate(connected_upto6):
    for g in connected_upto6:
        if g.n > 5:
            continue
        d = g.distances
        for t in itertools.product(range(g.n), repeat=5):
            if len(set(t)) < 5:
                assert distance_condition(d, *t)


def test_every_star_violation_converts_to_an_edge_witness():
    for name in NOT_SMOOTH:
        g = fixture(name)
        d = g.distances
        for t in itertools.product(range(g.n), repeat=5):
            if not distance_condition(d, *t):
                assert is_witness(g, d, edge_witness(g, d, t))


def test_edge_witness_rejects_non_violations():
    g = fixture("W4MINUS")
    with pytest.raises(ValueError):
        edge_witness(g, g.distances, (0, 1, 2, 3, 4))


def test_witness_invariants_on_all_methods(connected_upto6):
    for g in connected_upto6:
        for verdict in check_all(g).values():
            if not verdict.smooth:
                w = verdict.witness
                assert is_witness(g, g.distances, w)
                b = g.distances.between
                assert b[w.u, w.v, w.w] and b[w.u, w.v, w.y] and b[w.w, w.x, w.y]
                assert not b[w.u, w.v, w.x]


def test_disconnected_input():
    g = from_edges(5, [(0, 1), (2, 3)])
    for method in Method:
        with pytest.raises(Disconnected):
            check_smoothness(g, method)
    with pytest.raises(Disconnected):
        distance_condition(g.distances, 0, 1, 2, 3, 4)


def test_small_graphs_are_smooth():
    for n in range(1, 5):
        assert is_smooth(from_edges(n, [(i, i + 1) for i in range(n - 1)]))


def test_method_names():
    assert resolve_method("naive") is Method.EDGE
    assert resolve_method("sm*") is Method.STAR
    assert resolve_method("convexity") is Method.U_CONVEXITY
    with pytest.raises(ValueError):
        resolve_method("bogus")


def test_verdict_dict():
    v = check_sm_edge(fixture("K23"))
    assert v.to_dict() == {"method": "edge", "smooth": False, "witness": {"u": 0, "v": 1, "w": 3, "x": 2, "y": 4}}
    assert check_sm_edge(fixture("C4")).to_dict() == {"method": "edge", "smooth": True}
