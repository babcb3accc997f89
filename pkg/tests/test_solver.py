import random

import networkx as nx
import pytest

from oracles import (
    brute_chromatic_index,
    brute_is_pd_coloring,
    brute_matching_cut_condition,
    brute_pd,
    random_connected_graph,
    to_nx,
)
from properdisc import families as fam
from properdisc.coloring import verify_pd_coloring
from properdisc.graph import Graph, GraphError, parse_graph6
from properdisc.solver import (
    BudgetExceeded,
    SolveBudget,
    bonds,
    chromatic_index,
    is_proper_edge_coloring,
    iter_pd_colorings,
    pd_exact,
    pd_is_one,
    proper_edge_coloring,
)


@pytest.mark.parametrize(
    "g,expected",
    [
        (fam.path(2), 1),
        (fam.path(6), 1),
        (fam.cycle(3), 2),
        (fam.cycle(5), 1),
        (fam.complete(4), 2),
        (fam.complete(5), 3),
        (fam.wheel(3), 2),
        (fam.wheel(4), 3),
        (fam.k4_minus_e(), 2),
        (fam.hypercube(3), 1),
    ],
)
def test_pd_exact_examples(g, expected):
    res = pd_exact(g)
    assert res.value == expected and res.is_exact
    assert res.certificate.check()
    assert res.certificate.coloring.k == expected


def test_pd_exact_trace_records_exhausted_levels():
    res = pd_exact(fam.complete(5))
    assert [t.split(":")[0] for t in res.lower_bound_trace] == ["k=1", "k=2"]
    assert res.describe() == "3"


def test_pd_exact_with_bounds_agrees():
    rng = random.Random(3)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 7))
        plain, bounded = pd_exact(g), pd_exact(g, use_bounds=True)
        assert plain.value == bounded.value
        assert bounded.certificate.check()


def test_pd_exact_matches_brute_force_on_tiny_graphs():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 5))
        if g.m > 7:
            continue
        assert pd_exact(g).value == brute_pd(g)


def test_pd_exact_errors():
    with pytest.raises(GraphError, match="pd is undefined for trivial graph"):
        pd_exact(parse_graph6("@"))
    with pytest.raises(GraphError):
        pd_exact(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(BudgetExceeded):
        pd_exact(fam.complete(8), SolveBudget(max_edges=20))


def test_budget_exhaustion_gives_unknown_interval():
    res = pd_exact(fam.complete(6), SolveBudget(node_limit=50))
    assert res.value is None and not res.is_exact
    assert res.describe().startswith("unknown[")
    assert 1 <= res.lower <= res.upper


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("PROPERDISC_NODE_LIMIT", "123")
    assert SolveBudget.from_env().node_limit == 123
    assert SolveBudget.from_env(node_limit=5).node_limit == 5
    with pytest.raises(ValueError):
        SolveBudget(node_limit=0)


def test_pd_exact_is_deterministic():
    g = fam.wheel(5)
    a, b = pd_exact(g), pd_exact(g)
    assert a.certificate.coloring == b.certificate.coloring
    assert a.nodes == b.nodes


def test_bonds_are_exactly_connected_bipartitions():
    g = fam.wheel(4)
    h = to_nx(g)
    for s in bonds(g):
        side = [v for v in range(g.n) if s >> v & 1]
        rest = [v for v in range(g.n) if not s >> v & 1]
        assert nx.is_connected(h.subgraph(side)) and nx.is_connected(h.subgraph(rest))
    # C_n has n(n-1)/2 bonds: pairs of rim edges
    assert len(bonds(fam.cycle(6))) == 15


def test_iter_pd_colorings_all_verify():
    g = fam.k4_minus_e()
    sols = list(iter_pd_colorings(g, 2))
    assert sols
    for c in sols:
        assert verify_pd_coloring(c) is not None
        assert brute_is_pd_coloring(g, c.as_dict())
    canon = list(iter_pd_colorings(g, 2, canonical=True))
    assert 2 * len(canon) == len(sols)  # swapping the two colors


def test_pd_is_one_examples():
    assert pd_is_one(fam.cycle(4)).holds
    assert pd_is_one(fam.path(5)).holds
    rep = pd_is_one(fam.cycle(3))
    assert not rep.holds and rep.failing_pair == (0, 1)


def test_pd_is_one_matches_oracle_and_solver():
    rng = random.Random(11)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 7))
        rep = pd_is_one(g)
        assert rep.holds == brute_matching_cut_condition(g)
        for (u, v), side in rep.witnesses.items():
            assert u in side and v not in side
            cut = g.crossing_edges(side)
            ends = [x for e in cut for x in e]
            assert len(ends) == len(set(ends))


@pytest.mark.parametrize(
    "g,chi",
    [(fam.cycle(5), 3), (fam.cycle(6), 2), (fam.complete(4), 3), (fam.complete(5), 5), (fam.path(2), 1)],
)
def test_chromatic_index_examples(g, chi):
    assert chromatic_index(g) == chi


def test_chromatic_index_petersen():
    pet = Graph.from_edges(10, nx.petersen_graph().edges)
    assert chromatic_index(pet) == 4


def test_chromatic_index_matches_brute_force():
    rng = random.Random(13)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 6), 0.4)
        if g.m > 9:
            continue
        c = proper_edge_coloring(g)
        assert is_proper_edge_coloring(c)
        assert c.k == brute_chromatic_index(g)
