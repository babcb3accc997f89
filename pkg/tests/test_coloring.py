import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_is_pd_coloring, brute_separable, random_connected_graph
from properdisc.coloring import (
    ColoringError,
    EdgeColoring,
    canonical_colors,
    find_proper_cut,
    first_uncut_pair,
    format_coloring,
    is_proper_set,
    parse_coloring,
    restrict_coloring,
    verify_pd_coloring,
)
from properdisc.graph import Graph, GraphError, induced_and_spanning_subgraph

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_edge_coloring_validation():
    with pytest.raises(ColoringError):
        EdgeColoring(K3, (1, 2), 2)
    with pytest.raises(ColoringError):
        EdgeColoring(K3, (1, 2, 3), 2)
    with pytest.raises(ColoringError):
        EdgeColoring.from_mapping(K3, {(0, 1): 1, (1, 2): 1})
    c = EdgeColoring.from_mapping(K3, {(1, 0): 1, (2, 1): 2, (2, 0): 2})
    assert c.k == 2 and c.color(0, 2) == 2 and c.num_used == 2


def test_proper_set_examples():
    c = EdgeColoring.from_mapping(P3, {(0, 1): 1, (1, 2): 1})
    assert not is_proper_set(c, [(0, 1), (1, 2)])
    assert is_proper_set(c, [(0, 1)])
    assert is_proper_set(c, [])
    c2 = EdgeColoring.from_mapping(P3, {(0, 1): 1, (1, 2): 2})
    assert is_proper_set(c2, [(0, 1), (1, 2)])


@st.composite
def colored_sets(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    g = random_connected_graph(rng, draw(st.integers(2, 7)))
    k = draw(st.integers(1, 3))
    cols = tuple(draw(st.integers(1, k)) for _ in g.edges)
    subset = draw(st.lists(st.sampled_from(g.edges), unique=True))
    return EdgeColoring(g, cols, k), subset


@settings(max_examples=200)
@given(colored_sets(), st.data())
def test_subsets_of_proper_sets_are_proper(cs, data):
    coloring, edges = cs
    if is_proper_set(coloring, edges):
        sub = data.draw(st.lists(st.sampled_from(edges), unique=True)) if edges else []
        assert is_proper_set(coloring, sub)


def test_find_proper_cut_examples():
    # K_3 monochromatic: every cut has two adjacent same-colored edges
    mono = EdgeColoring.uniform(K3)
    assert find_proper_cut(mono, 0, 1) is None
    two = EdgeColoring.from_mapping(K3, {(0, 1): 1, (1, 2): 1, (0, 2): 2})
    w = find_proper_cut(two, 0, 1)
    assert w is not None and is_proper_set(two, w.crossing_edges)
    c4 = EdgeColoring.uniform(C4)
    for u, v in combinations(range(4), 2):
        w = find_proper_cut(c4, u, v)
        assert (u in w.side) != (v in w.side)
        assert w.crossing_edges == C4.crossing_edges(w.side)


def test_find_proper_cut_returns_lexicographically_first_side():
    c4 = EdgeColoring.uniform(C4)
    # the smallest sorted side containing 0 but not 1 with a matching cut is {0, 3}
    assert find_proper_cut(c4, 0, 1).side == {0, 3}


def test_find_proper_cut_rejects_bad_input():
    c = EdgeColoring.uniform(K3)
    with pytest.raises(GraphError):
        find_proper_cut(c, 0, 0)
    with pytest.raises(GraphError):
        find_proper_cut(c, 0, 5)
    with pytest.raises(GraphError):
        find_proper_cut(EdgeColoring.uniform(Graph.from_edges(3, [(0, 1)])), 0, 2)


def test_find_proper_cut_matches_edge_subset_brute_force():
    rng = random.Random(20240611)
    for _ in range(400):
        g = random_connected_graph(rng, rng.randint(2, 6))
        k = rng.randint(1, 3)
        colors = {e: rng.randint(1, k) for e in g.edges}
        c = EdgeColoring.from_mapping(g, colors, k)
        u, v = rng.sample(range(g.n), 2)
        assert (find_proper_cut(c, u, v) is not None) == brute_separable(g, colors, u, v)


def test_verify_pd_coloring_matches_brute_force():
    rng = random.Random(99)
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(2, 5))
        k = rng.randint(1, 3)
        colors = {e: rng.randint(1, k) for e in g.edges}
        c = EdgeColoring.from_mapping(g, colors, k)
        cert = verify_pd_coloring(c)
        assert (cert is not None) == brute_is_pd_coloring(g, colors)
        if cert is not None:
            assert cert.check()
            assert first_uncut_pair(c) is None
        else:
            u, v = first_uncut_pair(c)
            assert not brute_separable(g, colors, u, v)


def test_certificate_check_catches_tampering():
    cert = verify_pd_coloring(EdgeColoring.uniform(C4))
    assert cert.check()
    bad = dict(cert.witnesses)
    w = bad[(0, 2)]
    bad[(0, 2)] = type(w)(w.side, frozenset(), w.separated_pair)
    assert not type(cert)(cert.coloring, bad).check()
    del bad[(0, 2)]
    assert not type(cert)(cert.coloring, bad).check()


def test_verify_rejects_trivial_and_disconnected():
    with pytest.raises(GraphError):
        verify_pd_coloring(EdgeColoring.uniform(Graph.from_edges(1, [])))
    with pytest.raises(GraphError):
        verify_pd_coloring(EdgeColoring.uniform(Graph.from_edges(3, [(0, 1)])))


def test_restrict_coloring_pulls_back_colors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    c = EdgeColoring.from_mapping(g, {(0, 1): 1, (1, 2): 2, (2, 3): 3, (0, 3): 1, (0, 2): 2}, 3)
    sub = induced_and_spanning_subgraph(g, [0, 2, 3])
    r = restrict_coloring(c, sub.graph, sub.label_map)
    assert r.k == 3
    assert r.as_dict() == {(0, 1): 2, (0, 2): 1, (1, 2): 3}


def test_canonical_colors():
    assert canonical_colors((3, 1, 3, 2)) == (1, 2, 1, 3)


def test_coloring_text_round_trip():
    c = EdgeColoring.from_mapping(K3, {(0, 1): 1, (1, 2): 1, (0, 2): 2})
    text = format_coloring(c)
    assert text.splitlines()[0] == "k=2"
    assert parse_coloring(K3, text) == c
    assert parse_coloring(K3, "# comment\nk=2\n\n1 0 1\n2 1 1\n0 2 2  # tail\n") == c


@pytest.mark.parametrize(
    "text",
    [
        "0 1 1\n",
        "k=x\n",
        "k=2\n0 1\n",
        "k=2\n0 1 1\n1 2 1\n",
        "k=2\n0 1 1\n1 2 1\n0 2 3\n",
        "k=2\n0 1 1\n1 2 1\n0 2 1\n0 2 2\n",
    ],
)
def test_coloring_text_errors(text):
    with pytest.raises(ColoringError):
        parse_coloring(K3, text)
