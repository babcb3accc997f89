"""Independent reference implementations used only by the tests.

Nothing here imports the search code it is meant to check; graph plumbing
goes through networkx where possible.
"""

from __future__ import annotations

import random
from itertools import combinations, product

import networkx as nx

from properdisc.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus extra edges with probability p."""
    p = rng.random() if p is None else p
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, edges)


def _proper(edges: list[tuple[int, int]], color: dict) -> bool:
    seen = set()
    for u, v in edges:
        c = color[(u, v)]
        for key in ((u, c), (v, c)):
            if key in seen:
                return False
            seen.add(key)
    return True


def proper_edge_sets(g: Graph, color: dict):
    """Every proper edge set, enumerated by including edges one at a time."""
    edges = list(g.edges)

    def rec(i: int, chosen: list, used: set):
        if i == len(edges):
            yield list(chosen)
            return
        yield from rec(i + 1, chosen, used)
        u, v = edges[i]
        c = color[(u, v)]
        if (u, c) not in used and (v, c) not in used:
            chosen.append((u, v))
            used |= {(u, c), (v, c)}
            yield from rec(i + 1, chosen, used)
            used -= {(u, c), (v, c)}
            chosen.pop()

    yield from rec(0, [], set())


def brute_separable(g: Graph, color: dict, u: int, v: int) -> bool:
    """Does some proper edge set disconnect u from v? Pure edge-subset search."""
    h = to_nx(g)
    for F in proper_edge_sets(g, color):
        h2 = h.copy()
        h2.remove_edges_from(F)
        if not nx.has_path(h2, u, v):
            return True
    return False


def brute_is_pd_coloring(g: Graph, color: dict) -> bool:
    return all(brute_separable(g, color, u, v) for u, v in combinations(range(g.n), 2))


def brute_pd(g: Graph, kmax: int = 4) -> int:
    """Smallest k such that some k-coloring passes the edge-subset oracle."""
    for k in range(1, kmax + 1):
        for cols in product(range(1, k + 1), repeat=g.m):
            if brute_is_pd_coloring(g, dict(zip(g.edges, cols))):
                return k
    raise ValueError("pd above kmax")


def brute_chromatic_index(g: Graph) -> int:
    if g.m == 0:
        return 0
    lg = nx.line_graph(to_nx(g))
    nodes = list(lg.nodes)
    for k in range(1, g.m + 1):
        for cols in product(range(k), repeat=len(nodes)):
            c = dict(zip(nodes, cols))
            if all(c[a] != c[b] for a, b in lg.edges):
                return k
    raise AssertionError("unreachable")


def brute_matching_cut_condition(g: Graph) -> bool:
    """Every pair separated by some edge cut that is a matching."""
    cuts = []
    for r in range(1, g.n):
        for side in combinations(range(g.n), r):
            s = set(side)
            cut = [(a, b) for a, b in g.edges if (a in s) != (b in s)]
            ends = [x for e in cut for x in e]
            if len(ends) == len(set(ends)):
                cuts.append(s)
    return all(any((u in s) != (v in s) for s in cuts) for u, v in combinations(range(g.n), 2))


def all_connected_graphs_nx(n: int) -> list[nx.Graph]:
    """Connected graphs of order n from the networkx atlas (n <= 7)."""
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
