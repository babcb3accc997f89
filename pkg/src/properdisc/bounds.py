"""Bounds on pd, block composition, outerplanarity by forbidden minors, and
the classification of diameter-2 outerplanar graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .canon import are_isomorphic, canonical_key, isomorphism
from .coloring import EdgeColoring, restrict_coloring
from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    block_decomposition,
    common_neighbors,
    diameter,
    induced_and_spanning_subgraph,
    is_connected,
    is_triangle_free,
)
from .solver import SolveBudget, chromatic_index, pd_exact


# ------------------------------------------------------------------ bounds


def lower_bound_common_neighbors(g: Graph) -> tuple[int, tuple[int, int] | None]:
    """max over pairs of ceil(t/2) (+1 if adjacent), t >= 1 common neighbors;
    floored at 1. Returns the value and the first pair attaining it."""
    if g.n < 2 or not is_connected(g):
        raise GraphError("needs a nontrivial connected graph")
    best, where = 1, None
    for u, v in combinations(range(g.n), 2):
        t = len(common_neighbors(g, u, v))
        if t < 1:
            continue
        val = math.ceil(t / 2) + (1 if g.has_edge(u, v) else 0)
        if val > best:
            best, where = val, (u, v)
    return best, where


@dataclass(frozen=True)
class BoundReport:
    lower: int
    lower_reason: str
    upper: int
    upper_reason: str
    chi_prime: int
    lower_pair: tuple[int, int] | None = None

    @property
    def consistent(self) -> bool:
        return 1 <= self.lower <= self.upper


def upper_bound(g: Graph, budget: SolveBudget | None = None) -> BoundReport:
    """upper = min(max(chi' - 1, 1), ceil(n/2)); lower from common neighbors."""
    lower, pair = lower_bound_common_neighbors(g)
    chi = chromatic_index(g, budget)
    via_chi = max(chi - 1, 1)
    half = math.ceil(g.n / 2)
    if via_chi <= half:
        upper, ureason = via_chi, "chromatic_index_minus_one"
    else:
        upper, ureason = half, "half_order"
    lreason = "common_neighbor_adjacent" if pair and g.has_edge(*pair) else ("common_neighbor" if pair else "trivial")
    return BoundReport(lower, lreason, upper, ureason, chi, pair)


def constructive_upper_coloring(g: Graph, budget: SolveBudget | None = None) -> EdgeColoring:
    """A pd-coloring with min(max(chi'-1, 1), ceil(n/2)) colors: the merged
    proper edge coloring, or the K_n modular coloring restricted to g."""
    from .families import color_complete, color_via_chromatic_index

    report = upper_bound(g, budget)
    if report.upper_reason == "chromatic_index_minus_one":
        return color_via_chromatic_index(g, budget).coloring
    host = color_complete(g.n).coloring
    return restrict_coloring(host, g, {v: v for v in range(g.n)})


# ------------------------------------------------------------- composition


def compose_blocks(g: Graph, block_pd_values: Mapping, decomposition: BlockDecomposition | None = None) -> int:
    """pd(g) as the maximum block value. Keys may be block indices or the
    blocks' vertex sets."""
    dec = decomposition or block_decomposition(g)
    vals = []
    for i, verts in enumerate(dec.blocks):
        if i in block_pd_values:
            vals.append(block_pd_values[i])
        elif verts in block_pd_values:
            vals.append(block_pd_values[verts])
        else:
            raise KeyError(f"no pd value supplied for block {sorted(verts)}")
    return max(vals)


def block_pd_values(g: Graph, budget: SolveBudget | None = None) -> dict[int, int]:
    """pd of every block via the exact solver (single edges are 1)."""
    dec = block_decomposition(g)
    out = {}
    for i, verts in enumerate(dec.blocks):
        if len(verts) == 2:
            out[i] = 1
            continue
        res = pd_exact(dec.block_subgraph(g, i).graph, budget)
        if not res.is_exact:
            raise RuntimeError(f"budget exhausted on block {sorted(verts)}")
        out[i] = res.value
    return out


# -------------------------------------------------------------- minors


K4 = Graph.from_edges(4, combinations(range(4), 2))
K23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


@dataclass(frozen=True)
class MinorWitness:
    """``model[i]`` is the set of original vertices contracted into target
    vertex i; ``operations`` lists the deletions and contractions in order."""

    target: str
    model: tuple[frozenset[int], ...]
    operations: tuple[str, ...]


@dataclass(frozen=True)
class OuterplanarReport:
    outerplanar: bool
    witness: MinorWitness | None = None


def _match_target(verts: list[frozenset[int]], adj: dict, target: str) -> tuple[frozenset[int], ...] | None:
    idx = range(len(verts))
    if target == "K4":
        if all(verts[j] in adj[verts[i]] for i, j in combinations(idx, 2)):
            return tuple(verts)
        return None
    for a, b in combinations(idx, 2):
        others = [i for i in idx if i not in (a, b)]
        if all(verts[o] in adj[verts[a]] and verts[o] in adj[verts[b]] for o in others):
            return tuple([verts[a], verts[b]] + [verts[o] for o in others])
    return None


def _as_graph(adj: dict) -> Graph:
    verts = sorted(adj, key=sorted)
    pos = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(len(verts), {tuple(sorted((pos[u], pos[w]))) for u in adj for w in adj[u]})


def find_minor(g: Graph, target: str) -> MinorWitness | None:
    """Search deletions and contractions for a K4 or K_{2,3} minor.

    Each step removes one vertex (deletion or edge contraction) until the
    target order is reached, then checks for a spanning copy of the target.
    Graphs already shown minor-free are memoized by canonical form.
    """
    tn = {"K4": 4, "K23": 5}[target]
    failed: set = set()

    def rec(adj: dict, ops: tuple[str, ...]) -> MinorWitness | None:
        n = len(adj)
        m = sum(len(s) for s in adj.values()) // 2
        if n < tn or m < 6:
            return None
        if n == tn:
            model = _match_target(list(adj), adj, target)
            return MinorWitness(target, model, ops) if model else None
        key = canonical_key(_as_graph(adj))
        if key in failed:
            return None
        for v in sorted(adj, key=sorted):
            sub = {u: s - {v} for u, s in adj.items() if u != v}
            hit = rec(sub, ops + (f"delete {sorted(v)}",))
            if hit:
                return hit
        for u, w in sorted({tuple(sorted((a, b), key=sorted)) for a in adj for b in adj[a]}, key=lambda p: (sorted(p[0]), sorted(p[1]))):
            merged = u | w
            nbrs = (adj[u] | adj[w]) - {u, w}
            sub = {x: (s - {u, w}) | ({merged} if x in nbrs else set()) for x, s in adj.items() if x not in (u, w)}
            sub[merged] = set(nbrs)
            hit = rec(sub, ops + (f"contract {sorted(u)}-{sorted(w)}",))
            if hit:
                return hit
        failed.add(key)
        return None

    start = {frozenset([v]): {frozenset([w]) for w in g.adj[v]} for v in range(g.n)}
    return rec(start, ())


def check_minor_model(g: Graph, w: MinorWitness) -> bool:
    """Independent check: branch sets disjoint and connected, and every target
    edge is realized by a graph edge between the corresponding branch sets."""
    target = K4 if w.target == "K4" else K23
    sets = w.model
    if len(sets) != target.n or any(not s for s in sets):
        return False
    if sum(map(len, sets)) != len(frozenset().union(*sets)):
        return False
    for s in sets:
        sub = induced_and_spanning_subgraph(g, s).graph
        if not is_connected(sub):
            return False
    for a, b in target.edges:
        if not any(g.has_edge(x, y) for x in sets[a] for y in sets[b]):
            return False
    return True


def is_outerplanar(g: Graph) -> OuterplanarReport:
    """Outerplanar iff no K4 and no K_{2,3} minor."""
    if g.n > 10:
        raise ValueError("minor search is limited to n <= 10")
    for target in ("K4", "K23"):
        w = find_minor(g, target)
        if w is not None:
            return OuterplanarReport(False, w)
    return OuterplanarReport(True)


def outerplanar_pd(g: Graph, budget: SolveBudget | None = None) -> int:
    """1 for triangle-free outerplanar graphs; otherwise the block maximum
    from the exact solver, which must then be at least 2."""
    if not is_connected(g) or g.n < 2:
        raise GraphError("needs a nontrivial connected graph")
    if not is_outerplanar(g).outerplanar:
        raise GraphError("graph is not outerplanar")
    if is_triangle_free(g):
        return 1
    value = compose_blocks(g, block_pd_values(g, budget))
    if value < 2:
        raise AssertionError("outerplanar graph with a triangle reported pd < 2")
    return value


# ------------------------------------------------------- diameter two


@dataclass(frozen=True)
class Diam2Class:
    classification: str  # family_D, f_minus_15, f_minus_14, f_prime, other
    witness: Mapping = field(default_factory=dict)


def _linear_forest_shapes(r: int, max_paths: int):
    """Multisets of path orders (non-increasing) summing to r, with 1..max_paths parts."""
    def parts(rem: int, cap: int, left: int):
        if rem == 0:
            yield ()
            return
        if left == 0:
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in parts(rem - p, p, left - 1):
                yield (p,) + rest
    yield from parts(r, r, max_paths)


def family_d_member(paths: tuple[int, ...]) -> tuple[Graph, tuple[int, ...]]:
    """Hub joined to disjoint paths of the given orders laid out around the
    rim; returns the graph and the deleted rim edge numbers."""
    from .families import wheel_minus_rim_edges

    r = sum(paths)
    deleted, pos = [], 0
    for p in paths:
        pos += p
        deleted.append(pos)  # the rim edge leaving the end of this path
    return wheel_minus_rim_edges(r, deleted), tuple(deleted)


@lru_cache(maxsize=None)
def family_d_candidates(n: int, narrow: bool = False) -> tuple[tuple[tuple[int, ...], tuple[int, ...], Graph], ...]:
    """Members of family D of order n, one per rim-symmetry class.

    W_r (r = n - 1) with t rim edges deleted leaves t paths; we admit
    1 <= t <= r - 1, i.e. at least one rim edge survives. ``narrow``
    restricts to t <= r - 2 instead.
    """
    r = n - 1
    if r < 3:
        return ()
    tmax = r - 2 if narrow else r - 1
    out = []
    for shape in _linear_forest_shapes(r, tmax):
        g, deleted = family_d_member(shape)
        out.append((shape, deleted, g))
    return tuple(out)


def _sporadic():
    from .families import f_minus_14, f_minus_15, f_prime

    return (("f_minus_15", f_minus_15()), ("f_minus_14", f_minus_14()), ("f_prime", f_prime()))


def classify_diameter2_outerplanar(g: Graph, check_preconditions: bool = True) -> Diam2Class:
    """Match g against family D members of its order and the three sporadic
    graphs; ``other`` when none is isomorphic."""
    if check_preconditions:
        if not is_connected(g):
            raise GraphError("classification needs a connected graph")
        if diameter(g) != 2:
            raise GraphError(f"classification needs diameter 2, got {diameter(g)}")
        if not is_outerplanar(g).outerplanar:
            raise GraphError("classification needs an outerplanar graph")
    key = canonical_key(g)
    for shape, deleted, cand in family_d_candidates(g.n):
        if cand.m == g.m and canonical_key(cand) == key:
            return Diam2Class(
                "family_D",
                {"rim": g.n - 1, "deleted_rim_edges": deleted, "path_orders": shape,
                 "isomorphism": isomorphism(cand, g)},
            )
    for name, cand in _sporadic():
        if are_isomorphic(cand, g):
            return Diam2Class(name, {"isomorphism": isomorphism(cand, g)})
    return Diam2Class("other")
