"""Edge colorings, proper sets and proper cuts, and pd-coloring certificates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError, is_connected, norm_edge


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in 1..k, one per edge, indexed like ``graph.edges``."""

    graph: Graph
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ColoringError("k must be at least 1")
        if len(self.colors) != self.graph.m:
            raise ColoringError(f"expected {self.graph.m} colors, got {len(self.colors)}")
        for e, c in zip(self.graph.edges, self.colors):
            if not 1 <= c <= self.k:
                raise ColoringError(f"color {c} of edge {e} outside 1..{self.k}")

    @classmethod
    def from_mapping(cls, graph: Graph, colors: Mapping[Edge, int], k: int | None = None) -> "EdgeColoring":
        normed = {norm_edge(*e): c for e, c in colors.items()}
        missing = [e for e in graph.edges if e not in normed]
        if missing:
            raise ColoringError(f"edge {missing[0]} has no color")
        extra = [e for e in normed if not graph.has_edge(*e)]
        if extra:
            raise ColoringError(f"colored pair {extra[0]} is not an edge")
        cols = tuple(normed[e] for e in graph.edges)
        return cls(graph, cols, k if k is not None else max(cols, default=1))

    @classmethod
    def uniform(cls, graph: Graph, color: int = 1) -> "EdgeColoring":
        return cls(graph, (color,) * graph.m, max(color, 1))

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_index(u, v)]

    def as_dict(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edges, self.colors))

    @property
    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def num_used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class CutWitness:
    side: frozenset[int]
    crossing_edges: frozenset[Edge]
    separated_pair: tuple[int, int]


@dataclass(frozen=True)
class PdCertificate:
    coloring: EdgeColoring
    witnesses: Mapping[tuple[int, int], CutWitness]

    def check(self) -> bool:
        """Re-validate every witness from scratch."""
        g = self.coloring.graph
        for u, v in combinations(range(g.n), 2):
            w = self.witnesses.get((u, v))
            if w is None:
                return False
            a, b = w.separated_pair
            if {a, b} != {u, v} or (a in w.side) == (b in w.side):
                return False
            if w.crossing_edges != g.crossing_edges(w.side):
                return False
            if not is_proper_set(self.coloring, w.crossing_edges):
                return False
        return True


def is_proper_set(coloring: EdgeColoring, edges: Iterable[Sequence[int]]) -> bool:
    """True iff no two edges of the set share an endpoint and a color."""
    g = coloring.graph
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = norm_edge(*e)
        c = coloring.colors[g.edge_index(u, v)]
        for key in ((u, c), (v, c)):
            if key in seen:
                return False
            seen.add(key)
    return True


class _CutOracle:
    """Bitmask view of a coloring for fast proper-cut tests on sides S."""

    def __init__(self, coloring: EdgeColoring):
        g = coloring.graph
        self.n = g.n
        self.full = (1 << g.n) - 1
        # per vertex: neighbor masks of each color present at that vertex
        masks: list[dict[int, int]] = [dict() for _ in range(g.n)]
        for (u, v), c in zip(g.edges, coloring.colors):
            masks[u][c] = masks[u].get(c, 0) | (1 << v)
            masks[v][c] = masks[v].get(c, 0) | (1 << u)
        # only colors with >= 2 edges at a vertex can ever clash
        self.masks = [[m for m in d.values() if m & (m - 1)] for d in masks]

    def is_proper_side(self, side: int) -> bool:
        other = self.full & ~side
        for x in range(self.n):
            if not self.masks[x]:
                continue
            across = other if side >> x & 1 else side
            for m in self.masks[x]:
                hit = m & across
                if hit & (hit - 1):
                    return False
        return True


@lru_cache(maxsize=4096)
def _sides(n: int, u: int, v: int) -> tuple[int, ...]:
    """All sides S with u in S, v not in S, ordered lexicographically as sorted vertex lists."""
    rest = [x for x in range(n) if x != u and x != v]
    out = []
    for bits in range(1 << len(rest)):
        s = 1 << u
        for i, x in enumerate(rest):
            if bits >> i & 1:
                s |= 1 << x
        out.append(s)
    out.sort(key=lambda s: [x for x in range(n) if s >> x & 1])
    return tuple(out)


def _witness(g: Graph, side_mask: int, u: int, v: int) -> CutWitness:
    side = frozenset(x for x in range(g.n) if side_mask >> x & 1)
    return CutWitness(side, g.crossing_edges(side), (u, v))


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphError("a proper cut needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"pair ({u}, {v}) outside the vertex range")


def find_proper_cut(coloring: EdgeColoring, u: int, v: int, _oracle: _CutOracle | None = None) -> CutWitness | None:
    """Proper cut separating u from v, or None when no such cut exists.

    Searches sides S with u in S and v outside; the returned witness uses the
    lexicographically smallest such S. Any proper cut contains the proper cut
    E[S, V-S] with S the component of u after its removal, so this is complete.
    """
    g = coloring.graph
    _check_pair(g, u, v)
    if _oracle is None:
        if not is_connected(g):
            raise GraphError("proper cuts are defined on connected graphs")
        _oracle = _CutOracle(coloring)
    for s in _sides(g.n, u, v):
        if _oracle.is_proper_side(s):
            return _witness(g, s, u, v)
    return None


def first_uncut_pair(coloring: EdgeColoring) -> tuple[int, int] | None:
    """First pair (in lexicographic order) with no separating proper cut."""
    g = coloring.graph
    if not is_connected(g):
        raise GraphError("proper disconnection is defined on connected graphs")
    oracle = _CutOracle(coloring)
    for u, v in combinations(range(g.n), 2):
        if find_proper_cut(coloring, u, v, oracle) is None:
            return (u, v)
    return None


def verify_pd_coloring(coloring: EdgeColoring) -> PdCertificate | None:
    """Certificate that ``coloring`` makes its graph proper disconnected, else None."""
    g = coloring.graph
    if g.n < 2:
        raise GraphError("proper disconnection needs n >= 2")
    if not is_connected(g):
        raise GraphError("proper disconnection is defined on connected graphs")
    oracle = _CutOracle(coloring)
    witnesses = {}
    for u, v in combinations(range(g.n), 2):
        w = find_proper_cut(coloring, u, v, oracle)
        if w is None:
            return None
        witnesses[(u, v)] = w
    return PdCertificate(coloring, witnesses)


def restrict_coloring(coloring: EdgeColoring, subgraph: Graph, label_map: Mapping[int, int]) -> EdgeColoring:
    """Pull ``coloring`` back onto ``subgraph``; ``label_map`` sends original
    labels to subgraph labels. k is preserved."""
    inverse = {new: old for old, new in label_map.items()}
    cols = []
    for a, b in subgraph.edges:
        if a not in inverse or b not in inverse:
            raise ColoringError(f"subgraph edge {(a, b)} has an unmapped endpoint")
        u, v = inverse[a], inverse[b]
        if not coloring.graph.has_edge(u, v):
            raise ColoringError(f"subgraph edge {(a, b)} maps to non-edge {norm_edge(u, v)}")
        cols.append(coloring.color(u, v))
    return EdgeColoring(subgraph, tuple(cols), coloring.k)


def canonical_colors(colors: Sequence[int]) -> tuple[int, ...]:
    """Relabel color classes by first appearance, so permuted colorings compare equal."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen) + 1) for c in colors)


# ---------------------------------------------------------------- text format


def format_coloring(coloring: EdgeColoring) -> str:
    lines = [f"k={coloring.k}"]
    lines += [f"{u} {v} {c}" for (u, v), c in zip(coloring.graph.edges, coloring.colors)]
    return "\n".join(lines) + "\n"


def parse_coloring(graph: Graph, text: str) -> EdgeColoring:
    """Read the ``k=<int>`` header plus ``u v color`` lines (blank lines and
    ``#`` comments ignored)."""
    k = None
    colors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if k is None:
            if not line.startswith("k="):
                raise ColoringError(f"line {lineno}: expected header 'k=<int>'")
            try:
                k = int(line[2:])
            except ValueError:
                raise ColoringError(f"line {lineno}: bad color count {line[2:]!r}") from None
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ColoringError(f"line {lineno}: expected 'u v color'")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise ColoringError(f"line {lineno}: non-integer field") from None
        e = norm_edge(u, v)
        if not graph.has_edge(*e):
            raise ColoringError(f"line {lineno}: {e} is not an edge of the graph")
        if e in colors:
            raise ColoringError(f"line {lineno}: edge {e} colored twice")
        colors[e] = c
    if k is None:
        raise ColoringError("missing 'k=<int>' header")
    return EdgeColoring.from_mapping(graph, colors, k)
