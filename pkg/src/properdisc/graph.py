"""Simple undirected graphs on vertices 0..n-1, graph6 I/O and structural helpers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for structurally invalid graphs or bad references into a graph."""


class Graph6Error(ValueError):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices labeled 0..n-1.

    ``edges`` is stored as a sorted tuple of (u, v) pairs with u < v; the
    position of an edge in that tuple is its index everywhere in the package.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: Mapping[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} references a vertex outside 0..{self.n - 1}")
            if u > v:
                raise GraphError(f"edge {e} is not normalized (u < v)")
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from any iterable of vertex pairs (duplicates rejected)."""
        normed = [norm_edge(int(u), int(v)) for u, v in edges]
        if len(set(normed)) != len(normed):
            dup = next(e for e in normed if normed.count(e) > 1)
            raise GraphError(f"parallel edge {dup}")
        return cls(n, tuple(sorted(normed)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[norm_edge(u, v)]
        except KeyError:
            raise GraphError(f"edge {norm_edge(u, v)} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def incident(self, v: int) -> list[int]:
        """Indices of the edges incident with ``v``."""
        return [self._index[norm_edge(v, w)] for w in sorted(self.adj[v])]

    def crossing_edges(self, side: Iterable[int]) -> frozenset[Edge]:
        s = set(side)
        return frozenset(e for e in self.edges if (e[0] in s) != (e[1] in s))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --------------------------------------------------------------------- graph6


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    if g.n < 1:
        raise GraphError("graph6 needs at least one vertex")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_order(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. An optional ``>>graph6<<`` header and
    surrounding whitespace are accepted."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range character {ch!r}", base + i)

    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte order header", base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte order header", base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) < nbytes:
        raise Graph6Error(f"bitmap too short: need {nbytes} bytes, got {len(payload)}", base + len(vals))
    if len(payload) > nbytes:
        raise Graph6Error("trailing garbage after bitmap", base + pos + nbytes)
    if nbits % 6 and payload:
        pad = 6 - nbits % 6
        if payload[-1] & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", base + pos + nbytes - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (payload[byte] >> (5 - bit)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------- structure


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Distances from ``src``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def diameter(g: Graph) -> int | None:
    """Diameter, or None for a disconnected (or empty) graph."""
    if g.n == 0 or not is_connected(g):
        return None
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    return g.adj[u] & g.adj[v]


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges)


@dataclass(frozen=True)
class StructuralStats:
    diameter: int | None
    max_degree: int
    is_triangle_free: bool
    is_connected: bool
    common_neighbor_counts: Mapping[Edge, int]


def structural_stats(g: Graph) -> StructuralStats:
    counts = {(u, v): len(common_neighbors(g, u, v)) for u, v in combinations(range(g.n), 2)}
    return StructuralStats(
        diameter=diameter(g),
        max_degree=g.max_degree,
        is_triangle_free=is_triangle_free(g),
        is_connected=is_connected(g),
        common_neighbor_counts=counts,
    )


@dataclass(frozen=True)
class Subgraph:
    graph: Graph
    label_map: Mapping[int, int]  # old label -> new label


def induced_and_spanning_subgraph(
    g: Graph,
    keep_vertices: Iterable[int] | None = None,
    drop_edges: Iterable[Sequence[int]] = (),
) -> Subgraph:
    """Keep ``keep_vertices`` (all by default), drop ``drop_edges``, and
    relabel the survivors to 0..n'-1 in increasing order."""
    keep = sorted(set(range(g.n) if keep_vertices is None else keep_vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    dropped = set()
    for u, v in drop_edges:
        e = norm_edge(u, v)
        if not g.has_edge(*e):
            raise GraphError(f"edge {e} not in graph")
        dropped.add(e)
    label = {old: new for new, old in enumerate(keep)}
    edges = [
        (label[u], label[v])
        for u, v in g.edges
        if u in label and v in label and (u, v) not in dropped
    ]
    return Subgraph(Graph.from_edges(len(keep), edges), label)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map v -> perm[v]."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# -------------------------------------------------------------------- blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_edges: tuple[frozenset[Edge], ...]

    def block_subgraph(self, g: Graph, i: int) -> Subgraph:
        """Block ``i`` as a standalone graph relabeled to 0..|B|-1."""
        # blocks pairwise share at most one vertex, so a block is induced
        return induced_and_spanning_subgraph(g, self.blocks[i])


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via Hopcroft-Tarjan lowpoints (iterative DFS)."""
    if g.n < 2:
        raise GraphError("block decomposition needs n >= 2")
    if not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")

    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    blocks: list[frozenset[Edge]] = []
    stack: list[Edge] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    work = [(root, -1, iter(sorted(g.adj[root])))]
    while work:
        v, parent, it = work[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                stack.append(norm_edge(v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                work.append((w, v, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                stack.append(norm_edge(v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        work.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                comp = set()
                target = norm_edge(parent, v)
                while True:
                    e = stack.pop()
                    comp.add(e)
                    if e == target:
                        break
                blocks.append(frozenset(comp))
    if root_children > 1:
        cut.add(root)

    blocks.sort(key=lambda es: min(es))
    verts = tuple(frozenset(x for e in es for x in e) for es in blocks)
    return BlockDecomposition(verts, frozenset(cut), tuple(blocks))
