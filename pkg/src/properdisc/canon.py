"""Canonical labeling, isomorphism testing and orderly enumeration of small
connected graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, emit_graph6, relabel

MAX_CANON_ORDER = 10
MAX_ENUM_ORDER = 7

# connected graphs on n unlabeled vertices, n = 1..7
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into every cell
    until stable. Split pieces are ordered by their count signature, which is
    label-invariant."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        where = {}
        for i, c in enumerate(cells):
            for v in c:
                where[v] = i
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = [0] * len(cells)
                for w in g.adj[v]:
                    sig[where[w]] += 1
                groups.setdefault(tuple(sig), []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
    return cells


def _code(g: Graph, order: list[int]) -> int:
    """Adjacency bitstring of ``g`` when vertex order[i] is placed at position i."""
    pos = {v: i for i, v in enumerate(order)}
    code = 0
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        code |= 1 << (b * (b - 1) // 2 + a)
    return code


def _twin_classes(g: Graph, cell: list[int]) -> list[int]:
    """One representative per class of interchangeable vertices in ``cell``
    (true or false twins are swapped by an automorphism)."""
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if g.adj[v] - {r} == g.adj[r] - {v}:
                break
        else:
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """Vertex order giving the minimum adjacency code over the
    individualization-refinement search tree."""
    if g.n > MAX_CANON_ORDER:
        raise ValueError(f"canonical labeling is limited to n <= {MAX_CANON_ORDER}")
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in _twin_classes(g, cell):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    start: dict[int, list[int]] = {}
    for v in range(g.n):
        start.setdefault(g.degree(v), []).append(v)
    search([start[d] for d in sorted(start)] if g.n else [])
    return best[1] or []


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    return (g.n, _code(g, canonical_order(g)))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    return canonical_key(g1) == canonical_key(g2)


def isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """A vertex map g1 -> g2 preserving edges, or None."""
    if not are_isomorphic(g1, g2):
        return None
    o1, o2 = canonical_order(g1), canonical_order(g2)
    return {a: b for a, b in zip(o1, o2)}


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    found: dict[tuple[int, int], Graph] = {}
    # every connected graph has a vertex whose deletion leaves it connected
    for h in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            edges = list(h.edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            g = Graph.from_edges(n, edges)
            key = canonical_key(g)
            if key not in found:
                found[key] = canonical_form(g)
    return tuple(sorted(found.values(), key=lambda g: (g.m, emit_graph6(g))))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class of
    connected graphs of order n, ordered by (size, graph6)."""
    if not 2 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUM_ORDER}, got {n}")
    yield from _connected_classes(n)
