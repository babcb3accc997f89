"""Exact engines: proper disconnection number, matching-cut decision and
chromatic index, all by exhaustive search with certificates."""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .coloring import EdgeColoring, PdCertificate, verify_pd_coloring
from .graph import Graph, GraphError, is_connected


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveBudget:
    max_colors: int = 6
    max_vertices: int = 10
    max_edges: int = 24
    node_limit: int = 20_000_000
    time_limit: float = 600.0

    def __post_init__(self) -> None:
        for name in ("max_colors", "max_vertices", "max_edges", "node_limit", "time_limit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget field {name} must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SolveBudget":
        """Defaults, then PROPERDISC_NODE_LIMIT / PROPERDISC_TIME_LIMIT, then overrides."""
        kw: dict = {}
        if "PROPERDISC_NODE_LIMIT" in os.environ:
            kw["node_limit"] = int(os.environ["PROPERDISC_NODE_LIMIT"])
        if "PROPERDISC_TIME_LIMIT" in os.environ:
            kw["time_limit"] = float(os.environ["PROPERDISC_TIME_LIMIT"])
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


class _Clock:
    def __init__(self, budget: SolveBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExceeded(f"node limit {self.budget.node_limit} exceeded")
        if self.nodes & 0x3FFF == 0 and self.elapsed > self.budget.time_limit:
            raise BudgetExceeded(f"time limit {self.budget.time_limit}s exceeded")

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _require_connected(g: Graph) -> None:
    if g.n < 2:
        raise GraphError("pd is undefined for trivial graph")
    if not is_connected(g):
        raise GraphError("pd is defined only for connected graphs")


# ------------------------------------------------------------------ bonds


def _connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            bit = 1 << w
            if mask & bit and not seen & bit:
                seen |= bit
                stack.append(w)
    return seen == mask


def bonds(g: Graph) -> list[int]:
    """Sides S (containing vertex 0) whose edge cut is minimal, i.e. both S
    and its complement induce connected subgraphs."""
    full = (1 << g.n) - 1
    out = []
    for rest in range(1 << (g.n - 1)):
        s = (rest << 1) | 1
        if s != full and _connected_mask(g, s) and _connected_mask(g, full & ~s):
            out.append(s)
    return out


def _edge_order(g: Graph) -> list[int]:
    """BFS over edges from a max-degree vertex, keeping incident edges together."""
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order: list[int] = []
    placed = set()
    seen_v = {root}
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in sorted(g.adj[v]):
            e = g.edge_index(v, w)
            if e not in placed:
                placed.add(e)
                order.append(e)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    return order


class _PdSearch:
    """Edge-by-edge coloring search with per-pair bookkeeping of still-viable bonds.

    A bond dies the moment two adjacent edges in it share a color; a pair
    with no live bond left can never be separated, so the branch is cut.
    Only fully decided conflicts kill a bond, so pruning is sound.
    """

    def __init__(self, g: Graph):
        self.g = g
        pairs = list(combinations(range(g.n), 2))
        self.pairs = pairs
        self.bond_sides = bonds(g)
        nb = len(self.bond_sides)
        self.pair_bonds: list[list[int]] = [[] for _ in pairs]
        self.bond_pairs: list[list[int]] = [[] for _ in range(nb)]
        for pi, (u, v) in enumerate(pairs):
            for bi, s in enumerate(self.bond_sides):
                if (s >> u & 1) != (s >> v & 1):
                    self.pair_bonds[pi].append(bi)
                    self.bond_pairs[bi].append(pi)

        self.order = _edge_order(g)
        rank = {e: i for i, e in enumerate(self.order)}
        # conflicts[e] lists (bond, f) with f earlier in the order, adjacent
        # to e, and both crossing the bond
        self.conflicts: list[list[tuple[int, int]]] = [[] for _ in range(g.m)]
        for bi, s in enumerate(self.bond_sides):
            crossing = [i for i, (a, b) in enumerate(g.edges) if (s >> a & 1) != (s >> b & 1)]
            for e, f in combinations(crossing, 2):
                if set(g.edges[e]) & set(g.edges[f]):
                    late, early = (e, f) if rank[e] > rank[f] else (f, e)
                    self.conflicts[late].append((bi, early))

    def solutions(self, k: int, clock: _Clock, canonical: bool = True) -> Iterator[tuple[int, ...]]:
        """Yield verifying colorings with at most k colors. With ``canonical``
        set, color classes appear in increasing order along the edge order, so
        each coloring is produced once up to permuting colors."""
        g = self.g
        m = g.m
        colors = [0] * m
        alive = [True] * len(self.bond_sides)
        count = [len(b) for b in self.pair_bonds]
        if any(c == 0 for c in count):
            return
        order = self.order
        conflicts = self.conflicts
        bond_pairs = self.bond_pairs

        def assign(e: int, c: int) -> list[int] | None:
            killed: list[int] = []
            for bi, f in conflicts[e]:
                if alive[bi] and colors[f] == c:
                    alive[bi] = False
                    killed.append(bi)
                    dead = False
                    for pi in bond_pairs[bi]:
                        count[pi] -= 1
                        if count[pi] == 0:
                            dead = True
                    if dead:
                        undo(killed)
                        return None
            colors[e] = c
            return killed

        def undo(killed: list[int]) -> None:
            for bi in killed:
                alive[bi] = True
                for pi in bond_pairs[bi]:
                    count[pi] += 1

        def rec(pos: int, used: int) -> Iterator[tuple[int, ...]]:
            clock.tick()
            if pos == m:
                yield tuple(colors)
                return
            e = order[pos]
            top = min(k, used + 1) if canonical else k
            for c in range(1, top + 1):
                killed = assign(e, c)
                if killed is None:
                    continue
                yield from rec(pos + 1, max(used, c))
                colors[e] = 0
                undo(killed)

        yield from rec(0, 0)

    def find(self, k: int, clock: _Clock) -> tuple[int, ...] | None:
        return next(self.solutions(k, clock), None)


def iter_pd_colorings(g: Graph, k: int, canonical: bool = False, budget: SolveBudget | None = None) -> Iterator[EdgeColoring]:
    """Every coloring with colors in 1..k that makes ``g`` proper disconnected."""
    _require_connected(g)
    clock = _Clock(budget or SolveBudget())
    for cols in _PdSearch(g).solutions(k, clock, canonical=canonical):
        yield EdgeColoring(g, cols, k)


# ------------------------------------------------------------------- pd


@dataclass(frozen=True)
class PdResult:
    """Outcome of :func:`pd_exact`. ``value`` is None when the budget ran out;
    ``lower``/``upper`` are then the certified bounds reached so far."""

    value: int | None
    certificate: PdCertificate | None
    lower: int
    upper: int
    lower_bound_trace: tuple[str, ...] = ()
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def describe(self) -> str:
        return str(self.value) if self.is_exact else f"unknown[{self.lower},{self.upper}]"


def pd_exact(g: Graph, budget: SolveBudget | None = None, use_bounds: bool = False) -> PdResult:
    """pd(g) by trying k = 1, 2, ... until some k-coloring verifies.

    With ``use_bounds`` the common-neighbor lower bound skips hopeless k and
    the constructive upper bound (chromatic index or complete-graph colorings)
    supplies the certificate at k = upper without searching there.
    """
    budget = budget or SolveBudget()
    _require_connected(g)
    if g.n > budget.max_vertices or g.m > budget.max_edges:
        raise BudgetExceeded(
            f"graph of order {g.n} and size {g.m} exceeds the budget "
            f"({budget.max_vertices} vertices, {budget.max_edges} edges)"
        )
    clock = _Clock(budget)
    trace: list[str] = []
    lo = 1
    # pd <= chi' - 1 <= Delta, and pd <= ceil(n/2)
    hi = max(1, min(g.max_degree, math.ceil(g.n / 2)))
    upper_cert: PdCertificate | None = None

    if use_bounds:
        from .bounds import constructive_upper_coloring, lower_bound_common_neighbors

        lb, pair = lower_bound_common_neighbors(g)
        if lb > 1:
            trace.append(f"k<{lb}: common-neighbor bound at pair {pair}")
        lo = lb
        upper_cert = verify_pd_coloring(constructive_upper_coloring(g))
        hi = upper_cert.coloring.k

    search = _PdSearch(g)
    k = lo
    try:
        while k < hi or (k == hi and upper_cert is None):
            if k > budget.max_colors:
                raise BudgetExceeded(f"color limit {budget.max_colors} exceeded")
            before = clock.nodes
            cols = search.find(k, clock)
            if cols is not None:
                cert = verify_pd_coloring(EdgeColoring(g, cols, k))
                assert cert is not None, "search produced a coloring that does not verify"
                return PdResult(k, cert, k, k, tuple(trace), clock.nodes, clock.elapsed)
            trace.append(f"k={k}: exhausted ({clock.nodes - before} nodes)")
            k += 1
    except BudgetExceeded as exc:
        trace.append(f"budget: {exc}")
        return PdResult(None, None, k, hi, tuple(trace), clock.nodes, clock.elapsed)
    return PdResult(hi, upper_cert, hi, hi, tuple(trace), clock.nodes, clock.elapsed)


# --------------------------------------------------------- matching cuts


@dataclass(frozen=True)
class MatchingCutReport:
    holds: bool
    witnesses: dict[tuple[int, int], frozenset[int]] = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None


def _is_matching_side(g: Graph, side: int) -> bool:
    for v in range(g.n):
        inside = side >> v & 1
        across = 0
        for w in g.adj[v]:
            if (side >> w & 1) != inside:
                across += 1
                if across > 1:
                    return False
    return True


def pd_is_one(g: Graph) -> MatchingCutReport:
    """Does every pair have a separating cut that is a matching? Witnesses are
    the side S (containing the smaller vertex) of the first such cut found."""
    _require_connected(g)
    full = (1 << g.n) - 1
    matching_sides = [s for s in range(1, full) if s & 1 and _is_matching_side(g, s)]
    witnesses = {}
    for u, v in combinations(range(g.n), 2):
        for s in matching_sides:
            if (s >> u & 1) != (s >> v & 1):
                side = s if s >> u & 1 else full & ~s
                witnesses[(u, v)] = frozenset(x for x in range(g.n) if side >> x & 1)
                break
        else:
            return MatchingCutReport(False, failing_pair=(u, v))
    return MatchingCutReport(True, witnesses)


# -------------------------------------------------------- chromatic index


def _proper_edge_coloring(g: Graph, k: int, clock: _Clock) -> tuple[int, ...] | None:
    if g.m > k * (g.n // 2):
        return None  # each color class is a matching
    order = _edge_order(g)
    colors = [0] * g.m
    at_vertex: list[set[int]] = [set() for _ in range(g.n)]

    def rec(pos: int, used: int) -> bool:
        clock.tick()
        if pos == g.m:
            return True
        e = order[pos]
        u, v = g.edges[e]
        for c in range(1, min(k, used + 1) + 1):
            if c in at_vertex[u] or c in at_vertex[v]:
                continue
            colors[e] = c
            at_vertex[u].add(c)
            at_vertex[v].add(c)
            if rec(pos + 1, max(used, c)):
                return True
            at_vertex[u].discard(c)
            at_vertex[v].discard(c)
        colors[e] = 0
        return False

    return tuple(colors) if rec(0, 0) else None


def proper_edge_coloring(g: Graph, budget: SolveBudget | None = None) -> EdgeColoring:
    """A proper edge coloring with exactly chi'(g) colors."""
    if g.m == 0:
        raise GraphError("chromatic index needs at least one edge")
    clock = _Clock(budget or SolveBudget())
    delta = g.max_degree
    for k in (delta, delta + 1):
        cols = _proper_edge_coloring(g, k, clock)
        if cols is not None:
            return EdgeColoring(g, cols, k)
    raise AssertionError("Vizing's theorem guarantees a (Delta+1)-edge-coloring")


def chromatic_index(g: Graph, budget: SolveBudget | None = None) -> int:
    return proper_edge_coloring(g, budget).k


def is_proper_edge_coloring(coloring: EdgeColoring) -> bool:
    seen: set[tuple[int, int]] = set()
    for (u, v), c in zip(coloring.graph.edges, coloring.colors):
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True

