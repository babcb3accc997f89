"""Exhaustive theorem checks over all connected graphs of a given order."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

from .bounds import (
    block_pd_values,
    classify_diameter2_outerplanar,
    compose_blocks,
    is_outerplanar,
    lower_bound_common_neighbors,
)
from .canon import canonical_key, enumerate_connected_graphs
from .families import color_extremal, color_via_chromatic_index
from .graph import (
    Graph,
    block_decomposition,
    diameter,
    emit_graph6,
    induced_and_spanning_subgraph,
    is_connected,
    is_triangle_free,
)
from .solver import SolveBudget, chromatic_index, pd_exact, pd_is_one


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    anchor: str
    passed: bool | None  # None: skipped (pd unknown)
    detail: str = ""

    def render(self) -> str:
        status = "skip" if self.passed is None else ("pass" if self.passed else "FAIL")
        return f"{self.name}={status}" + (f"({self.detail})" if self.detail and not self.passed else "")


@dataclass(frozen=True)
class ReportRow:
    graph_id: str
    n: int
    m: int
    pd: str
    chi_prime: int
    delta: int
    diameter: int
    triangle_free: bool
    outerplanar: bool
    pd_one_matching_cuts: bool
    diam2_class: str
    checks: tuple[CheckOutcome, ...]

    @property
    def pd_value(self) -> int | None:
        return int(self.pd) if self.pd.isdigit() else None

    @property
    def failed(self) -> list[CheckOutcome]:
        return [c for c in self.checks if c.passed is False]

    @property
    def exhausted(self) -> bool:
        return self.pd_value is None

    def as_json(self) -> dict:
        d = asdict(self)
        d["checks"] = [asdict(c) for c in self.checks]
        return d


TSV_COLUMNS = (
    "graph6", "n", "m", "pd", "chi_prime", "delta", "diameter",
    "triangle_free", "outerplanar", "pd_one_matching_cuts", "diam2_class", "checks",
)


def row_to_tsv(row: ReportRow) -> str:
    fields = [
        row.graph_id, row.n, row.m, row.pd, row.chi_prime, row.delta, row.diameter,
        int(row.triangle_free), int(row.outerplanar), int(row.pd_one_matching_cuts),
        row.diam2_class, ";".join(c.render() for c in row.checks),
    ]
    return "\t".join(map(str, fields))


_pd_memo: dict[tuple[int, int], int | None] = {}


def _pd_cached(g: Graph, budget: SolveBudget) -> int | None:
    key = canonical_key(g)
    if key not in _pd_memo:
        _pd_memo[key] = pd_exact(g, budget).value
    return _pd_memo[key]


def census_row(g: Graph, budget: SolveBudget | None = None) -> ReportRow:
    """Solve g exactly and run every applicable theorem check on it."""
    budget = budget or SolveBudget()
    res = pd_exact(g, budget)
    pd = res.value
    chi = chromatic_index(g, budget)
    diam = diameter(g)
    tf = is_triangle_free(g)
    op = is_outerplanar(g).outerplanar
    mc = pd_is_one(g)
    checks: list[CheckOutcome] = []

    def add(name: str, anchor: str, ok: bool | None, detail: str = "") -> None:
        checks.append(CheckOutcome(name, anchor, ok, detail))

    known = pd is not None
    lb, pair = lower_bound_common_neighbors(g)
    add("common_neighbor_bound", "pd >= ceil(t/2) (+1 if adjacent)",
        lb <= pd if known else None, f"pair {pair}: bound {lb} > pd {pd}")
    ub = min(max(chi - 1, 1), math.ceil(g.n / 2))
    add("upper_bound", "pd <= min(chi'-1, ceil(n/2))",
        pd <= ub if known else None, f"pd {pd} > bound {ub}")
    add("matching_cut_equivalence", "pd = 1 iff every pair has a matching cut",
        (pd == 1) == mc.holds if known else None,
        f"pd {pd}, matching cuts {'hold' if mc.holds else f'fail at pair {mc.failing_pair}'}")

    dec = block_decomposition(g)
    if len(dec.blocks) > 1:
        try:
            composed = compose_blocks(g, block_pd_values(g, budget), dec)
            ok = composed == pd if known else None
        except RuntimeError:
            composed, ok = None, None
        add("block_maximum", "pd(G) = max pd(block)", ok, f"blocks give {composed}, pd {pd}")

    if op:
        add("outerplanar_triangle_free", "outerplanar: pd = 1 iff triangle-free",
            (pd == 1) == tf if known else None, f"pd {pd}, triangle-free {tf}")
    d2 = ""
    if op and diam == 2:
        d2 = classify_diameter2_outerplanar(g, check_preconditions=False).classification
        add("diameter2_classification", "outerplanar diameter 2: pd = 2 iff named class",
            (pd == 2) == (d2 != "other") if known else None, f"pd {pd}, class {d2}")

    if chi >= 2:
        try:
            cf = color_via_chromatic_index(g, budget)
            ok, detail = cf.coloring.k == chi - 1, ""
        except AssertionError as exc:
            ok, detail = False, str(exc)
        add("chromatic_construction", "merged chi'-coloring is a pd-coloring", ok, detail)

    if known:
        worst = None
        for e in g.edges:
            h = induced_and_spanning_subgraph(g, None, [e]).graph
            if is_connected(h):
                v = _pd_cached(h, budget)
                if v is not None and v > pd:
                    worst = f"pd(G - {e}) = {v} > {pd}"
                    break
        if worst is None and g.n > 2:
            for x in range(g.n):
                h = induced_and_spanning_subgraph(g, [y for y in range(g.n) if y != x]).graph
                if is_connected(h):
                    v = _pd_cached(h, budget)
                    if v is not None and v > pd:
                        worst = f"pd(G - vertex {x}) = {v} > {pd}"
                        break
        add("subgraph_monotonicity", "pd(H) <= pd(G) for connected subgraphs H", worst is None, worst or "")
    else:
        add("subgraph_monotonicity", "pd(H) <= pd(G) for connected subgraphs H", None)

    return ReportRow(
        graph_id=emit_graph6(g), n=g.n, m=g.m, pd=res.describe(), chi_prime=chi,
        delta=g.max_degree, diameter=diam, triangle_free=tf, outerplanar=op,
        pd_one_matching_cuts=mc.holds, diam2_class=d2, checks=tuple(checks),
    )


def _row_worker(args: tuple[Graph, SolveBudget]) -> ReportRow:
    return census_row(*args)


def run_census(graphs: Sequence[Graph], budget: SolveBudget | None = None, jobs: int = 1) -> list[ReportRow]:
    """Rows in input order regardless of ``jobs``."""
    budget = budget or SolveBudget()
    work = [(g, budget) for g in graphs]
    if jobs <= 1:
        return [_row_worker(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_worker, work, chunksize=max(1, len(work) // (4 * jobs))))


def census(n: int, budget: SolveBudget | None = None, jobs: int = 1) -> list[ReportRow]:
    return run_census(list(enumerate_connected_graphs(n)), budget, jobs)


# ---------------------------------------------------------------- extremal


def expected_min_size(n: int, k: int) -> int:
    return n - 1 if k == 1 else n + 2 * k - 4


@dataclass(frozen=True)
class ExtremalRow:
    n: int
    k: int
    min_size: int | None
    expected: int
    witnesses: tuple[str, ...]
    construction: str | None
    construction_pd: int | None

    @property
    def passed(self) -> bool:
        ok = self.min_size == self.expected
        if self.k >= 2:
            ok = ok and self.construction_pd == self.k
        return ok


def extremal_min_size_census(n: int, k: int, rows: Sequence[ReportRow] | None = None,
                             budget: SolveBudget | None = None) -> ExtremalRow:
    """Smallest size among connected order-n graphs with pd = k, all graphs
    of that size listed as witnesses, next to the formula and the explicit
    extremal construction."""
    if not 1 <= k <= math.ceil(n / 2):
        raise ValueError(f"need 1 <= k <= ceil(n/2), got n={n}, k={k}")
    budget = budget or SolveBudget()
    if rows is None:
        table = [(emit_graph6(g), g.m, pd_exact(g, budget).value) for g in enumerate_connected_graphs(n)]
    else:
        table = [(r.graph_id, r.m, r.pd_value) for r in rows]
    if any(v is None for _, _, v in table):
        raise RuntimeError("budget exhausted during the extremal census")
    sizes = [m for _, m, v in table if v == k]
    best = min(sizes) if sizes else None
    witnesses = tuple(gid for gid, m, v in table if v == k and m == best)
    cons, cons_pd = None, None
    if k >= 2:
        cf = color_extremal(n, k)
        cons = emit_graph6(cf.graph)
        if cf.graph.m == expected_min_size(n, k):
            cons_pd = pd_exact(cf.graph, budget).value
    return ExtremalRow(n, k, best, expected_min_size(n, k), witnesses, cons, cons_pd)
