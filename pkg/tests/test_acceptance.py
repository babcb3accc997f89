"""Acceptance criteria 1-10, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected and repeated in the pytest terminal summary (see conftest.py).
Run standalone with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import sys
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_is_pd_coloring, brute_separable, random_connected_graph  # noqa: E402
from properdisc import families as fam  # noqa: E402
from properdisc.bounds import (  # noqa: E402
    block_pd_values,
    classify_diameter2_outerplanar,
    compose_blocks,
    is_outerplanar,
    lower_bound_common_neighbors,
)
from properdisc.canon import enumerate_connected_graphs  # noqa: E402
from properdisc.census import extremal_min_size_census  # noqa: E402
from properdisc.cli import main as cli_main  # noqa: E402
from properdisc.coloring import EdgeColoring, find_proper_cut, verify_pd_coloring  # noqa: E402
from properdisc.graph import block_decomposition, diameter, emit_graph6, is_triangle_free  # noqa: E402
from properdisc.solver import chromatic_index, pd_exact, pd_is_one  # noqa: E402

REPORT: list[str] = []


def report(num: int, title: str, failures: list[str], detail: str) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {num:>2}: {title} ({detail})"
    if failures:
        line += f"; first failure: {failures[0]}"
    REPORT.append(line)
    print(line)
    assert not failures, line


@lru_cache(maxsize=None)
def graphs(n: int):
    return tuple(enumerate_connected_graphs(n))


_pd: dict[str, int] = {}


def pd(g) -> int:
    key = emit_graph6(g)
    if key not in _pd:
        res = pd_exact(g)
        assert res.is_exact, f"budget exhausted on {key}"
        _pd[key] = res.value
    return _pd[key]


def small_graphs(max_n: int = 6):
    for n in range(2, max_n + 1):
        yield from graphs(n)


# ------------------------------------------------------------------ 1


def test_criterion_01_family_formulas():
    cases = []
    for n in range(2, 8):
        cases += [(f"tree {emit_graph6(g)}", g, 1) for g in graphs(n) if g.m == n - 1]
    cases.append(("C_3", fam.cycle(3), 2))
    cases += [(f"C_{n}", fam.cycle(n), 1) for n in range(4, 9)]
    cases += [(f"K_{n}", fam.complete(n), math.ceil(n / 2)) for n in range(2, 7)]
    cases += [(f"K_{n},{n}", fam.complete_bipartite(n, n), math.ceil(n / 2)) for n in (2, 3)]
    cases += [
        (f"K_{m},{n}", fam.complete_bipartite(m, n), math.ceil(n / 2))
        for m in range(2, 5) for n in range(m, 5)
    ]
    cases += [(f"W_{n}", fam.wheel(n), 2 if n % 3 == 0 else 3) for n in range(3, 7)]
    cases += [(f"F_1,{n}", fam.fan(n), 2) for n in range(2, 7)]
    cases += [("Q_3", fam.hypercube(3), 1), ("K_4-e", fam.k4_minus_e(), 2)]
    failures = [f"{name}: pd {pd(g)} != {want}" for name, g, want in cases if pd(g) != want]
    report(1, "family formulas", failures, f"{len(cases)} instances")


# ------------------------------------------------------------------ 2


def test_criterion_02_constructive_colorings():
    built = []
    for n in range(2, 8):
        built += [fam.color_pd_one(g) for g in graphs(n) if g.m == n - 1]
    built.append(fam.colored_family(fam.parse_family("c:3")))
    built += [fam.color_pd_one(fam.cycle(n)) for n in range(4, 9)]
    built += [fam.color_complete(n) for n in range(2, 8)]
    built += [fam.color_complete_bipartite(m, n) for m in range(2, 5) for n in range(m, 5)]
    built += [fam.color_wheel(n) for n in range(3, 10)]
    built += [fam.color_fan(n) for n in range(2, 10)]
    built += [fam.color_pd_one(fam.hypercube(3))]
    built += [fam.colored_family(fam.parse_family(s)) for s in ("k4e", "fprime", "fminus14", "fminus15")]
    built += [fam.color_extremal(n, k) for n in range(4, 9) for k in range(2, math.ceil(n / 2) + 1)]
    failures, confirmed = [], 0
    for cf in built:
        name = f"{cf.labeling_doc} [{emit_graph6(cf.graph)}]"
        if not cf.certificate.check() or verify_pd_coloring(cf.coloring) is None:
            failures.append(f"{name}: coloring does not verify")
        if cf.coloring.num_used != cf.claimed_pd or cf.coloring.k != cf.claimed_pd:
            failures.append(f"{name}: uses {cf.coloring.num_used} colors, claims {cf.claimed_pd}")
        if cf.graph.n <= 7:
            confirmed += 1
            if pd(cf.graph) != cf.claimed_pd:
                failures.append(f"{name}: pd_exact {pd(cf.graph)} != claimed {cf.claimed_pd}")
    report(2, "constructive colorings", failures, f"{len(built)} colorings, {confirmed} confirmed optimal")


# ------------------------------------------------------------------ 3


def test_criterion_03_matching_cut_equivalence():
    failures, total = [], 0
    for n in range(2, 8):  # includes all 853 graphs of order 7
        for g in graphs(n):
            total += 1
            if (pd(g) == 1) != pd_is_one(g).holds:
                failures.append(f"{emit_graph6(g)}: pd {pd(g)}, matching condition {pd_is_one(g).holds}")
    report(3, "pd = 1 iff every pair has a matching cut", failures, f"{total} graphs, n <= 7")


# ------------------------------------------------------------------ 4


def test_criterion_04_bound_chain():
    failures, total = [], 0
    for g in small_graphs(6):
        total += 1
        lb, _ = lower_bound_common_neighbors(g)
        ub = min(max(chromatic_index(g) - 1, 1), math.ceil(g.n / 2))
        if not lb <= pd(g) <= ub:
            failures.append(f"{emit_graph6(g)}: {lb} <= {pd(g)} <= {ub} fails")
    report(4, "common-neighbor bound <= pd <= min(max(chi'-1,1), ceil(n/2))", failures, f"{total} graphs")


# ------------------------------------------------------------------ 5


def test_criterion_05_block_composition():
    failures, total = [], 0
    for g in small_graphs(6):
        dec = block_decomposition(g)
        if len(dec.blocks) < 2:
            continue
        total += 1
        composed = compose_blocks(g, block_pd_values(g), dec)
        if composed != pd(g):
            failures.append(f"{emit_graph6(g)}: blocks give {composed}, pd {pd(g)}")
    report(5, "pd = max over blocks", failures, f"{total} graphs with a cut vertex")


# ------------------------------------------------------------------ 6


def test_criterion_06_outerplanar_theorems():
    failures, op_total, d2_total = [], 0, 0
    for g in small_graphs(6):
        if is_outerplanar(g).outerplanar:
            op_total += 1
            if (pd(g) == 1) != is_triangle_free(g):
                failures.append(f"{emit_graph6(g)}: pd {pd(g)}, triangle-free {is_triangle_free(g)}")
    for g in small_graphs(7):
        if diameter(g) != 2 or not is_outerplanar(g).outerplanar:
            continue
        d2_total += 1
        cls = classify_diameter2_outerplanar(g, check_preconditions=False).classification
        if (pd(g) == 2) != (cls != "other"):
            failures.append(f"{emit_graph6(g)}: pd {pd(g)}, class {cls}")
    report(6, "outerplanar: pd=1 iff triangle-free; diameter 2: pd=2 iff named class", failures,
           f"{op_total} outerplanar n<=6, {d2_total} diameter-2 n<=7")


# ------------------------------------------------------------------ 7


def test_criterion_07_extremal_sizes():
    failures, rows = [], []
    for n, k in [(5, 1), (5, 2), (6, 1), (6, 2), (6, 3)]:
        row = extremal_min_size_census(n, k)
        rows.append(f"n={n},k={k}:{row.min_size}")
        if not row.passed:
            failures.append(f"n={n} k={k}: min {row.min_size}, expected {row.expected}, "
                            f"construction pd {row.construction_pd}")
    report(7, "minimum size n-1 (k=1), n+2k-4 (k>=2)", failures, ", ".join(rows))


# ------------------------------------------------------------------ 8


def test_criterion_08_k4_minus_e_structure():
    g = fam.k4_minus_e()  # vertices 0..3, edge (1, 3) missing
    opposite = [((0, 1), (2, 3)), ((0, 3), (1, 2))]
    verifying, failures = 0, []
    for cols in product((1, 2), repeat=g.m):
        c = EdgeColoring(g, cols, 2)
        if verify_pd_coloring(c) is None:
            continue
        verifying += 1
        if not brute_is_pd_coloring(g, c.as_dict()):
            failures.append(f"{cols}: verifier and edge-subset oracle disagree")
        for e, f in opposite:
            if c.color(*e) != c.color(*f):
                failures.append(f"{cols}: {e} and {f} differ")
    if verifying == 0:
        failures.append("no verifying 2-coloring found")
    report(8, "K_4-e: opposite edges share a color in every 2-pd-coloring", failures,
           f"{verifying} of {2 ** g.m} colorings verify")


# ------------------------------------------------------------------ 9


def test_criterion_09_proper_cut_oracle():
    rng = random.Random(1234)
    failures, instances = [], 1200
    for _ in range(instances):
        g = random_connected_graph(rng, rng.randint(2, 6))
        k = rng.randint(1, 3)
        colors = {e: rng.randint(1, k) for e in g.edges}
        u, v = rng.sample(range(g.n), 2)
        got = find_proper_cut(EdgeColoring.from_mapping(g, colors, k), u, v) is not None
        if got != brute_separable(g, colors, u, v):
            failures.append(f"{emit_graph6(g)} {colors} pair {(u, v)}")
    report(9, "find_proper_cut agrees with edge-subset brute force", failures, f"{instances} instances")


# ------------------------------------------------------------------ 10


def test_criterion_10_determinism(tmp_path):
    outputs = {}
    for jobs in (1, 2, 3):
        for fmt in ("tsv", "json"):
            path = tmp_path / f"census_{jobs}.{fmt}"
            code = cli_main(["census", "--n", "6", "--jobs", str(jobs), "--format", fmt, "--output", str(path)])
            assert code == 0
            outputs[(jobs, fmt)] = path.read_bytes()
    failures = [
        f"jobs={j} {fmt} differs from jobs=1"
        for (j, fmt), data in outputs.items() if data != outputs[(1, fmt)]
    ]
    report(10, "census byte-identical across parallelism", failures, "n=6, jobs 1/2/3, tsv and json")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
