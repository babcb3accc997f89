"""Named graph families and their explicit pd-colorings.

Labeling conventions (subscripted names -> vertex labels):

* path / cycle / complete: v_i -> i-1.
* complete bipartite K_{m,n}: x_i -> i-1, y_j -> m+j-1.
* wheel W_n and fan F_{1,n}: hub v_0 -> 0, rim or path vertex v_i -> i.
* hypercube Q_d: bit strings as integers, adjacent when they differ in one bit.
* K_4 - e: v_i -> i-1 with e_{2,4} missing.
* F^-_{1,4}: path v_1..v_4 -> 0..3, extra vertex -> 4 joined to v_1, v_3, v_4.
* F^-_{1,5}: path v_1..v_5 -> 0..4, extra vertex -> 5 joined to v_1, v_2, v_4, v_5.
* F': cycle v_1..v_6 -> 0..5 plus chords v_1v_3, v_3v_5, v_1v_5.
* family D (wheel minus rim edges): labels as for W_n; rim edge i joins v_i
  and v_{i+1} (edge n joins v_n and v_1).
* extremal(n, k): a_1 -> 0, a_2 -> 1, b_j -> j+1 for j = 1..2k-3, pendants
  2k-1..n-1 attached to a_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .coloring import EdgeColoring, PdCertificate, CutWitness, restrict_coloring, verify_pd_coloring
from .graph import Graph, GraphError, induced_and_spanning_subgraph, is_connected, norm_edge
from .solver import SolveBudget, pd_exact, pd_is_one, proper_edge_coloring


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        return self.kind + (":" + ",".join(map(str, self.params)) if self.params else "")


@dataclass(frozen=True)
class ColoredFamily:
    """A graph with a coloring that verifies. ``claimed_pd`` is the exact pd
    when ``optimal`` is set, otherwise only an upper bound."""

    graph: Graph
    coloring: EdgeColoring
    claimed_pd: int
    labeling_doc: str
    certificate: PdCertificate
    optimal: bool = True


_ALIASES = {
    "p": "path", "c": "cycle", "k": "complete", "kn": "complete",
    "kmn": "complete_bipartite", "w": "wheel", "f": "fan", "q": "hypercube",
    "k4e": "k4_minus_e", "fminus14": "f_minus_14", "fminus15": "f_minus_15",
    "fprime": "f_prime", "dwheel": "wheel_minus_rim_edges",
}

_ARITY = {
    "path": (1, 1), "cycle": (1, 1), "complete": (1, 1), "complete_bipartite": (2, 2),
    "wheel": (1, 1), "fan": (1, 1), "hypercube": (1, 1), "k4_minus_e": (0, 0),
    "f_minus_14": (0, 0), "f_minus_15": (0, 0), "f_prime": (0, 0),
    "wheel_minus_rim_edges": (1, 64), "extremal": (2, 2),
}

FAMILY_KINDS = tuple(_ARITY)


def parse_family(text: str) -> FamilySpec:
    """Parse CLI syntax such as ``wheel:6``, ``kmn:3,5`` or ``extremal:8,3``."""
    name, _, rest = text.strip().partition(":")
    kind = _ALIASES.get(name.lower(), name.lower())
    if kind not in _ARITY:
        raise FamilyError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_KINDS)}")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise FamilyError(f"non-integer parameter in {text!r}") from None
    lo, hi = _ARITY[kind]
    if not lo <= len(params) <= hi:
        raise FamilyError(f"{kind} takes {lo if lo == hi else f'{lo}..{hi}'} parameter(s), got {len(params)}")
    return FamilySpec(kind, params)


# ------------------------------------------------------------------ graphs


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise FamilyError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def _rim_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i % n + 1) for i in range(1, n + 1)]


def wheel(n: int) -> Graph:
    if n < 3:
        raise FamilyError("wheel needs n >= 3")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + _rim_edges(n))


def fan(n: int) -> Graph:
    if n < 1:
        raise FamilyError("fan needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise FamilyError("hypercube needs dimension >= 1")
    return Graph.from_edges(1 << d, [(v, v | 1 << b) for v in range(1 << d) for b in range(d) if not v >> b & 1])


def k4_minus_e() -> Graph:
    return Graph.from_edges(4, [e for e in combinations(range(4), 2) if e != (1, 3)])


def f_minus_14() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 2), (4, 3)])


def f_minus_15() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 3), (5, 4)])


def f_prime() -> Graph:
    return Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (2, 4), (0, 4)])


def wheel_minus_rim_edges(n: int, deleted: Sequence[int]) -> Graph:
    """W_n with the rim edges numbered in ``deleted`` removed (1 <= t <= n-1 of them)."""
    if n < 3:
        raise FamilyError("wheel needs n >= 3")
    dset = set(deleted)
    if not dset or len(dset) != len(deleted) or not dset <= set(range(1, n + 1)):
        raise FamilyError(f"deleted rim edges must be distinct values in 1..{n}")
    if len(dset) > n - 1:
        raise FamilyError("at least one rim edge must remain")
    rim = [e for i, e in enumerate(_rim_edges(n), 1) if i not in dset]
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def extremal(n: int, k: int) -> Graph:
    """K_{2,2k-3} plus the edge a_1a_2 plus n-2k+1 pendant edges at a_1."""
    if k < 2 or k > math.ceil(n / 2) or n - 2 * k + 1 < 0:
        raise FamilyError(f"extremal(n, k) needs 2 <= k <= ceil(n/2); got n={n}, k={k}")
    b = list(range(2, 2 * k - 1))
    edges = [(0, 1)] + [(a, x) for a in (0, 1) for x in b] + [(0, p) for p in range(2 * k - 1, n)]
    return Graph.from_edges(n, edges)


def build_family(spec: FamilySpec) -> Graph:
    p = spec.params
    builders = {
        "path": lambda: path(*p),
        "cycle": lambda: cycle(*p),
        "complete": lambda: complete(*p),
        "complete_bipartite": lambda: complete_bipartite(*p),
        "wheel": lambda: wheel(*p),
        "fan": lambda: fan(*p),
        "hypercube": lambda: hypercube(*p),
        "k4_minus_e": k4_minus_e,
        "f_minus_14": f_minus_14,
        "f_minus_15": f_minus_15,
        "f_prime": f_prime,
        "wheel_minus_rim_edges": lambda: wheel_minus_rim_edges(p[0], p[1:]),
        "extremal": lambda: extremal(*p),
    }
    if spec.kind not in builders:
        raise FamilyError(f"unknown family {spec.kind!r}")
    return builders[spec.kind]()


# --------------------------------------------------------------- colorings


def _finish(g: Graph, colors: dict, k: int, claimed: int, doc: str, optimal: bool = True) -> ColoredFamily:
    coloring = EdgeColoring.from_mapping(g, colors, k)
    cert = verify_pd_coloring(coloring)
    if cert is None:
        raise AssertionError(f"constructed coloring for {doc} does not verify")
    return ColoredFamily(g, coloring, claimed, doc, cert, optimal)


def color_complete(n: int) -> ColoredFamily:
    """c(v_i v_j) = ((i + j - 1) mod ceil(n/2)) + 1."""
    if n < 2:
        raise FamilyError("K_n coloring needs n >= 2")
    a = math.ceil(n / 2)
    g = complete(n)
    colors = {(u, v): (u + 1 + v + 1 - 1) % a + 1 for u, v in g.edges}
    return _finish(g, colors, a, a, f"K_{n}: v_i -> i-1")


def color_complete_bipartite(m: int, n: int) -> ColoredFamily:
    """K_{n,n} modular coloring c(x_i y_j) = ((i + j - 1) mod ceil(n/2)) + 1
    restricted to the first m vertices of X. Stars get the all-ones coloring."""
    if not 1 <= m <= n:
        raise FamilyError(f"K_(m,n) coloring needs 1 <= m <= n, got m={m}, n={n}")
    g = complete_bipartite(m, n)
    doc = f"K_({m},{n}): x_i -> i-1, y_j -> {m}+j-1"
    if m == 1:
        return _finish(g, {e: 1 for e in g.edges}, 1, 1, doc)
    a = math.ceil(n / 2)
    colors = {(x, y): ((x + 1) + (y - m + 1) - 1) % a + 1 for x, y in g.edges}
    return _finish(g, colors, a, a, doc)


def wheel_colors(n: int) -> tuple[dict, int]:
    if n < 3:
        raise FamilyError("wheel needs n >= 3")
    colors: dict = {}
    if n % 3 == 0:
        for x in range(1, n + 1):
            colors[(0, x)] = 1
        for e in _rim_edges(n):
            colors[norm_edge(*e)] = 1
        for i in range(1, n // 3 + 1):
            colors[(0, 3 * i)] = 2
        for j in range(n // 3):
            colors[(1 + 3 * j, 2 + 3 * j)] = 2
        return colors, 2
    # proper 3-edge-coloring of the rim; rim edge i joins v_i and v_{i+1}
    rim = {i: (1 if i % 2 else 2) for i in range(1, n + 1)}
    if n % 2:
        rim[n] = 3
    for i, e in enumerate(_rim_edges(n), 1):
        colors[norm_edge(*e)] = rim[i]
    for i in range(1, n + 1):
        before = rim[n] if i == 1 else rim[i - 1]
        colors[(0, i)] = min({1, 2, 3} - {before, rim[i]})
    return colors, 3


def color_wheel(n: int) -> ColoredFamily:
    colors, k = wheel_colors(n)
    return _finish(wheel(n), colors, k, k, f"W_{n}: hub v_0 -> 0, rim v_i -> i")


def color_fan(n: int) -> ColoredFamily:
    """Embed F_{1,n} in W_{3*ceil(n/3)} and restrict that wheel's 2-coloring."""
    if n < 1:
        raise FamilyError("fan needs n >= 1")
    doc = f"F_(1,{n}): hub v_0 -> 0, path v_i -> i"
    g = fan(n)
    if n == 1:
        res = pd_exact(g)
        return _finish(g, {e: 1 for e in g.edges}, 1, res.value, doc)
    big = 3 * math.ceil(n / 3)
    colors, _ = wheel_colors(big)
    host = EdgeColoring.from_mapping(wheel(big), colors, 2)
    sub = induced_and_spanning_subgraph(host.graph, range(n + 1), [(1, big)] if big == n else [])
    assert sub.graph == g
    restricted = restrict_coloring(host, sub.graph, sub.label_map)
    return _finish(g, restricted.as_dict(), 2, 2, doc)


def color_pd_one(g: Graph) -> ColoredFamily:
    report = pd_is_one(g)
    if not report.holds:
        raise FamilyError(f"no matching cut separates pair {report.failing_pair}; pd > 1")
    return _finish(g, {e: 1 for e in g.edges}, 1, 1, "all edges colored 1")


def color_via_chromatic_index(g: Graph, budget: SolveBudget | None = None) -> ColoredFamily:
    """Proper chi'-edge-coloring with the last class merged into class 1."""
    if not is_connected(g) or g.n < 2:
        raise GraphError("needs a nontrivial connected graph")
    proper = proper_edge_coloring(g, budget)
    chi = proper.k
    doc = f"proper {chi}-edge-coloring, class {chi} merged into class 1"
    if chi == 1:
        return _finish(g, {e: 1 for e in g.edges}, 1, 1, "single edge, all ones", optimal=True)
    colors = {e: (1 if c == chi else c) for e, c in proper.as_dict().items()}
    return _finish(g, colors, chi - 1, chi - 1, doc, optimal=False)


def compose_matching_removal(
    g: Graph, matching: Sequence[Sequence[int]], component_colorings: Sequence[ColoredFamily]
) -> ColoredFamily:
    """Color g - M componentwise and give every matching edge one fresh color.

    ``component_colorings[i]`` must color the i-th component of g - M (ordered
    by smallest vertex), relabeled to 0..|C|-1 in increasing vertex order.
    The certificate follows the composition argument: the matching alone cuts
    pairs in different components; within a component the component's cut
    plus matching edges leaving the same side does the job.
    """
    if not is_connected(g):
        raise GraphError("composition needs a connected graph")
    M = [norm_edge(*e) for e in matching]
    for e in M:
        if not g.has_edge(*e):
            raise FamilyError(f"{e} is not an edge")
    ends = [x for e in M for x in e]
    if len(ends) != len(set(ends)):
        raise FamilyError("the given edge set is not a matching")
    rest = induced_and_spanning_subgraph(g, None, M).graph  # labels unchanged
    comps = _components(rest)
    if len(comps) != len(component_colorings):
        raise FamilyError(f"g - M has {len(comps)} components, got {len(component_colorings)} colorings")
    ell = max(cf.coloring.k for cf in component_colorings)
    colors: dict = {e: ell + 1 for e in M}
    subs = []
    for comp, cf in zip(comps, component_colorings):
        sub = induced_and_spanning_subgraph(rest, comp)
        if sub.graph != cf.graph:
            raise FamilyError(f"component {sorted(comp)} does not match its supplied coloring")
        inv = {new: old for old, new in sub.label_map.items()}
        for (a, b), c in cf.coloring.as_dict().items():
            colors[norm_edge(inv[a], inv[b])] = c
        subs.append((comp, inv, cf))
    k = ell + 1 if M else ell
    coloring = EdgeColoring.from_mapping(g, colors, k)

    where = {v: i for i, comp in enumerate(comps) for v in comp}
    witnesses = {}
    for u, v in combinations(range(g.n), 2):
        if where[u] != where[v]:
            side = frozenset(comps[where[u]])
        else:
            comp, inv, cf = subs[where[u]]
            lab = {old: new for new, old in inv.items()}
            w = cf.certificate.witnesses[tuple(sorted((lab[u], lab[v])))]
            side = frozenset(inv[x] for x in w.side)
        witnesses[(u, v)] = CutWitness(side, g.crossing_edges(side), (u, v) if u in side else (v, u))
    cert = PdCertificate(coloring, witnesses)
    if not cert.check():
        raise AssertionError("composition certificate failed to validate")
    return ColoredFamily(g, coloring, k, f"composition over a {len(M)}-edge matching", cert, optimal=False)


def _components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def color_extremal(n: int, k: int) -> ColoredFamily:
    """Block composition: the K_{2,2k-3} modular coloring with a_1a_2 in a
    fresh color k on the dense block, color 1 on every pendant edge."""
    g = extremal(n, k)
    nb = 2 * k - 3
    a = math.ceil(nb / 2)
    colors: dict = {(0, 1): k}
    for i, x in enumerate((0, 1), 1):
        for j in range(1, nb + 1):
            colors[norm_edge(x, j + 1)] = (i + j - 1) % a + 1
    for p in range(2 * k - 1, n):
        colors[(0, p)] = 1
    return _finish(g, colors, k, k, f"extremal({n},{k}): a_1 -> 0, a_2 -> 1, b_j -> j+1, pendants at 0")


def colored_family(spec: FamilySpec) -> ColoredFamily:
    """The explicit coloring attached to a family spec (CLI ``construct``)."""
    p = spec.params
    if spec.kind == "complete":
        return color_complete(*p)
    if spec.kind == "complete_bipartite":
        m, n = sorted(p)
        return color_complete_bipartite(m, n)
    if spec.kind == "wheel":
        return color_wheel(*p)
    if spec.kind == "fan":
        return color_fan(*p)
    if spec.kind == "extremal":
        return color_extremal(*p)
    g = build_family(spec)
    if spec.kind == "k4_minus_e":
        return _finish(g, {(0, 1): 1, (0, 2): 1, (2, 3): 1, (0, 3): 2, (1, 2): 2}, 2, 2, "K_4 - e: v_i -> i-1")
    if spec.kind == "f_prime":
        cols = {e: 1 for e in g.edges}
        cols.update({(0, 4): 2, (2, 3): 2, (1, 2): 2})
        return _finish(g, cols, 2, 2, "F': v_i -> i-1")
    if spec.kind in ("f_minus_14", "f_minus_15", "wheel_minus_rim_edges"):
        return _restrict_from_fan(g, spec)
    if spec.kind in ("path", "hypercube") or (spec.kind == "cycle" and p[0] >= 4):
        return color_pd_one(g)
    if spec.kind == "cycle":
        return _finish(g, {(0, 1): 1, (1, 2): 1, (0, 2): 2}, 2, 2, "C_3 = K_3")
    raise FamilyError(f"no explicit coloring for {spec}")


def _restrict_from_fan(g: Graph, spec: FamilySpec) -> ColoredFamily:
    """Subgraphs of fans inherit a 2-coloring from the host fan."""
    if spec.kind == "wheel_minus_rim_edges":
        n = spec.params[0]
        # walk the rim starting just past a deleted edge: every surviving rim
        # edge joins consecutive walk positions, i.e. lies on the fan's path
        start = spec.params[1] % n + 1
        walk = [(start - 1 + i) % n + 1 for i in range(n)]
        label = {0: 0, **{v: i + 1 for i, v in enumerate(walk)}}
        host = color_fan(n)
        doc = f"{spec}: labels as W_{n}, colors from F_(1,{n})"
    else:
        host = color_fan({"f_minus_14": 4, "f_minus_15": 5}[spec.kind])
        # the extra vertex plays the fan's hub; path vertices keep their order
        label = {g.n - 1: 0, **{i: i + 1 for i in range(g.n - 1)}}
        doc = f"{spec}: path v_i -> i-1, extra vertex -> {g.n - 1}; colors from the fan"
    colors = {e: host.coloring.color(label[e[0]], label[e[1]]) for e in g.edges}
    return _finish(g, colors, 2, 2, doc)
