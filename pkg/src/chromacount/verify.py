"""Orderly enumeration of small graphs and the exhaustive verification suites.

The headline check walks every connected 4-chromatic graph up to a vertex
budget, compares its exact colouring counts against the clique-with-trees
bound, and classifies the equality cases.  The lemma suites bundle the
supporting inequalities (subgraph and decomposition bounds, cycle and theta
closed forms, compressions, Kempe swaps, small extremal forms) into one
report per topic.  All randomized sections run from fixed seeds, so reports
are reproducible byte for byte.
"""

from __future__ import annotations

import hashlib
import itertools
import random
import time
from fractions import Fraction
from multiprocessing import get_context
from typing import Iterable, Sequence

from .chromatic import (
    chromatic_polynomial,
    closed_form_cycle,
    count_colourings,
    path_fixed_endpoints,
    shift_to_q,
    theta_polynomial,
    tomescu_bound,
)
from .graphs import (
    Graph,
    _bits,
    _colourable,
    add_vertex,
    bipartition,
    canonical_form,
    chromatic_number,
    emit_graph6,
    induced_subgraph,
    is_2_induced,
    is_biconnected,
    is_connected,
    is_cycle_graph,
    is_edge_critical,
    is_triangle_free,
    is_vertex_critical,
    leaf_pruned_core,
    make_complete_bipartite,
    make_cycle,
    make_k4_with_trees,
    make_path,
    min_degree,
    parse_graph6,
)
from .listcolor import (
    ListAssignment,
    closed_form_check,
    compress,
    compression_fixpoint,
    count_list_colourings,
    enumerate_list_colourings,
    extremal_assignment,
    is_proper_colouring,
    kempe_swap_map,
    respects_lists,
)
from .polynomials import IntPolynomial
from .report import VerificationReport

ENUM_CAP = 9
ENUM_CAP_LONG = 10

_RNG_SEED = 0x5EED

_ENUM_CACHE: dict[tuple[int, bool, bool], tuple[Graph, ...]] = {}


# ---------------------------------------------------------------------------
# Enumeration by vertex augmentation with canonical deduplication
# ---------------------------------------------------------------------------


def enumerate_connected(
    n: int, *, triangle_free: bool = False, allow_long: bool = False
) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Level-by-level augmentation: every connected graph on k+1 vertices arises
    from a connected graph on k vertices by adding one vertex with a nonempty
    neighbourhood, so attaching all nonempty subsets to all level-k classes
    and deduplicating by canonical form is exhaustive.  With
    ``triangle_free=True`` only independent neighbourhoods are attached and
    only triangle-free parents are kept, which is again exhaustive for the
    triangle-free classes.  Results are sorted by canonical form.
    """
    return list(_enumerate_level(n, True, triangle_free, allow_long))


def enumerate_graphs(
    n: int, *, connected: bool = True, allow_long: bool = False
) -> list[Graph]:
    """Representatives of all (or all connected) graph classes on n vertices."""
    return list(_enumerate_level(n, connected, False, allow_long))


def _enumerate_level(
    n: int, connected: bool, triangle_free: bool, allow_long: bool
) -> tuple[Graph, ...]:
    cap = ENUM_CAP_LONG if allow_long else ENUM_CAP
    if not 1 <= n <= cap:
        raise ValueError(
            f"enumeration supports 1 <= n <= {ENUM_CAP}"
            f" ({ENUM_CAP_LONG} with the long-runtime flag)"
        )
    key = (n, connected, triangle_free)
    cached = _ENUM_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        level: tuple[Graph, ...] = (Graph(1, (0,)),)
    else:
        parents = _enumerate_level(n - 1, connected, triangle_free, allow_long)
        seen: dict[bytes, Graph] = {}
        low = 1 if connected else 0
        for g in parents:
            for mask in range(low, 1 << g.n):
                if triangle_free and not _independent_mask(g, mask):
                    continue
                child = add_vertex(g, mask)
                child_key = canonical_form(child)
                if child_key not in seen:
                    seen[child_key] = child
        level = tuple(seen[k] for k in sorted(seen))
    _ENUM_CACHE[key] = level
    return level


def _independent_mask(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in _bits(mask))


def _is_four_chromatic(g: Graph) -> bool:
    return not _colourable(g, 3) and _colourable(g, 4)


# ---------------------------------------------------------------------------
# The equality class of the main bound
# ---------------------------------------------------------------------------


def is_k4_with_trees(g: Graph) -> bool:
    """True iff repeatedly stripping leaves reduces the graph to K4."""
    if not is_connected(g):
        raise ValueError("defined for connected graphs")
    core = leaf_pruned_core(g)
    return core is not None and core.n == 4 and core.edge_count == 6


def groetzsch_graph() -> Graph:
    """The 11-vertex triangle-free 4-chromatic graph (Mycielski construction
    applied to the 5-cycle); positive control for the triangle-free floor."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i + 4) % 5))
        edges.append((10, 5 + i))
    return Graph.from_edges(11, edges)


# ---------------------------------------------------------------------------
# Main theorem verification
# ---------------------------------------------------------------------------


def _theorem_chunk(args: tuple[list[str], tuple[int, ...]]) -> list[dict]:
    lines, xs = args
    out = []
    for g6 in lines:
        g = parse_graph6(g6)
        p = chromatic_polynomial(g)
        out.append(
            {
                "g6": g6,
                "n": g.n,
                "key": canonical_form(g).hex(),
                "values": [p(x) for x in xs],
                "k4tree": is_k4_with_trees(g),
            }
        )
    return out


def verify_theorem_main(
    n_max: int, x_set: Iterable[int], workers: int = 1
) -> VerificationReport:
    """Check the clique-with-trees bound over every connected 4-chromatic
    graph with at most n_max vertices, at every x in x_set.

    Violations record any count exceeding the bound.  Equality witnesses must
    coincide exactly with the graphs whose leaf-pruned core is K4, and a
    witness must meet the bound at every tested x, not just one; both failure
    modes are reported as violations.  All comparisons are exact integers.
    """
    if n_max > ENUM_CAP:
        raise ValueError(f"n_max capped at {ENUM_CAP}")
    xs = tuple(sorted(set(x_set)))
    if not xs or any(x < 4 or x > 10 for x in xs):
        raise ValueError("x_set must be a nonempty subset of {4,...,10}")
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"colouring-count bound, connected 4-chromatic graphs, "
        f"n <= {n_max}, x in {list(xs)}"
    )
    counts: dict[str, dict] = {}
    candidates: list[str] = []
    for n in range(1, n_max + 1):
        graphs = enumerate_connected(n)
        four = [g for g in graphs if n >= 4 and _is_four_chromatic(g)]
        counts[str(n)] = {"connected": len(graphs), "four_chromatic": len(four)}
        candidates.extend(emit_graph6(g) for g in four)

    records = _run_chunked(_theorem_chunk, candidates, xs, workers)
    records.sort(key=lambda r: (r["n"], r["key"]))
    for rec in records:
        n = rec["n"]
        bounds = [tomescu_bound(4, n, x) for x in xs]
        eq = [v == b for v, b in zip(rec["values"], bounds)]
        for x, v, b in zip(xs, rec["values"], bounds):
            if v > b:
                report.violations.append(
                    {"graph6": rec["g6"], "x": x, "lhs": str(v), "rhs": str(b)}
                )
        if any(eq):
            report.equality_witnesses.append(rec["g6"])
            if not all(eq):
                report.violations.append(
                    {
                        "graph6": rec["g6"],
                        "kind": "equality not uniform across x",
                        "x": [x for x, e in zip(xs, eq) if not e],
                    }
                )
        if any(eq) != rec["k4tree"]:
            report.violations.append(
                {
                    "graph6": rec["g6"],
                    "kind": "equality class mismatch",
                    "attains_bound": any(eq),
                    "leaf_core_is_k4": rec["k4tree"],
                }
            )
    report.instances_checked = len(records) * len(xs)
    report.details = {"counts_per_n": counts, "x_set": list(xs)}
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _run_chunked(worker, lines: list[str], xs: tuple, workers: int) -> list[dict]:
    """Deterministic parallel map: work is split by a stable content hash and
    re-merged; the caller sorts, so results do not depend on scheduling."""
    if workers <= 1 or len(lines) < 64:
        return worker((lines, xs))
    nchunks = workers * 4
    chunks: list[list[str]] = [[] for _ in range(nchunks)]
    for line in lines:
        digest = hashlib.sha256(line.encode("ascii")).digest()
        chunks[int.from_bytes(digest[:4], "big") % nchunks].append(line)
    ctx = get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        parts = pool.map(worker, [(chunk, xs) for chunk in chunks if chunk])
    return [rec for part in parts for rec in part]


# ---------------------------------------------------------------------------
# 4-critical graphs: census and the 2-induced counting claim
# ---------------------------------------------------------------------------


def _four_critical_graphs(n_max: int, *, edge_critical: bool = False) -> list[Graph]:
    if n_max > 8:
        raise ValueError("the critical census is capped at 8 vertices")
    out = []
    for n in range(4, n_max + 1):
        for g in enumerate_connected(n):
            if not (_is_four_chromatic(g) and is_vertex_critical(g, 4)):
                continue
            if edge_critical and not is_edge_critical(g, 4):
                continue
            out.append(g)
    return out


def four_critical_census(n_max: int) -> list[str]:
    """The fully critical 4-chromatic graphs on at most n_max vertices, as
    graph6 strings sorted by (order, canonical form).

    Members are both vertex- and edge-critical.  Vertex-criticality alone is
    strictly weaker: on up to 7 vertices it admits nine graphs, while the
    edge-critical refinement leaves exactly four (K4, the 5-wheel, and two
    7-vertex graphs, one of them the Moser spindle).
    """
    graphs = _four_critical_graphs(n_max, edge_critical=True)
    graphs.sort(key=lambda g: (g.n, canonical_form(g)))
    return [emit_graph6(g) for g in graphs]


def census_report(n_max: int) -> VerificationReport:
    """Census wrapped as a report: members must have minimum degree >= 3 and
    be 2-connected, and with n_max >= 7 the count on up to 7 vertices must be
    exactly four."""
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"fully critical 4-chromatic graphs, n <= {n_max}"
    )
    listing = four_critical_census(n_max)
    report.instances_checked = len(listing)
    for g6 in listing:
        g = parse_graph6(g6)
        if min_degree(g) < 3:
            report.violations.append(
                {"graph6": g6, "kind": "census member with minimum degree < 3"}
            )
        if not is_biconnected(g):
            report.violations.append(
                {"graph6": g6, "kind": "census member not 2-connected"}
            )
    if n_max >= 7:
        small = sum(1 for g6 in listing if parse_graph6(g6).n <= 7)
        if small != 4:
            report.violations.append(
                {
                    "kind": "census cardinality on <= 7 vertices differs from four",
                    "lhs": str(small),
                    "rhs": "4",
                }
            )
    report.details = {"graphs": listing}
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def verify_claim_2induced(n_max: int, y_set: Iterable[int]) -> VerificationReport:
    """For every 4-vertex-critical graph and every nonempty proper 2-induced
    vertex subset F, the remainder graph must have strictly fewer than
    y^(n-|F|) proper (y+1)-colourings."""
    ys = sorted(set(y_set))
    if any(y < 3 for y in ys):
        raise ValueError("the claim is checked for y >= 3")
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"2-induced remainder bound on 4-critical graphs, "
        f"n <= {n_max}, y in {ys}"
    )
    for g in _four_critical_graphs(n_max):
        g6 = emit_graph6(g)
        full = (1 << g.n) - 1
        for subset in range(1, full):
            if not is_2_induced(g, subset):
                continue
            rest = induced_subgraph(g, full & ~subset)
            size = subset.bit_count()
            for y in ys:
                lhs = count_colourings(rest, y + 1)
                rhs = y ** (g.n - size)
                report.instances_checked += 1
                if lhs >= rhs:
                    report.violations.append(
                        {
                            "graph6": g6,
                            "subset": sorted(_bits(subset)),
                            "x": y + 1,
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        }
                    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


# ---------------------------------------------------------------------------
# Triangle-free floor
# ---------------------------------------------------------------------------


def smallest_triangle_free_4chromatic(
    n_max: int, allow_long: bool = False
) -> VerificationReport:
    """Assert that no connected triangle-free graph with chromatic number at
    least 4 exists on up to min(n_max, 10) vertices.

    The known 11-vertex triangle-free 4-chromatic graph is evaluated as a
    positive control; a failing control is itself reported as a violation.
    """
    cap = ENUM_CAP_LONG if allow_long else ENUM_CAP
    if n_max > cap:
        raise ValueError(
            f"n_max capped at {ENUM_CAP} ({ENUM_CAP_LONG} with the long flag)"
        )
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"triangle-free graphs with chromatic number >= 4, n <= {n_max}"
    )
    per_n: dict[str, int] = {}
    for n in range(1, n_max + 1):
        graphs = enumerate_connected(n, triangle_free=True, allow_long=allow_long)
        per_n[str(n)] = len(graphs)
        for g in graphs:
            report.instances_checked += 1
            if not _colourable(g, 3):
                report.violations.append(
                    {
                        "graph6": emit_graph6(g),
                        "kind": "triangle-free graph needing four colours",
                        "chromatic_number": chromatic_number(g),
                    }
                )
    control = groetzsch_graph()
    control_ok = is_triangle_free(control) and chromatic_number(control) == 4
    report.details = {
        "triangle_free_connected_per_n": per_n,
        "positive_control_11_vertices": control_ok,
    }
    if not control_ok:
        report.violations.append(
            {"kind": "positive control failed", "graph6": emit_graph6(control)}
        )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


# ---------------------------------------------------------------------------
# Lemma batteries
# ---------------------------------------------------------------------------


def verify_small_lemmas(y_set: Iterable[int]) -> dict[str, VerificationReport]:
    """Run the supporting-inequality suites; one report per section.

    Randomized sections draw from a fixed seed so repeated runs are
    identical.  Sections silently restrict to the y values where the
    corresponding statement applies (for instance the minimum-degree-two
    bound needs y >= 3).
    """
    ys = sorted(set(y_set))
    if not ys:
        raise ValueError("y_set must not be empty")
    sections: dict[str, VerificationReport] = {}
    sections["subgraph-tree-bound"] = _check_subgraph_bound(ys)
    sections["decomposition-bound"] = _check_decomposition_bound(ys)
    sections["pinned-path-counts"] = _check_pinned_paths(ys)
    sections["cycle-closed-forms"] = _check_cycle_forms()
    sections["theta-bound"] = _check_theta_bound(ys)
    sections["min-degree-two-bound"] = _check_delta2_bound(ys)
    sections["compression-monotonicity"] = _check_compression(ys)
    sections["segment-fixpoint"] = _check_segment_fixpoint()
    sections["kempe-involution"] = _check_kempe()
    sections["small-extremal-forms"] = _check_small_extremal_forms()
    return sections


def _random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def _random_tree_spec(rng: random.Random, extra: int) -> tuple:
    # Grow a rooted tree by attaching each new vertex to a uniform existing node.
    root: list = []
    all_nodes = [root]
    for _ in range(extra):
        child: list = []
        rng.choice(all_nodes).append(child)
        all_nodes.append(child)

    def freeze(node: list) -> tuple:
        return tuple(freeze(c) for c in node)

    return freeze(root)


def _check_subgraph_bound(ys: Sequence[int]) -> VerificationReport:
    rng = random.Random(_RNG_SEED)
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"subgraph extension bound, 200 random pairs, y in {list(ys)}"
    )
    for _ in range(200):
        n = rng.randint(4, 9)
        g = _random_connected_graph(rng, n, rng.uniform(0.3, 0.7))
        w = rng.randint(1, n)
        verts = rng.sample(range(n), w)
        mask = sum(1 << v for v in verts)
        gw = induced_subgraph(g, mask)
        f_edges = [e for e in gw.edges() if rng.random() < 0.7]
        f = Graph.from_edges(gw.n, f_edges)
        qg = shift_to_q(chromatic_polynomial(g))
        qf = shift_to_q(chromatic_polynomial(f))
        for y in ys:
            report.instances_checked += 1
            if qg(y) > y ** (n - f.n) * qf(y):
                report.violations.append(
                    {
                        "graph6": emit_graph6(g),
                        "subgraph6": emit_graph6(f),
                        "x": y + 1,
                        "lhs": str(qg(y)),
                        "rhs": str(y ** (n - f.n) * qf(y)),
                    }
                )
    # Equality: growing trees from the clique vertices must meet the bound
    # with F = K4 exactly, at every y.
    k4 = make_k4_with_trees(((), (), (), ()))
    qk4 = shift_to_q(chromatic_polynomial(k4))
    for _ in range(30):
        extra = rng.randint(0, 6)
        budget = [0, 0, 0, 0]
        for _ in range(extra):
            budget[rng.randrange(4)] += 1
        spec = tuple(_random_tree_spec(rng, b) for b in budget)
        g = make_k4_with_trees(spec)
        qg = shift_to_q(chromatic_polynomial(g))
        for y in ys:
            report.instances_checked += 1
            if qg(y) != y ** (g.n - 4) * qk4(y):
                report.violations.append(
                    {
                        "graph6": emit_graph6(g),
                        "kind": "clique-with-trees equality failed",
                        "x": y + 1,
                        "lhs": str(qg(y)),
                        "rhs": str(y ** (g.n - 4) * qk4(y)),
                    }
                )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_decomposition_bound(ys: Sequence[int]) -> VerificationReport:
    rng = random.Random(_RNG_SEED + 1)
    t0 = time.perf_counter()
    report = VerificationReport(
        scope=f"almost-disjoint decomposition bound, 200 random splits, y in {list(ys)}"
    )
    for _ in range(200):
        n = rng.randint(4, 8)
        g = _random_connected_graph(rng, n, rng.uniform(0.35, 0.7))
        r = rng.randint(1, min(4, n))
        perm = list(range(n))
        rng.shuffle(perm)
        cuts = sorted(rng.sample(range(1, n), r - 1)) if r > 1 else []
        blocks = []
        prev = 0
        for cut in cuts + [n]:
            blocks.append(set(perm[prev:cut]))
            prev = cut
        # Let disjoint consecutive pairs share one vertex: each block then has
        # at most one vertex inside the union of the others.
        for i in range(1, r, 2):
            if rng.random() < 0.5:
                blocks[i].add(rng.choice(sorted(blocks[i - 1])))
        for i, block in enumerate(blocks):
            others = set().union(*(b for j, b in enumerate(blocks) if j != i))
            assert len(block & others) <= 1
        n_prime = sum(len(b) for b in blocks)
        qg = shift_to_q(chromatic_polynomial(g))
        qparts = [
            shift_to_q(
                chromatic_polynomial(
                    induced_subgraph(g, sum(1 << v for v in block))
                )
            )
            for block in blocks
        ]
        for y in ys:
            report.instances_checked += 1
            rhs = Fraction(y) ** (n - n_prime) * Fraction(y, y + 1) ** (r - 1)
            for q in qparts:
                rhs *= q(y)
            if Fraction(qg(y)) > rhs:
                report.violations.append(
                    {
                        "graph6": emit_graph6(g),
                        "blocks": [sorted(b) for b in blocks],
                        "x": y + 1,
                        "lhs": str(qg(y)),
                        "rhs": str(rhs),
                    }
                )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_pinned_paths(ys: Sequence[int]) -> VerificationReport:
    t0 = time.perf_counter()
    report = VerificationReport(
        scope="pinned-endpoint path counts, lengths 0..6, against enumeration"
    )
    for r in range(0, 7):
        path = make_path(r + 1)
        for same in (False, True):
            poly = path_fixed_endpoints(r, same)
            for y in ys:
                pins = {0: 1, r: 1 if same else 2}
                if r == 0 and not same:
                    brute = 0
                else:
                    full = (1 << (y + 1)) - 1
                    lists = [full] * (r + 1)
                    for v, colour in pins.items():
                        lists[v] &= 1 << (colour - 1)
                    brute = count_list_colourings(
                        path, ListAssignment(y + 1, tuple(lists))
                    )
                report.instances_checked += 1
                if poly(y) != brute:
                    report.violations.append(
                        {
                            "kind": "pinned path count mismatch",
                            "length": r,
                            "same_colour": same,
                            "x": y + 1,
                            "lhs": str(poly(y)),
                            "rhs": str(brute),
                        }
                    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_cycle_forms() -> VerificationReport:
    t0 = time.perf_counter()
    report = VerificationReport(scope="cycle closed forms vs deletion-contraction, n = 3..10")
    for n in range(3, 11):
        report.instances_checked += 1
        direct = shift_to_q(chromatic_polynomial(make_cycle(n)))
        if direct != closed_form_cycle(n):
            report.violations.append({"kind": "cycle form mismatch", "n": n})
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _theta_parameters(n_cap: int) -> list[tuple[int, int, int]]:
    out = []
    for r1 in range(1, n_cap):
        for r2 in range(max(r1, 2), n_cap):
            for r3 in range(r2, n_cap):
                if r1 + r2 + r3 <= n_cap + 1:
                    out.append((r1, r2, r3))
    return out


def _check_theta_bound(ys: Sequence[int]) -> VerificationReport:
    t0 = time.perf_counter()
    use_ys = [y for y in ys if y >= 2]
    report = VerificationReport(
        scope=f"theta-graph bound, all parameter triples with n <= 10, y in {use_ys}"
    )
    for y in use_ys:
        witnesses = []
        for r1, r2, r3 in _theta_parameters(10):
            n = r1 + r2 + r3 - 1
            q = theta_polynomial(r1, r2, r3)
            bound = (
                IntPolynomial.monomial(n)
                - IntPolynomial.monomial(n - 1)
                + IntPolynomial.monomial(n - 2)
                + 2 * IntPolynomial.monomial(n - 3)
                - IntPolynomial.monomial(n - 4)
            )
            report.instances_checked += 1
            if q(y) > bound(y):
                report.violations.append(
                    {
                        "kind": "theta bound violated",
                        "paths": [r1, r2, r3],
                        "x": y + 1,
                        "lhs": str(q(y)),
                        "rhs": str(bound(y)),
                    }
                )
            elif q(y) == bound(y):
                witnesses.append((r1, r2, r3))
        if witnesses != [(2, 2, 2)]:
            report.violations.append(
                {
                    "kind": "theta equality class mismatch",
                    "x": y + 1,
                    "witnesses": witnesses,
                }
            )
    report.equality_witnesses = [emit_graph6(make_complete_bipartite(2, 3))]
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_delta2_bound(ys: Sequence[int]) -> VerificationReport:
    t0 = time.perf_counter()
    use_ys = [y for y in ys if y >= 3]
    report = VerificationReport(
        scope=f"minimum-degree-two bound, connected non-cycle graphs n <= 8, y in {use_ys}"
    )
    k23_key = canonical_form(make_complete_bipartite(2, 3))
    for n in range(4, 9):
        for g in enumerate_connected(n):
            if min_degree(g) < 2 or is_cycle_graph(g):
                continue
            q = shift_to_q(chromatic_polynomial(g))
            has_triangle = not is_triangle_free(g)
            g6 = emit_graph6(g)
            for y in use_ys:
                report.instances_checked += 1
                general = y ** (n - 4) * (y**4 - y**3 + y**2 + 2 * y - 1)
                lhs = q(y)
                if lhs > general:
                    report.violations.append(
                        {"graph6": g6, "x": y + 1, "lhs": str(lhs), "rhs": str(general)}
                    )
                elif lhs == general:
                    if canonical_form(g) != k23_key:
                        report.violations.append(
                            {
                                "graph6": g6,
                                "kind": "unexpected equality in degree-two bound",
                                "x": y + 1,
                            }
                        )
                    elif g6 not in report.equality_witnesses:
                        report.equality_witnesses.append(g6)
                if has_triangle:
                    tri = y ** (n - 4) * (y**4 - y**3 + y - 1)
                    if lhs > tri:
                        report.violations.append(
                            {
                                "graph6": g6,
                                "kind": "triangle variant violated",
                                "x": y + 1,
                                "lhs": str(lhs),
                                "rhs": str(tri),
                            }
                        )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _random_bipartite_instance(
    rng: random.Random,
) -> tuple[Graph, ListAssignment, int, int]:
    n = rng.randint(2, 8)
    a = rng.randint(1, n - 1)
    plus = (1 << a) - 1
    minus = ((1 << n) - 1) & ~plus
    edges = [
        (i, j) for i in range(a) for j in range(a, n) if rng.random() < rng.uniform(0.3, 0.8)
    ]
    g = Graph.from_edges(n, edges)
    m = rng.randint(2, 5)
    lists = tuple(rng.randint(0, (1 << m) - 1) for _ in range(n))
    i = rng.randint(1, m - 1)
    j = rng.randint(i + 1, m)
    return g, ListAssignment(m, lists, (plus, minus)), i, j


def _check_compression(ys: Sequence[int]) -> VerificationReport:
    rng = random.Random(_RNG_SEED + 2)
    t0 = time.perf_counter()
    report = VerificationReport(
        scope="compression monotonicity, 10000 random bipartite instances (n <= 8, m <= 5)"
    )
    for _ in range(10_000):
        g, assignment, i, j = _random_bipartite_instance(rng)
        before = count_list_colourings(g, assignment)
        after = count_list_colourings(g, compress(assignment, i, j))
        report.instances_checked += 1
        if after < before:
            report.violations.append(
                {
                    "kind": "compression decreased the count",
                    "assignment": assignment.to_json(),
                    "graph6": emit_graph6(g),
                    "colours": [i, j],
                    "lhs": str(after),
                    "rhs": str(before),
                }
            )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_segment_fixpoint() -> VerificationReport:
    rng = random.Random(_RNG_SEED + 3)
    t0 = time.perf_counter()
    report = VerificationReport(
        scope="compression fixpoint equals segment assignment; exhaustive P4 maximality"
    )
    for _ in range(300):
        g, assignment, _i, _j = _random_bipartite_instance(rng)
        report.instances_checked += 1
        fixed = compression_fixpoint(assignment)
        segments = extremal_assignment(
            g, assignment.sizes(), assignment.m, assignment.bipartition
        )
        if fixed.lists != segments.lists:
            report.violations.append(
                {
                    "kind": "fixpoint is not the segment assignment",
                    "assignment": assignment.to_json(),
                }
            )
    # Exhaustive maximality on the 4-path with all list sizes 2 out of [4].
    p4 = make_path(4)
    bip = bipartition(p4)
    segments = extremal_assignment(p4, [2, 2, 2, 2], 4, bip)
    best = count_list_colourings(p4, segments)
    pairs = [colour_mask for colour_mask in range(1, 16) if bin(colour_mask).count("1") == 2]
    maximisers = 0
    for combo in itertools.product(pairs, repeat=4):
        assignment = ListAssignment(4, combo, bip)
        value = count_list_colourings(p4, assignment)
        report.instances_checked += 1
        if value > best:
            report.violations.append(
                {
                    "kind": "segment assignment is not maximal",
                    "assignment": assignment.to_json(),
                    "lhs": str(value),
                    "rhs": str(best),
                }
            )
        elif value == best:
            maximisers += 1
    report.details = {"p4_maximum": best, "p4_maximisers": maximisers}
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_kempe() -> VerificationReport:
    rng = random.Random(_RNG_SEED + 4)
    t0 = time.perf_counter()
    report = VerificationReport(
        scope="Kempe swap involution and injection, bipartite graphs n <= 6, m <= 4"
    )
    graphs: list[Graph] = []
    for n in range(2, 6):
        graphs.extend(g for g in enumerate_connected(n) if bipartition(g) is not None)
    graphs.append(make_cycle(6))
    graphs.append(make_path(6))
    graphs.append(make_complete_bipartite(3, 3))
    for g in graphs:
        bip = bipartition(g)
        m = 4
        all_masks = list(range(1, 1 << m))
        samples: list[tuple[int, ...]]
        if g.n <= 3:
            samples = list(itertools.product(all_masks, repeat=g.n))
        else:
            samples = [
                tuple(rng.choice(all_masks) for _ in range(g.n)) for _ in range(25)
            ]
        for lists in samples:
            assignment = ListAssignment(m, lists, bip)
            colourings = enumerate_list_colourings(g, assignment)
            for i in range(1, m):
                for j in range(i + 1, m + 1):
                    compressed = compress(assignment, i, j)
                    images = set()
                    for c in colourings:
                        f = kempe_swap_map(g, assignment, i, j, c)
                        report.instances_checked += 1
                        ok = (
                            is_proper_colouring(g, f)
                            and respects_lists(f, compressed)
                            and kempe_swap_map(g, assignment, i, j, f) == c
                        )
                        if not ok:
                            report.violations.append(
                                {
                                    "kind": "kempe swap failure",
                                    "graph6": emit_graph6(g),
                                    "assignment": assignment.to_json(),
                                    "colours": [i, j],
                                    "colouring": list(c),
                                }
                            )
                        images.add(f)
                    if len(images) != len(colourings):
                        report.violations.append(
                            {
                                "kind": "kempe swap not injective",
                                "graph6": emit_graph6(g),
                                "assignment": assignment.to_json(),
                                "colours": [i, j],
                            }
                        )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_small_extremal_forms() -> VerificationReport:
    t0 = time.perf_counter()
    merged = VerificationReport(
        scope="small extremal closed forms (triangle, K23, C5, C4-plus-leaf), y in {3, 4}"
    )
    for case in ("K3", "K23", "C5", "C4leaf_a", "C4leaf_b"):
        rep = closed_form_check(case, (3, 4))
        merged.instances_checked += rep.instances_checked
        merged.violations.extend(rep.violations)
        merged.details[case] = rep.details
    merged.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return merged
