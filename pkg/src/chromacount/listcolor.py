"""List assignments, compressions, Kempe swaps, and forbidden-colour polynomials.

Colours are the positive integers 1..m and are stored as bitmasks (bit c-1 for
colour c).  A list assignment records the allowed colours per vertex; a
forbidden assignment records excluded colours out of a shifted palette [y+1]
whose size stays symbolic until evaluation.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import (
    Graph,
    _bits,
    contract_vertices,
    delete_edge,
    make_complete,
    make_complete_bipartite,
    make_cycle,
)
from .polynomials import IntPolynomial
from .report import VerificationReport

MAX_COLOURS = 64

Colouring = tuple  # vertex index -> colour in 1..m


def colour_set_to_mask(colours: Iterable[int]) -> int:
    mask = 0
    for c in colours:
        if not 1 <= c <= MAX_COLOURS:
            raise ValueError(f"colour {c} outside 1..{MAX_COLOURS}")
        mask |= 1 << (c - 1)
    return mask


def mask_to_colour_set(mask: int) -> list[int]:
    return [b + 1 for b in _bits(mask)]


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex allowed-colour sets over the palette [m].

    ``bipartition`` is an optional (plus_mask, minus_mask) vertex split; the
    compression operator acts differently on the two sides, so it must be
    supplied explicitly whenever compressions are wanted.
    """

    m: int
    lists: tuple[int, ...]
    bipartition: tuple[int, int] | None = None

    def __post_init__(self):
        if not 1 <= self.m <= MAX_COLOURS:
            raise ValueError(f"palette size {self.m} outside 1..{MAX_COLOURS}")
        full = (1 << self.m) - 1
        for v, mask in enumerate(self.lists):
            if mask & ~full:
                raise ValueError(f"list of vertex {v} leaves the palette [{self.m}]")
        if self.bipartition is not None:
            plus, minus = self.bipartition
            n = len(self.lists)
            if plus & minus or (plus | minus) != (1 << n) - 1:
                raise ValueError("bipartition must split the vertex set exactly")

    @classmethod
    def from_sets(
        cls,
        m: int,
        sets: Sequence[Iterable[int]],
        bipartition: tuple[int, int] | None = None,
    ) -> "ListAssignment":
        return cls(m, tuple(colour_set_to_mask(s) for s in sets), bipartition)

    def sizes(self) -> list[int]:
        return [mask.bit_count() for mask in self.lists]

    def to_json(self) -> dict:
        bip = None
        if self.bipartition is not None:
            bip = [sorted(_bits(self.bipartition[0])), sorted(_bits(self.bipartition[1]))]
        return {
            "m": self.m,
            "lists": [mask_to_colour_set(mask) for mask in self.lists],
            "bipartition": bip,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ListAssignment":
        bip = None
        if obj.get("bipartition") is not None:
            plus = sum(1 << v for v in obj["bipartition"][0])
            minus = sum(1 << v for v in obj["bipartition"][1])
            bip = (plus, minus)
        return cls.from_sets(obj["m"], obj["lists"], bip)


@dataclass(frozen=True)
class ForbiddenAssignment:
    """Per-vertex forbidden colours out of a shifted palette [y+1].

    Labels are abstract positions in [y+1]; the palette parameter y stays
    symbolic, so one assignment yields a polynomial valid for every y with all
    labels inside [y+1].  ``y_plus_1_label`` optionally marks the label that
    denotes the top colour y+1 when building concrete instances.
    """

    forbidden: tuple[frozenset, ...]
    y_plus_1_label: int | None = None

    def __post_init__(self):
        for v, labels in enumerate(self.forbidden):
            for c in labels:
                if not isinstance(c, int) or c < 1:
                    raise ValueError(f"bad colour label {c!r} at vertex {v}")

    @classmethod
    def from_sets(
        cls, sets: Sequence[Iterable[int]], y_plus_1_label: int | None = None
    ) -> "ForbiddenAssignment":
        return cls(tuple(frozenset(s) for s in sets), y_plus_1_label)

    @property
    def max_label(self) -> int:
        labels = [c for s in self.forbidden for c in s]
        return max(labels) if labels else 1

    def materialize(self, y: int) -> tuple[frozenset, ...]:
        """Concrete forbidden sets inside [y+1] for an integer y.

        The marked label (default: the largest occurring one) is sent to y+1;
        all other labels must already lie inside [y+1].
        """
        special = self.y_plus_1_label if self.y_plus_1_label is not None else self.max_label
        out = []
        for labels in self.forbidden:
            concrete = set()
            for c in labels:
                cc = y + 1 if c == special else c
                if cc > y + 1:
                    raise ValueError(f"label {c} does not fit in a palette of size {y + 1}")
                concrete.add(cc)
            out.append(frozenset(concrete))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "forbidden": [sorted(s) for s in self.forbidden],
            "y_plus_1_label": self.y_plus_1_label,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ForbiddenAssignment":
        return cls.from_sets(obj["forbidden"], obj.get("y_plus_1_label"))


def is_proper_colouring(g: Graph, c: Sequence[int]) -> bool:
    if len(c) != g.n:
        return False
    return all(c[u] != c[v] for u, v in g.edges())


def respects_lists(c: Sequence[int], assignment: ListAssignment) -> bool:
    return all(
        (assignment.lists[v] >> (c[v] - 1)) & 1 for v in range(len(c))
    )


# ---------------------------------------------------------------------------
# Exact list-colouring counter
# ---------------------------------------------------------------------------


def count_list_colourings(g: Graph, assignment: ListAssignment) -> int:
    """Exact number of proper colourings where each vertex stays in its list.

    Backtracking on the most constrained vertex; a vertex with no uncoloured
    neighbours contributes a plain multiplicative factor.
    """
    if len(assignment.lists) != g.n:
        raise ValueError("assignment length does not match the graph")
    adj = g.adj
    avail = list(assignment.lists)

    def count_from(remaining: int) -> int:
        if not remaining:
            return 1
        best_v = -1
        best_size = MAX_COLOURS + 1
        for v in _bits(remaining):
            size = avail[v].bit_count()
            if size < best_size:
                best_v, best_size = v, size
                if size == 0:
                    return 0
        v = best_v
        rest = remaining & ~(1 << v)
        open_nbrs = adj[v] & rest
        if not open_nbrs:
            return best_size * count_from(rest)
        total = 0
        mask = avail[v]
        for b in _bits(mask):
            bit = 1 << b
            touched = []
            for u in _bits(open_nbrs):
                if avail[u] & bit:
                    avail[u] &= ~bit
                    touched.append(u)
            total += count_from(rest)
            for u in touched:
                avail[u] |= bit
        return total

    return count_from((1 << g.n) - 1)


def enumerate_list_colourings(g: Graph, assignment: ListAssignment) -> list[Colouring]:
    """All proper list colourings, in lexicographic order (test-sized inputs)."""
    if len(assignment.lists) != g.n:
        raise ValueError("assignment length does not match the graph")
    out = []
    for combo in itertools.product(
        *[mask_to_colour_set(mask) for mask in assignment.lists]
    ):
        if is_proper_colouring(g, combo):
            out.append(tuple(combo))
    return out


def count_avoiding_colourings(g: Graph, forbidden: Sequence[frozenset], y: int) -> int:
    """(y+1)-colourings avoiding the given concrete forbidden sets per vertex."""
    if y + 1 > MAX_COLOURS:
        raise ValueError("palette too large")
    full = (1 << (y + 1)) - 1
    lists = []
    for s in forbidden:
        if any(c > y + 1 for c in s):
            raise ValueError("forbidden colour outside the palette")
        lists.append(full & ~colour_set_to_mask(s))
    return count_list_colourings(g, ListAssignment(y + 1, tuple(lists)))


# ---------------------------------------------------------------------------
# Compression and Kempe swaps
# ---------------------------------------------------------------------------


def compress_set(mask: int, i: int, j: int) -> int:
    """C_ij on one colour mask: replace j by i when j is present and i absent."""
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if (mask & bj) and not (mask & bi):
        return (mask & ~bj) | bi
    return mask


def compress(assignment: ListAssignment, i: int, j: int) -> ListAssignment:
    """The ij-compression: C_ij on the plus side, C_ji on the minus side.

    List sizes are preserved vertex by vertex.  A stored bipartition is
    required; the two sides are treated asymmetrically, so guessing one here
    would change the operator's meaning.
    """
    if assignment.bipartition is None:
        raise ValueError("compression needs an explicit bipartition")
    if i == j:
        raise ValueError("compression needs two distinct colours")
    plus, _minus = assignment.bipartition
    lists = []
    for v, mask in enumerate(assignment.lists):
        if (plus >> v) & 1:
            lists.append(compress_set(mask, i, j))
        else:
            lists.append(compress_set(mask, j, i))
    return ListAssignment(assignment.m, tuple(lists), assignment.bipartition)


def compression_fixpoint(assignment: ListAssignment, max_rounds: int | None = None) -> ListAssignment:
    """Sweep compressions for all colour pairs i < j until nothing changes.

    Converges to initial segments on the plus side and terminal segments on
    the minus side.  The round cap (default m^2 sweeps) guards against bugs.
    """
    if max_rounds is None:
        max_rounds = assignment.m * assignment.m
    current = assignment
    for _ in range(max_rounds + 1):
        nxt = current
        for i in range(1, current.m + 1):
            for j in range(i + 1, current.m + 1):
                nxt = compress(nxt, i, j)
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError("compression sweeps did not stabilise within the cap")


def kempe_swap_map(
    g: Graph, assignment: ListAssignment, i: int, j: int, c: Sequence[int]
) -> Colouring:
    """Image of a list colouring under the compression-matching Kempe swap.

    Swaps colours i and j on every ij-Kempe component that meets the set of
    vertices whose list changes under the ij-compression.  On the full
    colouring set this map is an involution, and it sends colourings within
    the original lists to colourings within the compressed lists.
    """
    if assignment.bipartition is None:
        raise ValueError("the swap is defined relative to a bipartition")
    if not is_proper_colouring(g, c):
        raise ValueError("input colouring is not proper")
    compressed = compress(assignment, i, j)
    # The involution runs both ways, so colourings of either side are valid.
    if not (respects_lists(c, assignment) or respects_lists(c, compressed)):
        raise ValueError("input colouring does not respect the lists")
    changed = sum(
        1 << v
        for v in range(g.n)
        if compressed.lists[v] != assignment.lists[v]
    )
    in_ij = sum(1 << v for v in range(g.n) if c[v] in (i, j))
    swap_mask = 0
    seen = 0
    for start in _bits(in_ij):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & in_ij & ~comp
            comp |= frontier
        seen |= comp
        if comp & changed:
            swap_mask |= comp
    out = list(c)
    for v in _bits(swap_mask):
        out[v] = j if out[v] == i else i
    return tuple(out)


def extremal_assignment(
    g: Graph,
    kappa: Sequence[int],
    m: int,
    bipartition: tuple[int, int],
) -> ListAssignment:
    """The segment assignment: {1..kappa(v)} on the plus side and
    {m-kappa(v)+1..m} on the minus side.

    This maximises the list-colouring count among all assignments with the
    given list sizes inside [m].
    """
    plus, minus = bipartition
    if plus & minus or (plus | minus) != (1 << g.n) - 1:
        raise ValueError("bipartition must split the vertex set exactly")
    for u, v in g.edges():
        if bool((plus >> u) & 1) == bool((plus >> v) & 1):
            raise ValueError("bipartition is not a proper 2-colouring")
    if len(kappa) != g.n:
        raise ValueError("kappa length does not match the graph")
    lists = []
    for v in range(g.n):
        k = kappa[v]
        if not 0 <= k <= m:
            raise ValueError(f"kappa({v}) = {k} outside 0..{m}")
        if (plus >> v) & 1:
            lists.append((1 << k) - 1)
        else:
            lists.append(((1 << k) - 1) << (m - k))
    return ListAssignment(m, tuple(lists), bipartition)


# ---------------------------------------------------------------------------
# List chromatic polynomials (forbidden-colour setting)
# ---------------------------------------------------------------------------

LIST_POLY_CAP = 10


def list_chromatic_polynomial(g: Graph, fa: ForbiddenAssignment) -> IntPolynomial:
    """Monic degree-n polynomial in y counting (y+1)-colourings that avoid the
    forbidden labels, valid for every integer y with all labels inside [y+1].

    Deletion-contraction: deleting an edge keeps the forbidden sets, while
    contracting it gives the merged vertex the union of both endpoint sets.
    """
    if g.n > LIST_POLY_CAP:
        raise ValueError(f"list polynomials capped at {LIST_POLY_CAP} vertices")
    if len(fa.forbidden) != g.n:
        raise ValueError("assignment length does not match the graph")
    return _list_poly(g, fa.forbidden)


def _list_poly(g: Graph, forb: tuple[frozenset, ...]) -> IntPolynomial:
    edges = g.edges()
    if not edges:
        result = IntPolynomial((1,))
        for s in forb:
            result = result * IntPolynomial((1 - len(s), 1))
        return result
    u, v = edges[0]
    deleted = delete_edge(g, u, v)
    lo, hi = (u, v) if u < v else (v, u)
    merged = contract_vertices(deleted, u, v)
    merged_forb = tuple(
        (forb[w] | forb[hi]) if w == lo else forb[w]
        for w in range(g.n)
        if w != hi
    )
    return _list_poly(deleted, forb) - _list_poly(merged, merged_forb)


def path_A(n: int) -> IntPolynomial:
    """Path list polynomial with one forbidden colour per vertex, alternating
    along the path.  A1 = y; A_n = A_{n-1} + (y-1) B_{n-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _path_AB(n)[0]


def path_B(n: int) -> IntPolynomial:
    """Same as path_A but with two forbidden colours at the first vertex.
    B1 = y - 1; B_n = A_{n-1} + (y-2) B_{n-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _path_AB(n)[1]


def _path_AB(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    a = IntPolynomial((0, 1))
    b = IntPolynomial((-1, 1))
    y1 = IntPolynomial((-1, 1))
    y2 = IntPolynomial((-2, 1))
    for _ in range(n - 1):
        a, b = a + y1 * b, a + y2 * b
    return a, b


def path_C_hat(n: int) -> IntPolynomial:
    """Upper-bound polynomial for a path with two forbidden colours at both
    ends: C2 = y^2 - 3y + 4, then C_n = B_{n-1} + (y-2) C_{n-1}."""
    if n < 2:
        raise ValueError("need n >= 2")
    c = IntPolynomial((4, -3, 1))
    y2 = IntPolynomial((-2, 1))
    for k in range(3, n + 1):
        c = _path_AB(k - 1)[1] + y2 * c
    return c


# ---------------------------------------------------------------------------
# Inclusion-exclusion over pinned colours
# ---------------------------------------------------------------------------


def inclusion_exclusion_count(
    g: Graph,
    pins,
    y: int,
    subset_family: Iterable[frozenset] | None = None,
) -> int:
    """Signed sum over a family of pin subsets of the pinned-colouring counts.

    ``pins`` maps vertices to forbidden colours (a mapping, or (vertex,
    colour) pairs, which also allows several alternative pins on one vertex).
    Each term counts (y+1)-colourings with c(v) = colour for the pins in the
    subset, by the brute-force counter.  With the default all-subsets family
    and one pin per vertex this is exactly the count of colourings avoiding
    every pin.
    """
    if isinstance(pins, Mapping):
        pin_list = sorted(pins.items())
    else:
        pin_list = list(pins)
    for v, colour in pin_list:
        if not 0 <= v < g.n:
            raise ValueError(f"pinned vertex {v} out of range")
        if not 1 <= colour <= y + 1:
            raise ValueError(f"pinned colour {colour} outside [{y + 1}]")
    indices = range(len(pin_list))
    if subset_family is None:
        family = [
            frozenset(c)
            for size in range(len(pin_list) + 1)
            for c in itertools.combinations(indices, size)
        ]
    else:
        family = [frozenset(s) for s in subset_family]
    full = (1 << (y + 1)) - 1
    total = 0
    for subset in family:
        lists = [full] * g.n
        feasible = True
        for idx in subset:
            v, colour = pin_list[idx]
            want = 1 << (colour - 1)
            if lists[v] & want:
                lists[v] = want
            else:
                feasible = False
                break
        if feasible:
            term = count_list_colourings(g, ListAssignment(y + 1, tuple(lists)))
        else:
            term = 0
        total += (-1) ** len(subset) * term
    return total


# ---------------------------------------------------------------------------
# Extremal checks for the small closed forms
# ---------------------------------------------------------------------------

# case -> (graph builder, per-vertex minimum forbidden-set sizes, expected
# maximum as a polynomial in y, optional predicate naming the equality class).
# A minimum size of 0 means the vertex may have an empty forbidden set.


def _c4_plus_leaf() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def _distinct_singletons(sets: tuple[frozenset, ...]) -> bool:
    if any(len(s) != 1 for s in sets):
        return False
    colours = [next(iter(s)) for s in sets]
    return len(set(colours)) == len(colours)


def _k23_pattern(sets: tuple[frozenset, ...]) -> bool:
    # Same colour within each side of the bipartition, different across.
    if any(len(s) != 1 for s in sets):
        return False
    c = [next(iter(s)) for s in sets]
    return c[0] == c[1] and c[2] == c[3] == c[4] and c[0] != c[2]


def _c5_pattern(sets: tuple[frozenset, ...]) -> bool:
    # Adjacent pins differ and exactly two second-neighbour pins coincide.
    if any(len(s) != 1 for s in sets):
        return False
    c = [next(iter(s)) for s in sets]
    if any(c[k] == c[(k + 1) % 5] for k in range(5)):
        return False
    return sum(c[k] == c[(k + 2) % 5] for k in range(5)) == 2


CLOSED_FORM_CASES: dict = {
    "K3": (
        make_complete(3),
        (1, 1, 1),
        IntPolynomial((-4, 5, -3, 1)),
        _distinct_singletons,
    ),
    "K23": (
        make_complete_bipartite(2, 3),
        (1, 1, 1, 1, 1),
        IntPolynomial((-13, 36, -38, 21, -6, 1)),
        _k23_pattern,
    ),
    "C5": (
        make_cycle(5),
        (1, 1, 1, 1, 1),
        IntPolynomial((-16, 31, -28, 15, -5, 1)),
        _c5_pattern,
    ),
    "C4leaf_a": (
        _c4_plus_leaf(),
        (0, 1, 1, 1, 1),
        IntPolynomial((-3, 10, -13, 10, -4, 1)),
        None,
    ),
    "C4leaf_b": (
        _c4_plus_leaf(),
        (0, 1, 1, 1, 2),
        IntPolynomial((-11, 23, -23, 14, -5, 1)),
        None,
    ),
}


def _minimal_forbidden_sets(min_size: int, y: int) -> list[frozenset]:
    if min_size == 0:
        return [frozenset()]
    return [frozenset(c) for c in itertools.combinations(range(1, y + 2), min_size)]


def closed_form_check(case: str, y_range: Iterable[int]) -> VerificationReport:
    """Exhaustively confirm the small extremal closed forms.

    For each y: every minimal forbidden assignment (smallest allowed set per
    vertex) is counted directly; the maximum must equal the expected
    polynomial, the witnesses must match the equality class when one is
    stated, and every one-colour enlargement of a witness must count strictly
    lower.  Because enlarging a forbidden set never increases the count,
    minimal assignments plus those enlargements dominate every admissible
    assignment, so the search is exhaustive over the full class.
    """
    if case not in CLOSED_FORM_CASES:
        raise ValueError(f"unknown case {case!r}")
    g, min_sizes, expected, predicate = CLOSED_FORM_CASES[case]
    t0 = time.perf_counter()
    report = VerificationReport(scope=f"closed-form extremal check: {case}")
    for y in sorted(y_range):
        if y < 3:
            raise ValueError("the closed forms require y >= 3")
        best = -1
        witnesses: list[tuple[frozenset, ...]] = []
        base_count = 0
        for combo in itertools.product(
            *[_minimal_forbidden_sets(ms, y) for ms in min_sizes]
        ):
            base_count += 1
            value = count_avoiding_colourings(g, combo, y)
            if value > best:
                best, witnesses = value, [combo]
            elif value == best:
                witnesses.append(combo)
        exp_value = expected(y)
        if best != exp_value:
            report.violations.append(
                {
                    "case": case,
                    "y": y,
                    "kind": "maximum mismatch",
                    "lhs": str(best),
                    "rhs": str(exp_value),
                }
            )
        if predicate is not None:
            for combo in itertools.product(
                *[_minimal_forbidden_sets(ms, y) for ms in min_sizes]
            ):
                is_witness = count_avoiding_colourings(g, combo, y) == best
                if is_witness != predicate(combo):
                    report.violations.append(
                        {
                            "case": case,
                            "y": y,
                            "kind": "equality class mismatch",
                            "assignment": [sorted(s) for s in combo],
                            "attains_max": is_witness,
                        }
                    )
        extensions = 0
        for w in witnesses:
            for vtx in range(g.n):
                for colour in range(1, y + 2):
                    if colour in w[vtx]:
                        continue
                    enlarged = tuple(
                        (s | {colour}) if k == vtx else s for k, s in enumerate(w)
                    )
                    extensions += 1
                    if count_avoiding_colourings(g, enlarged, y) >= best:
                        report.violations.append(
                            {
                                "case": case,
                                "y": y,
                                "kind": "non-minimal assignment attains maximum",
                                "assignment": [sorted(s) for s in enlarged],
                            }
                        )
        report.instances_checked += base_count + extensions
        report.details[str(y)] = {
            "maximum": str(best),
            "expected": str(exp_value),
            "witnesses": len(witnesses),
            "witness_assignments": [[sorted(s) for s in w] for w in witnesses[:32]],
            "base_assignments": base_count,
            "extensions_checked": extensions,
        }
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report
