"""Exact colouring counts and chromatic polynomials.

Two independent routes are provided on purpose: a brute-force backtracking
counter (the oracle) and a memoised deletion-contraction engine producing the
full polynomial.  Verification work compares the two.
"""

from __future__ import annotations

from .graphs import (
    Graph,
    _bits,
    canonical_form,
    components,
    contract_vertices,
    delete_edge,
    find_cut_vertex,
    induced_subgraph,
    is_cycle_graph,
    shortest_cycle_edge,
)
from .polynomials import IntPolynomial

POLY_CAP = 12

# Shared across calls; keyed on canonical form, so isomorphic minors are
# computed once.  Values are immutable, which makes concurrent last-write-wins
# races benign.
_POLY_CACHE: dict[bytes, IntPolynomial] = {}


def clear_polynomial_cache() -> None:
    _POLY_CACHE.clear()


# ---------------------------------------------------------------------------
# Brute-force counting oracle
# ---------------------------------------------------------------------------


def count_colourings(g: Graph, x: int) -> int:
    """Number of proper colourings with palette [x], by direct backtracking.

    Vertices are processed in a connectivity-respecting (BFS) order so each
    one after a component root sees at least one coloured neighbour.  This is
    the independent oracle for the polynomial machinery; it never touches
    deletion-contraction.
    """
    if x < 0:
        raise ValueError("palette size must be nonnegative")
    if x == 0:
        return 0
    order: list[int] = []
    for comp in components(g):
        start = (comp & -comp).bit_length() - 1
        seen = 1 << start
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            order.append(v)
            for u in _bits(g.adj[v] & comp & ~seen):
                seen |= 1 << u
                queue.append(u)

    n = g.n
    adj = g.adj
    earlier = []
    placed = 0
    for v in order:
        earlier.append(adj[v] & placed)
        placed |= 1 << v
    colour = [0] * n
    last = n - 1

    def count_from(i: int) -> int:
        v = order[i]
        used = 0
        for u in _bits(earlier[i]):
            used |= 1 << colour[u]
        if i == last:
            return x - used.bit_count()
        total = 0
        for c in range(x):
            if (used >> c) & 1:
                continue
            colour[v] = c
            total += count_from(i + 1)
        return total

    return count_from(0)


# ---------------------------------------------------------------------------
# Chromatic polynomial via deletion-contraction
# ---------------------------------------------------------------------------


def chromatic_polynomial(g: Graph) -> IntPolynomial:
    """The polynomial P with P(x) = number of proper x-colourings, in x.

    Monic of degree n.  Components multiply; connected pieces split at cut
    vertices (gluing at a vertex divides by x); 2-connected cores recurse by
    deleting/contracting an edge on a shortest cycle, memoised on canonical
    form.  Only graphs with at most 12 vertices are supported.
    """
    if g.n > POLY_CAP:
        raise ValueError(f"polynomial computation capped at {POLY_CAP} vertices")
    result = IntPolynomial((1,))
    for comp in components(g):
        result = result * _poly_connected(induced_subgraph(g, comp))
    return result


def _poly_connected(g: Graph) -> IntPolynomial:
    n, m = g.n, g.edge_count
    if m == n - 1:
        # Tree (includes the single vertex): x * (x-1)^(n-1).
        return IntPolynomial((0, 1)) * IntPolynomial((-1, 1)) ** (n - 1)
    if is_cycle_graph(g):
        sign = 1 if n % 2 == 0 else -1
        return IntPolynomial((-1, 1)) ** n + sign * IntPolynomial((-1, 1))
    key = canonical_form(g)
    cached = _POLY_CACHE.get(key)
    if cached is not None:
        return cached
    cut = find_cut_vertex(g)
    if cut is not None:
        # Gluing k pieces at a cut vertex divides the product by x^(k-1).
        rest = ((1 << g.n) - 1) & ~(1 << cut)
        sub = induced_subgraph(g, rest)
        poly = IntPolynomial((1,))
        pieces = 0
        for comp in components(sub):
            piece_mask = (1 << cut) | _unshift_mask(comp, cut)
            poly = poly * _poly_connected(induced_subgraph(g, piece_mask))
            pieces += 1
        result = poly.divide_exact_by_power(pieces - 1)
    else:
        a, b = shortest_cycle_edge(g)
        deleted = delete_edge(g, a, b)
        contracted = contract_vertices(deleted, a, b)
        result = _poly_connected(deleted) - _poly_connected(contracted)
    _POLY_CACHE[key] = result
    return result


def _unshift_mask(mask: int, removed: int) -> int:
    """Map a vertex mask of g - removed back to labels of g."""
    low = mask & ((1 << removed) - 1)
    return low | ((mask >> removed) << (removed + 1))


def shift_to_q(p: IntPolynomial) -> IntPolynomial:
    """P(x) -> Q(y) = P(y+1)."""
    return p.compose_shift(1)


def shift_to_p(q: IntPolynomial) -> IntPolynomial:
    """Q(y) -> P(x) = Q(x-1)."""
    return q.compose_shift(-1)


# ---------------------------------------------------------------------------
# Closed forms and the clique-with-trees bound
# ---------------------------------------------------------------------------


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1), exactly, for any integer x and k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= x - i
    return out


def tomescu_bound(k: int, n: int, x: int) -> int:
    """The conjectured maximum x^(falling k) * (x-1)^(n-k) for connected
    k-chromatic graphs on n vertices; at x = k it equals k! (k-1)^(n-k)."""
    if k < 1 or n < k:
        raise ValueError("need 1 <= k <= n")
    if x < k:
        raise ValueError("need x >= k")
    return falling_factorial(x, k) * (x - 1) ** (n - k)


def closed_form_cycle(n: int) -> IntPolynomial:
    """Shifted cycle polynomial: y^n - y for odd n, y^n + y for even n."""
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    sign = 1 if n % 2 == 0 else -1
    return IntPolynomial.monomial(n) + IntPolynomial((0, sign))


def path_fixed_endpoints(r: int, same_colour: bool) -> IntPolynomial:
    """Count of (y+1)-colourings of a length-r path with both endpoint colours
    pinned: (y^r + (-1)^(r+1)) / (y+1) for distinct pins,
    (y^r + (-1)^r y) / (y+1) for equal pins.  The division is exact."""
    if r < 0:
        raise ValueError("path length must be nonnegative")
    if same_colour:
        numerator = IntPolynomial.monomial(r) + IntPolynomial((0, (-1) ** r))
    else:
        numerator = IntPolynomial.monomial(r) + IntPolynomial(((-1) ** (r + 1),))
    return numerator.divide_exact_by_linear(-1)


def theta_polynomial(r1: int, r2: int, r3: int) -> IntPolynomial:
    """Shifted chromatic polynomial of the theta graph with the given path
    lengths, from the three-path product expansion; exact division by (y+1)."""
    if not (1 <= r1 <= r2 <= r3) or r2 < 2:
        raise ValueError("invalid theta parameters")
    y = IntPolynomial.variable()

    def sgn(k: int) -> int:
        return -1 if k % 2 else 1

    numerator = (
        IntPolynomial.monomial(r1 + r2 + r3)
        + sgn(r1 + r2) * IntPolynomial.monomial(r3 + 1)
        + sgn(r1 + r3) * IntPolynomial.monomial(r2 + 1)
        + sgn(r2 + r3) * IntPolynomial.monomial(r1 + 1)
        + sgn(r1 + r2 + r3) * (y * y - y)
    )
    return numerator.divide_exact_by_linear(-1)
