"""Small simple graphs with bitmask adjacency, graph6 I/O, and structure tools.

Vertices are labelled 0..n-1 and each neighbourhood is a 64-bit mask, so all
set operations are single integer instructions.  Everything here is immutable:
editing operations return new graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
CANONICAL_CAP = 12

# Rooted tree specs (for the clique-with-trees family) are nested tuples:
# () is a bare root, (t1, t2, ...) is a root whose children are the given
# subtrees.  The root itself is identified with an existing vertex.
TreeSpec = tuple


class Loop:
    """Marker for the result of identifying adjacent vertices.

    Downstream counting treats a looped graph as having no proper colourings,
    so its polynomial is identically zero.
    """

    _singleton = None

    def __new__(cls):
        if cls._singleton is None:
            cls._singleton = super().__new__(cls)
        return cls._singleton

    def __repr__(self) -> str:
        return "LOOP"


LOOP = Loop()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbour masks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"neighbour mask of {v} references missing vertices")
            if mask & (1 << v):
                raise ValueError(f"vertex {v} has a loop")
            for u in _bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            for u in _bits(m):
                out.append((v, v + 1 + u))
        return out

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line into a Graph.

    Accepts the optional ``>>graph6<<`` prefix.  Rejects graphs with more than
    64 vertices, malformed headers, wrong payload length, and nonzero padding
    bits.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ValueError("graph6 string is not ASCII") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 byte {b}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph has more than 64 vertices")
        if len(data) < 4:
            raise ValueError("malformed graph6 header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n == 0:
        raise ValueError("empty graphs are not supported")
    if n > MAX_VERTICES:
        raise ValueError(f"graph has {n} > {MAX_VERTICES} vertices")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ValueError(f"graph6 payload has {len(body)} bytes, expected {expected}")
    adj = [0] * n
    pos = 0
    for byte in body:
        group = byte - 63
        for k in range(5, -1, -1):
            bit = (group >> k) & 1
            if pos < nbits:
                if bit:
                    i, j = _pair_of_bit_index(pos)
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise ValueError("nonzero padding bits in graph6 payload")
            pos += 1
    return Graph(n, tuple(adj))


def _pair_of_bit_index(pos: int) -> tuple[int, int]:
    # Column order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    j = 1
    while j * (j - 1) // 2 + j <= pos:
        j += 1
    return pos - j * (j - 1) // 2, j


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    body = bytearray()
    for k in range(0, len(bits), 6):
        group = 0
        chunk = bits[k:k + 6]
        chunk += [0] * (6 - len(chunk))
        for b in chunk:
            group = (group << 1) | b
        body.append(group + 63)
    return (head + bytes(body)).decode("ascii")


# ---------------------------------------------------------------------------
# Editing operations
# ---------------------------------------------------------------------------


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced on the vertex set given as a bitmask, relabelled 0..k-1."""
    verts = list(_bits(mask))
    if not verts:
        raise ValueError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in _bits(g.adj[v] & mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    return induced_subgraph(g, ((1 << g.n) - 1) & ~(1 << v))


def add_vertex(g: Graph, nbr_mask: int) -> Graph:
    """New graph with an extra vertex n adjacent to the masked vertices."""
    if nbr_mask >> g.n:
        raise ValueError("neighbour mask references missing vertices")
    n = g.n + 1
    adj = list(g.adj) + [nbr_mask]
    for u in _bits(nbr_mask):
        adj[u] |= 1 << g.n
    return Graph(n, tuple(adj))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("loops are not allowed")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def contract_vertices(g: Graph, u: int, v: int):
    """Identify two vertices.

    Adjacent vertices yield the LOOP marker (the identified graph would carry
    a loop, so every colouring count downstream is zero).  Otherwise the
    smaller label survives with the union of both neighbourhoods, parallel
    edges collapse, and labels above the removed one shift down by one.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if g.has_edge(u, v):
        return LOOP
    lo, hi = (u, v) if u < v else (v, u)
    merged = (g.adj[lo] | g.adj[hi]) & ~(1 << lo) & ~(1 << hi)
    adj = []
    for w in range(g.n):
        if w == hi:
            continue
        mask = merged if w == lo else g.adj[w]
        if w != lo and (mask >> hi) & 1:
            mask = (mask & ~(1 << hi)) | (1 << lo)
        low = mask & ((1 << hi) - 1)
        adj.append(low | ((mask >> (hi + 1)) << hi))
    return Graph(g.n - 1, tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the permutation old-label -> new-label."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex labels")
    adj = [0] * g.n
    for v in range(g.n):
        for u in _bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(adj))


# ---------------------------------------------------------------------------
# Structure predicates
# ---------------------------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def min_degree(g: Graph) -> int:
    return min(m.bit_count() for m in g.adj)


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and g.edge_count == g.n
        and all(m.bit_count() == 2 for m in g.adj)
        and is_connected(g)
    )


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in _bits(g.adj[u] >> (u + 1)):
            if g.adj[u] & g.adj[u + 1 + v]:
                return False
    return True


def bipartition(g: Graph) -> tuple[int, int] | None:
    """(plus_mask, minus_mask) of a proper 2-colouring, or None if none exists.

    Deterministic: each component is BFS-coloured from its smallest vertex,
    which lands in the plus side.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    plus = sum(1 << v for v in range(g.n) if side[v] == 0)
    return plus, ((1 << g.n) - 1) & ~plus


def has_twins(g: Graph) -> bool:
    """True iff some pair u, v satisfies N(u)\\{v} == N(v)\\{u}."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                return True
    return False


def is_2_induced(g: Graph, subset: int) -> bool:
    """True iff every vertex outside the subset has at most one neighbour in it."""
    if subset >> g.n:
        raise ValueError("subset references missing vertices")
    outside = ((1 << g.n) - 1) & ~subset
    return all((g.adj[v] & subset).bit_count() <= 1 for v in _bits(outside))


def _bfs_distances(g: Graph, start: int) -> list[int]:
    dist = [-1] * g.n
    dist[start] = 0
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = d
    return dist


def shortest_odd_cycle(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None when the graph is bipartite.

    For every root the BFS distance sums over each edge give the shortest odd
    closed walk through the root; a shortest odd closed walk is a cycle.
    """
    best = None
    edges = g.edges()
    for start in range(g.n):
        dist = _bfs_distances(g, start)
        for a, b in edges:
            if dist[a] < 0 or dist[b] < 0:
                continue
            length = dist[a] + dist[b] + 1
            if length % 2 == 1 and (best is None or length < best):
                best = length
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest cycle, or None for a forest."""
    best = None  # (length, root, a, b, dist, parent)
    for start in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in _bits(g.adj[v]):
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
        for a, b in g.edges():
            if dist[a] < 0 or dist[b] < 0 or parent[a] == b or parent[b] == a:
                continue
            length = dist[a] + dist[b] + 1
            if best is None or length < best[0]:
                best = (length, start, a, b, dist[:], parent[:])
    if best is None:
        return None
    _, _, a, b, dist, parent = best
    path_a = []
    v = a
    while v != -1:
        path_a.append(v)
        v = parent[v]
    path_b = []
    v = b
    while v != -1:
        path_b.append(v)
        v = parent[v]
    # Drop the common tail above the meeting point, keep it once.
    while len(path_a) >= 2 and len(path_b) >= 2 and path_a[-2] == path_b[-2]:
        path_a.pop()
        path_b.pop()
    cycle = path_a[:-1] + list(reversed(path_b))
    return cycle


def shortest_cycle_edge(g: Graph) -> tuple[int, int] | None:
    """One edge lying on a shortest cycle (None for forests)."""
    cycle = shortest_cycle(g)
    if cycle is None:
        return None
    return cycle[0], cycle[-1]


def find_cut_vertex(g: Graph) -> int | None:
    """Some cut vertex of a connected graph, or None if it is 2-connected."""
    if g.n <= 2:
        return None
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & rest & ~comp
            comp |= frontier
        if comp != rest:
            return v
    return None


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and find_cut_vertex(g) is None


def leaf_pruned_core(g: Graph) -> Graph | None:
    """Repeatedly strip vertices of degree <= 1; None when nothing survives.

    The survivor has minimum degree >= 2.  Trees (and single vertices) prune
    away completely, which is the None case.
    """
    if not is_connected(g):
        raise ValueError("leaf pruning is defined for connected graphs")
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    if alive == 0:
        return None
    return induced_subgraph(g, alive)


# ---------------------------------------------------------------------------
# Colourability and the chromatic number
# ---------------------------------------------------------------------------


def _colourable(g: Graph, x: int) -> bool:
    """Exact x-colourability by backtracking.

    Vertices are taken in descending-degree order and a new colour class is
    only ever opened as "first unused colour", which prunes colour-permutation
    symmetry without affecting existence.
    """
    if x >= g.n:
        return True
    if x <= 0:
        return False
    order = sorted(range(g.n), key=lambda v: -g.adj[v].bit_count())
    colour = [-1] * g.n
    adj = g.adj

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = 0
        for u in _bits(adj[v]):
            if colour[u] >= 0:
                forbidden |= 1 << colour[u]
        limit = min(x, used + 1)
        for c in range(limit):
            if (forbidden >> c) & 1:
                continue
            colour[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Least x admitting a proper x-colouring, by incremental exact search."""
    for x in range(1, g.n + 1):
        if _colourable(g, x):
            return x
    return g.n


def is_vertex_critical(g: Graph, k: int) -> bool:
    """True iff deleting any single vertex drops the chromatic number below k."""
    if chromatic_number(g) != k:
        raise ValueError(f"graph is not {k}-chromatic")
    if g.n == 1:
        return True
    return all(_colourable(delete_vertex(g, v), k - 1) for v in range(g.n))


def is_edge_critical(g: Graph, k: int) -> bool:
    """True iff deleting any single edge drops the chromatic number below k."""
    if chromatic_number(g) != k:
        raise ValueError(f"graph is not {k}-chromatic")
    return all(_colourable(delete_edge(g, u, v), k - 1) for u, v in g.edges())


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class key: equal keys iff isomorphic (supported for n <= 12).

    Iterated degree refinement first; the stable colour classes are then
    searched exhaustively (with lexicographic pruning) for the labelling that
    maximises the packed upper-triangle adjacency string.  The key is that
    maximal string prefixed by the vertex count.
    """
    if g.n > CANONICAL_CAP:
        raise ValueError(f"canonical form supported only for n <= {CANONICAL_CAP}")
    return _canonical_cached(g)


@lru_cache(maxsize=1 << 18)
def _canonical_cached(g: Graph) -> bytes:
    n = g.n
    if n == 1:
        return bytes([1])
    colour = _refine(n, g.adj)
    rows = _max_label_rows(n, g.adj, colour)
    acc = 0
    total = 0
    for p in range(1, n):
        acc = (acc << p) | rows[p]
        total += p
    return bytes([n]) + acc.to_bytes((total + 7) // 8, "big")


def _refine(n: int, adj: tuple[int, ...]) -> list[int]:
    """Stable vertex colouring under (colour, sorted neighbour colours) updates.

    New colour ids are assigned by sorting signatures, so they are invariant
    under relabelling; once the partition is stable the ids are a fixed point.
    """
    colour = [0] * n
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colour[u] for u in _bits(adj[v]))
            sigs.append((colour[v], tuple(nb)))
        ordered = sorted(set(sigs))
        remap = {s: i for i, s in enumerate(ordered)}
        new = [remap[s] for s in sigs]
        if new == colour:
            return colour
        colour = new


def _max_label_rows(n: int, adj: tuple[int, ...], colour: list[int]) -> list[int]:
    """Row codes of the colour-respecting labelling maximising the adjacency string.

    Position p's row code packs adjacency to positions 0..p-1 (position 0 most
    significant).  Labellings are constrained to map each refinement cell onto
    a fixed block of positions, which preserves exactness: isomorphisms map
    cells to equally-coloured cells.
    """
    order = sorted(range(n), key=lambda v: colour[v])
    pos_colour = [colour[v] for v in order]
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)

    used = [False] * n
    codes = [0] * n  # adjacency-to-placed prefix per vertex
    cur: list[int] = [0] * n
    best: list[int] | None = None

    def place(v: int):
        for u in range(n):
            codes[u] = (codes[u] << 1) | ((adj[u] >> v) & 1)

    def unplace():
        for u in range(n):
            codes[u] >>= 1

    # Greedy descent seeds the bound.
    greedy: list[int] = []
    for p in range(n):
        cand = max(
            (v for v in cells[pos_colour[p]] if not used[v]),
            key=lambda v: codes[v],
        )
        used[cand] = True
        greedy.append(cand)
        cur[p] = codes[cand]
        place(cand)
    best = cur[:]
    for v in reversed(greedy):
        unplace()
        used[v] = False

    def search(p: int, tight: bool):
        nonlocal best
        if p == n:
            if cur > best:
                best = cur[:]
            return
        cands = sorted(
            ((codes[v], v) for v in cells[pos_colour[p]] if not used[v]),
            reverse=True,
        )
        for code, v in cands:
            branch_tight = tight
            if tight:
                if code < best[p]:
                    break  # descending order: the rest are worse
                branch_tight = code == best[p]
            used[v] = True
            cur[p] = code
            place(v)
            search(p + 1, branch_tight)
            unplace()
            used[v] = False

    search(0, True)
    return best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph.from_edges(k, list(itertools.combinations(range(k), 2)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both classes must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def make_theta(r1: int, r2: int, r3: int) -> Graph:
    """Two branch vertices joined by three internally disjoint paths.

    Path lengths must satisfy 1 <= r1 <= r2 <= r3 with r2 >= 2, which keeps
    the graph simple.  theta(2, 2, 2) is K_{2,3}.
    """
    if not (1 <= r1 <= r2 <= r3):
        raise ValueError("path lengths must satisfy 1 <= r1 <= r2 <= r3")
    if r2 < 2:
        raise ValueError("at most one path may be a single edge")
    edges = []
    nxt = 2
    for r in (r1, r2, r3):
        prev = 0
        for _ in range(r - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def make_k4_with_trees(tree_spec: Sequence[TreeSpec]) -> Graph:
    """K4 with a rooted tree grown from each clique vertex.

    ``tree_spec`` lists four nested-tuple trees; ``()`` contributes nothing
    beyond the clique vertex itself, so four empty trees give plain K4.
    """
    if len(tree_spec) != 4:
        raise ValueError("exactly four rooted trees are required")
    edges = list(itertools.combinations(range(4), 2))
    nxt = 4

    def grow(root: int, spec: TreeSpec):
        nonlocal nxt
        for child in spec:
            v = nxt
            nxt += 1
            edges.append((root, v))
            grow(v, child)

    for root, spec in enumerate(tree_spec):
        grow(root, spec)
    return Graph.from_edges(nxt, edges)
