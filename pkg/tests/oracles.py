"""Independent brute-force oracles used only by the tests.

Everything here avoids the package's own polynomial and canonical-form
machinery: counting is by direct product enumeration, isomorphism by raw
permutation scans, and graph6 cross-checks go through networkx.
"""

from __future__ import annotations

import itertools

from chromacount.graphs import Graph


def product_count_colourings(g: Graph, x: int) -> int:
    """Count proper colourings by enumerating every assignment (tiny inputs)."""
    total = 0
    edges = g.edges()
    for combo in itertools.product(range(x), repeat=g.n):
        if all(combo[u] != combo[v] for u, v in edges):
            total += 1
    return total


def brute_chromatic_number(g: Graph) -> int:
    for x in range(1, g.n + 1):
        if product_count_colourings(g, x) > 0:
            return x
    return g.n


def permutation_isomorphic(g: Graph, h: Graph) -> bool:
    """Raw all-permutations isomorphism test."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    for perm in itertools.permutations(range(n)):
        if all(
            ((h.adj[perm[v]] >> perm[u]) & 1) == ((g.adj[v] >> u) & 1)
            for v in range(n)
            for u in range(v + 1, n)
        ):
            return True
    return False


def automorphism_count(g: Graph) -> int:
    n = g.n
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(
            ((g.adj[perm[v]] >> perm[u]) & 1) == ((g.adj[v] >> u) & 1)
            for v in range(n)
            for u in range(v + 1, n)
        ):
            count += 1
    return count


def labelled_connected_count(n: int) -> int:
    """Number of labelled connected graphs on n vertices, by scanning all
    edge subsets with a union-find connectivity check."""
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        parts = n
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    parts -= 1
        if parts == 1:
            total += 1
    return total


def brute_connected_classes(n: int) -> list[Graph]:
    """Isomorphism classes of connected graphs by raw permutation dedupe
    (practical for n <= 5)."""
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[int] = set()
    out: list[Graph] = []
    perms = list(itertools.permutations(range(n)))
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        g = Graph.from_edges(n, edges)
        if len([c for c in _component_masks(g)]) != 1:
            continue
        key = min(_edge_mask(g, perm, pairs) for perm in perms)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


def _edge_mask(g: Graph, perm, pairs) -> int:
    mask = 0
    index = {pair: k for k, pair in enumerate(pairs)}
    for u, v in g.edges():
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        mask |= 1 << index[(a, b)]
    return mask


def _component_masks(g: Graph):
    seen = 0
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= g.adj[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        yield comp
