import itertools
import random

import networkx as nx
import pytest

from chromacount.graphs import (
    LOOP,
    Graph,
    add_edge,
    bipartition,
    canonical_form,
    chromatic_number,
    contract_vertices,
    delete_edge,
    delete_vertex,
    emit_graph6,
    has_twins,
    is_2_induced,
    is_biconnected,
    is_connected,
    is_edge_critical,
    is_triangle_free,
    is_vertex_critical,
    leaf_pruned_core,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_k4_with_trees,
    make_path,
    make_theta,
    min_degree,
    parse_graph6,
    relabel,
    shortest_odd_cycle,
)
from conftest import random_graph
from oracles import brute_chromatic_number, permutation_isomorphic


def nx_of(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def moser_spindle() -> Graph:
    return Graph.from_edges(
        7,
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)],
    )


class TestGraphBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(2, (1, 0))  # asymmetric
        with pytest.raises(ValueError):
            Graph(1, (1,))  # loop
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_degrees_and_edges(self):
        g = make_complete(4)
        assert g.degrees() == [3, 3, 3, 3]
        assert g.edge_count == 6
        assert sum(g.degrees()) == 2 * g.edge_count


class TestGraph6:
    def test_known_encodings(self):
        assert emit_graph6(Graph(1, (0,))) == "@"
        assert emit_graph6(make_complete(4)) == "C~"
        assert emit_graph6(make_complete(2)) == "A_"
        assert parse_graph6("C~") == make_complete(4)
        assert parse_graph6("A_") == make_complete(2)
        assert parse_graph6("@") == Graph(1, (0,))

    def test_cycle_against_reference_encoder(self):
        for n in (3, 5, 8, 20):
            g = make_cycle(n)
            ref = nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()
            assert emit_graph6(g) == ref

    def test_round_trip_random(self, rng):
        for _ in range(400):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, rng.random())
            assert parse_graph6(emit_graph6(g)) == g

    def test_round_trip_large_vertex_counts(self, rng):
        for n in (63, 64):
            g = random_graph(rng, n, 0.1)
            s = emit_graph6(g)
            assert s.startswith("~")
            assert parse_graph6(s) == g
            ref = nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()
            assert s == ref

    def test_header_prefix_accepted(self):
        assert parse_graph6(">>graph6<<C~") == make_complete(4)

    def test_malformed_inputs(self):
        with pytest.raises(ValueError):
            parse_graph6("")
        with pytest.raises(ValueError):
            parse_graph6("C~~")  # payload too long
        with pytest.raises(ValueError):
            parse_graph6("C")  # payload too short
        with pytest.raises(ValueError):
            parse_graph6("~~?????")  # > 64 vertices
        with pytest.raises(ValueError):
            parse_graph6("\x1f")  # byte below 63

    def test_nonzero_padding_rejected(self):
        # K1 on two vertices has 1 payload bit; set a padding bit by hand.
        bad = "A" + chr(63 + 0b000001)
        with pytest.raises(ValueError):
            parse_graph6(bad)


class TestEditing:
    def test_delete_edge(self):
        assert delete_edge(make_complete(3), 0, 1) == Graph.from_edges(3, [(0, 2), (1, 2)])
        p4 = delete_edge(make_cycle(4), 3, 0)
        assert canonical_form(p4) == canonical_form(make_path(4))
        k4m = delete_edge(make_complete(4), 0, 1)
        assert k4m.edge_count == 5
        with pytest.raises(ValueError):
            delete_edge(make_path(3), 0, 2)

    def test_contract_adjacent_gives_loop(self):
        assert contract_vertices(make_complete(3), 0, 1) is LOOP

    def test_contract_diamond_degree_two_pair(self):
        # The two nonadjacent vertices of K4 minus an edge collapse to K3.
        diamond = delete_edge(make_complete(4), 0, 1)
        result = contract_vertices(diamond, 0, 1)
        assert canonical_form(result) == canonical_form(make_complete(3))

    def test_contract_isolated_vertices(self):
        g = Graph(3, (0, 0, 0))
        assert contract_vertices(g, 0, 2) == Graph(2, (0, 0))

    def test_contract_label_shift(self):
        # Surviving vertex keeps the smaller label; higher labels shift down.
        g = make_path(4)  # 0-1-2-3
        got = contract_vertices(g, 1, 3)
        assert got == Graph.from_edges(3, [(0, 1), (1, 2)])

    def test_contraction_never_lowers_chromatic_number(self):
        from chromacount.verify import enumerate_connected

        for g in enumerate_connected(6):
            chi = chromatic_number(g)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if g.has_edge(u, v):
                        continue
                    assert chromatic_number(contract_vertices(g, u, v)) >= chi


class TestPredicates:
    def test_chromatic_number_examples(self):
        assert chromatic_number(make_complete(4)) == 4
        assert chromatic_number(make_cycle(5)) == 3
        assert chromatic_number(make_cycle(6)) == 2
        from chromacount.verify import groetzsch_graph

        g = groetzsch_graph()
        assert is_triangle_free(g)
        assert chromatic_number(g) == 4

    def test_chromatic_number_against_brute_force(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 6), rng.random())
            assert chromatic_number(g) == brute_chromatic_number(g)

    def test_is_2_induced(self):
        c6 = make_cycle(6)
        assert is_2_induced(c6, 0b000011)  # one edge of the cycle
        k4 = make_complete(4)
        assert not is_2_induced(k4, 0b0111)  # triangle seen 3x by the rest
        # K23 plus a pendant on a degree-2 vertex; the pendant vertex alone.
        g = Graph.from_edges(6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5)])
        mask = 1 << 5
        expected = all(
            (g.adj[v] & mask).bit_count() <= 1 for v in range(6) if v != 5
        )
        assert is_2_induced(g, mask) == expected is True

    def test_shortest_odd_cycle(self):
        assert shortest_odd_cycle(make_cycle(7)) == 7
        assert shortest_odd_cycle(make_complete_bipartite(2, 3)) is None
        assert shortest_odd_cycle(petersen()) == 5
        assert shortest_odd_cycle(make_path(5)) is None

    def test_shortest_odd_cycle_matches_exhaustive(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 7), rng.random())
            lengths = [
                len(c)
                for c in nx.simple_cycles(nx_of(g))
                if len(c) % 2 == 1
            ]
            assert shortest_odd_cycle(g) == (min(lengths) if lengths else None)

    def test_odd_cycle_none_iff_bipartite(self, rng):
        for _ in range(80):
            g = random_graph(rng, rng.randint(2, 8), rng.random())
            assert (shortest_odd_cycle(g) is None) == (bipartition(g) is not None)

    def test_criticality(self):
        k4 = make_complete(4)
        assert is_vertex_critical(k4, 4)
        assert is_edge_critical(k4, 4)
        pendant = make_k4_with_trees((((),), (), (), ()))  # K4 + one leaf
        assert chromatic_number(pendant) == 4
        assert not is_vertex_critical(pendant, 4)
        spindle = moser_spindle()
        assert is_vertex_critical(spindle, 4)
        assert is_edge_critical(spindle, 4)
        with pytest.raises(ValueError):
            is_vertex_critical(make_cycle(5), 4)

    def test_has_twins(self):
        assert has_twins(make_complete_bipartite(2, 3))
        assert not has_twins(make_cycle(5))
        assert has_twins(make_complete(4))

    def test_leaf_pruned_core(self):
        assert leaf_pruned_core(make_path(5)) is None
        g = make_k4_with_trees(((), (), ((),), (((),),)))
        core = leaf_pruned_core(g)
        assert core is not None and core.n == 4 and core.edge_count == 6
        c5_pendant = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
        assert canonical_form(leaf_pruned_core(c5_pendant)) == canonical_form(make_cycle(5))

    def test_leaf_pruned_core_min_degree(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 8), rng.random())
            if not is_connected(g):
                continue
            core = leaf_pruned_core(g)
            assert core is None or min_degree(core) >= 2

    def test_biconnected(self):
        assert is_biconnected(make_cycle(5))
        assert not is_biconnected(make_path(4))


class TestCanonicalForm:
    def test_relabelled_cycles_agree(self, rng):
        c5 = make_cycle(5)
        for _ in range(10):
            perm = list(range(5))
            rng.shuffle(perm)
            assert canonical_form(relabel(c5, perm)) == canonical_form(c5)

    def test_c6_equals_k33_minus_matching(self):
        k33 = make_complete_bipartite(3, 3)
        stripped = k33
        for i in range(3):
            stripped = delete_edge(stripped, i, 3 + i)
        assert canonical_form(stripped) == canonical_form(make_cycle(6))

    def test_c6_differs_from_two_triangles(self):
        two_k3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert canonical_form(two_k3) != canonical_form(make_cycle(6))

    def test_against_permutation_isomorphism(self, rng):
        # 500 random pairs, about half built as relabellings.
        agree = 0
        for _ in range(500):
            n = rng.randint(2, 7)
            g = random_graph(rng, n, rng.random())
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                h = relabel(g, perm)
            else:
                h = random_graph(rng, n, rng.random())
            assert (canonical_form(g) == canonical_form(h)) == permutation_isomorphic(g, h)
            agree += 1
        assert agree == 500

    def test_cap(self):
        with pytest.raises(ValueError):
            canonical_form(random_graph(random.Random(1), 13, 0.5))


class TestGenerators:
    def test_theta_is_k23(self):
        assert canonical_form(make_theta(2, 2, 2)) == canonical_form(
            make_complete_bipartite(2, 3)
        )

    def test_theta_parameters(self):
        with pytest.raises(ValueError):
            make_theta(1, 1, 3)  # double edge
        with pytest.raises(ValueError):
            make_theta(2, 1, 2)  # not sorted
        g = make_theta(1, 2, 2)
        assert g.n == 4 and g.edge_count == 5

    def test_k4_with_trees(self):
        assert make_k4_with_trees(((), (), (), ())) == make_complete(4)
        g = make_k4_with_trees((((), ()), (), ((),), ()))
        assert g.n == 4 + 3
        assert is_connected(g)
        with pytest.raises(ValueError):
            make_k4_with_trees(((), ()))

    def test_cycle_three_is_triangle(self):
        assert make_cycle(3) == make_complete(3)

    def test_path_and_star(self):
        assert make_path(1).n == 1
        star = make_complete_bipartite(1, 3)
        assert sorted(star.degrees()) == [1, 1, 1, 3]
