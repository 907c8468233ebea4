import itertools

import pytest
from hypothesis import given, strategies as st

from sixflow import InputError, Multigraph, components
from sixflow.testkit import random_2ec_multigraph

from conftest import small_graphs


class TestBuild:
    def test_empty(self):
        g = Multigraph.build(1, [])
        assert g.n == 1 and g.m == 0

    def test_single_loop(self):
        g = Multigraph.build(1, [(0, 0)])
        assert g.incidence(0) == [(0, +1), (0, -1)]

    def test_triangle_incidence(self, triangle):
        assert sorted(eid for eid, _ in triangle.incidence(1)) == [0, 1]
        assert [e.id for e in triangle.edges()] == [0, 1, 2]

    def test_endpoint_out_of_range(self):
        with pytest.raises(InputError):
            Multigraph.build(2, [(0, 2)])


class TestContract:
    def test_triangle_one_edge(self, triangle):
        h, cmap = triangle.contract({0})
        assert h.n == 2 and sorted(h.edge_ids) == [1, 2]
        # surviving digon: endpoints remapped through the vertex image
        img = cmap.vertex_image
        assert img[0] == img[1] != img[2]
        assert h.endpoints(1) == (img[1], img[2])
        assert h.endpoints(2) == (img[2], img[0])

    def test_digon_to_loop(self, digon):
        h, _ = digon.contract({0})
        assert h.n == 1
        assert h.edge(1).is_loop

    def test_k4_triangle_contraction(self, k4):
        # contract the triangle avoiding vertex 0: edges 3, 4, 5
        h, cmap = k4.contract({3, 4, 5})
        assert h.n == 2
        img = cmap.vertex_image
        assert img[1] == img[2] == img[3] != img[0]
        # three parallel edges from 0's image to the blob
        for eid in (0, 1, 2):
            assert h.endpoints(eid) == (img[0], img[1])

    def test_unknown_edge(self, triangle):
        with pytest.raises(InputError):
            triangle.contract({9})

    def test_empty_contraction_is_identity(self, k4):
        h, cmap = k4.contract(frozenset())
        assert h == k4
        assert cmap.vertex_image == tuple(range(4))

    def test_edge_count_invariant(self):
        for g in small_graphs(3, 4):
            ids = sorted(g.edge_ids)
            for r in range(len(ids) + 1):
                for s in itertools.combinations(ids, r):
                    h, cmap = g.contract(s)
                    assert h.m == g.m - len(s)
                    for eid in h.edge_ids:
                        t, hd = g.endpoints(eid)
                        img = cmap.vertex_image
                        assert h.endpoints(eid) == (img[t], img[hd])

    def test_edge_cuts_preserved(self):
        # every edge cut of G/S is an edge cut of G: check via pullback of
        # vertex bipartitions on all small graphs with one contracted edge
        for g in small_graphs(4, 4):
            for s_eid in g.edge_ids:
                h, cmap = g.contract({s_eid})
                img = cmap.vertex_image
                for bits in range(1, 2 ** h.n - 1):
                    side = {v for v in range(h.n) if bits >> v & 1}
                    cut_h = {
                        e.id for e in h.edges()
                        if (e.tail in side) != (e.head in side)
                    }
                    pre = {v for v in range(g.n) if img[v] in side}
                    cut_g = {
                        e.id for e in g.edges()
                        if (e.tail in pre) != (e.head in pre)
                    }
                    assert cut_h == cut_g


class TestReverse:
    def test_loop_unchanged(self):
        g = Multigraph.build(1, [(0, 0)])
        assert g.reverse_edge(0) == g

    def test_involution(self, triangle):
        assert triangle.reverse_edge(0).reverse_edge(0) == triangle

    def test_incidence_flips(self, triangle):
        r = triangle.reverse_edge(0)
        assert (0, +1) in triangle.incidence(0)
        assert (0, -1) in r.incidence(0)


class TestDeleteVertex:
    def test_triangle(self, triangle):
        g = triangle.delete_vertex(0)
        assert g.n == 2 and sorted(g.edge_ids) == [1]

    def test_k4(self, k4):
        g = k4.delete_vertex(0)
        assert g.n == 3 and g.m == 3
        assert len(components(g)) == 1

    def test_star(self):
        star = Multigraph.build(4, [(0, 1), (0, 2), (0, 3)])
        g = star.delete_vertex(0)
        assert g.n == 3 and g.m == 0

    def test_unknown_vertex(self, triangle):
        with pytest.raises(InputError):
            triangle.delete_vertex(7)


@given(st.integers(1, 30), st.integers(0, 20), st.integers(0, 1000))
def test_contract_all_gives_single_vertex(n, ears, seed):
    g = random_2ec_multigraph(n, ears, seed)
    h, cmap = g.contract(set(g.edge_ids))
    assert h.n == 1 and h.m == 0
    assert set(cmap.contracted) == set(g.edge_ids)
