'''
Copyright 2024 the pynetmod authors
This file is part of pynetmod.

pynetmod is free software: you can redistribute it 
and/or modify it under the terms of the GNU General Public License as 
published by the Free Software Foundation, either version 3 of the 
License, or (at your option) any later version.

pynetmod is distributed in the hope that it will 
be useful, but WITHOUT ANY WARRANTY; without even the implied warranty 
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with pynetmod.  
If not, see <http://www.gnu.org/licenses/>.
'''

import unittest
from math import comb

import networkx as nx
from hypothesis import given, settings as hsettings, strategies as st

from pynetmod.green import GraphMap
from pynetmod.kneser import (Injection, k_subsets, subset_rank, kneser_graph, subsets_map, kneser_embedding,
                             kneser_laxator)

@st.composite
def injections(draw, max_size:int=5):
    n = draw(st.integers(0, max_size))
    m = draw(st.integers(0, n))
    images = draw(st.permutations(range(n)))
    return Injection(m, n, tuple(images[:m]))

class TestInjection(unittest.TestCase):

    def test_valid(self):
        self.assertRaises(ValueError, Injection, 2, 3, (0, 0))
        self.assertRaises(ValueError, Injection, 2, 3, (0, 3))
        self.assertRaises(ValueError, Injection, 2, 3, (0,))
        self.assertRaises(ValueError, Injection, -1, 3, ())

    def test_compose(self):
        f = Injection(2, 3, (2, 0))
        g = Injection(3, 4, (1, 3, 0))
        self.assertEqual(g.compose(f).mapping, (0, 1))
        self.assertEqual(f.compose(Injection.identity(2)), f)
        self.assertRaises(ValueError, f.compose, g)

    def test_inclusion(self):
        self.assertEqual(Injection.inclusion(2, 4).mapping, (0, 1))

class TestKSubsets(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(len(k_subsets(4, 2)), 6)
        self.assertEqual(k_subsets(5, 0), ((),))
        self.assertEqual(len(k_subsets(5, 2)), 10)
        self.assertEqual(k_subsets(2, 3), ())
        self.assertRaises(ValueError, k_subsets, -1, 2)

    def test_colex(self):
        self.assertEqual(k_subsets(4, 2), ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)))

    def test_prefix(self):
        for n in range(6):
            self.assertEqual(k_subsets(n + 1, 2)[:comb(n, 2)], k_subsets(n, 2))

    def test_rank(self):
        for n in range(7):
            for k in range(4):
                for i, s in enumerate(k_subsets(n, k)):
                    self.assertEqual(subset_rank(s), i)

class TestKneserGraph(unittest.TestCase):

    def test_kg_4_2(self):
        g = kneser_graph(4, 2)
        self.assertEqual(g.n_vertices, 6)
        subsets = k_subsets(4, 2)
        edges = {frozenset((subsets[u], subsets[v])) for u, v in g.edges}
        expected = {frozenset(((0, 1), (2, 3))), frozenset(((0, 2), (1, 3))), frozenset(((0, 3), (1, 2)))}
        self.assertEqual(edges, expected)

    def test_kg_3_2(self):
        g = kneser_graph(3, 2)
        self.assertEqual((g.n_vertices, len(g.edges)), (3, 0))

    def test_petersen(self):
        g = kneser_graph(5, 2)
        self.assertEqual((g.n_vertices, len(g.edges)), (10, 15))
        self.assertEqual(set(g.degrees()), {3})
        h = g.to_networkx()
        self.assertEqual(nx.girth(h), 5)
        self.assertTrue(nx.is_isomorphic(h, nx.petersen_graph()))

    def test_counts(self):
        for n in range(9):
            for k in range(1, 4):
                g = kneser_graph(n, k)
                self.assertEqual(g.n_vertices, comb(n, k))
                self.assertEqual(len(g.edges), comb(n, k) * comb(max(n - k, 0), k) // 2)

class TestKneserEmbedding(unittest.TestCase):

    def test_identity(self):
        e = kneser_embedding(Injection.identity(4), 2)
        self.assertEqual(e, GraphMap.identity(kneser_graph(4, 2)))
        self.assertEqual(subsets_map(Injection.identity(3), 2), {s: s for s in k_subsets(3, 2)})

    def test_inclusion(self):
        self.assertEqual(subsets_map(Injection(2, 4, (3, 1)), 2), {(0, 1): (1, 3)})

    @hsettings(max_examples=40, deadline=None)
    @given(injections())
    def test_embedding(self, f):
        self.assertTrue(kneser_embedding(f, 2).is_embedding())

    @hsettings(max_examples=40, deadline=None)
    @given(injections(), st.data())
    def test_functorial(self, f, data):
        extra = data.draw(st.integers(0, 2))
        images = data.draw(st.permutations(range(f.codomain_size + extra)))
        g = Injection(f.codomain_size, f.codomain_size + extra, tuple(images[:f.codomain_size]))
        lhs = kneser_embedding(g.compose(f), 2)
        rhs = kneser_embedding(g, 2).compose(kneser_embedding(f, 2))
        self.assertEqual(lhs, rhs)

class TestKneserLaxator(unittest.TestCase):

    def test_cross_adjacency(self):
        lax = kneser_laxator(2, 2, 2)
        self.assertEqual(lax.vertex_map, (0, 5))
        self.assertTrue(lax.target.adjacent(0, 5))

    def test_empty_right(self):
        lax = kneser_laxator(4, 0, 2)
        self.assertEqual(lax.vertex_map, tuple(range(6)))

    def test_injective_edge_preserving(self):
        for m in range(5):
            for n in range(5):
                lax = kneser_laxator(m, n, 2)
                self.assertTrue(lax.is_injective())
                self.assertTrue(lax.preserves_edges())

    def test_associative(self):
        a, b, c = 2, 2, 3
        ab, bc = kneser_laxator(a, b, 2), kneser_laxator(b, c, 2)
        ab_c, a_bc = kneser_laxator(a + b, c, 2), kneser_laxator(a, b + c, 2)
        na, nb, nc = comb(a, 2), comb(b, 2), comb(c, 2)
        for v in range(na + nb + nc):
            if v < na + nb: left = ab_c(ab(v))
            else: left = ab_c(comb(a + b, 2) + v - na - nb)
            if v < na: right = a_bc(v)
            else: right = a_bc(na + bc(v - na))
            self.assertEqual(left, right)
