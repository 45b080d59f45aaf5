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
from itertools import product

from pynetmod.algebra import boolean_monoid, path_band_monoid
from pynetmod.enums import EVarieties
from pynetmod.exceptions import ContextMismatchError
from pynetmod.kneser import k_subsets
from pynetmod.network_model import (Permutation, network_model, simple_graph_model, multigraph_model, unit_hom,
                                    induced_hom, counit_permutation, transposition_counit_permutation,
                                    counit_map, counit_eval)

B = boolean_monoid()
P = path_band_monoid()

class TestCounitPermutation(unittest.TestCase):

    def test_places_first_two_points(self):
        for n in range(2, 6):
            for i, j in k_subsets(n, 2):
                for rule in (counit_permutation, transposition_counit_permutation):
                    sigma = rule(i, j, n)
                    self.assertEqual((sigma(0), sigma(1)), (i, j))

    def test_order_kept(self):
        self.assertEqual(counit_permutation(1, 3, 5), Permutation((1, 3, 0, 2, 4)))
        self.assertEqual(transposition_counit_permutation(0, 1, 4), Permutation.identity(4))

class TestCounit(unittest.TestCase):

    def test_counit_map(self):
        sg = simple_graph_model()
        c = counit_map(sg, 0, 2, 3)
        self.assertEqual(c(sg.edge(2, 0, 1, True)), sg.edge(3, 0, 2, True))
        self.assertEqual(c(sg.identity(2)), sg.identity(3))

    def test_single_letter(self):
        sg = simple_graph_model()
        lifted = network_model(sg.constituent(2), EVarieties.CMON)
        g = lifted.edge(4, 1, 3, sg.edge(2, 0, 1, True))
        self.assertEqual(counit_eval(sg, g), sg.edge(4, 1, 3, True))

    def test_empty_word(self):
        mg = multigraph_model()
        lifted = network_model(mg.constituent(2))
        self.assertEqual(counit_eval(mg, lifted.identity(3)), mg.identity(3))

    def test_multigraph(self):
        mg = multigraph_model()
        lifted = network_model(mg.constituent(2))
        two, three = mg.edge(2, 0, 1, 2), mg.edge(2, 0, 1, 3)
        g = lifted.element(3, [(0, 1, two), (1, 2, three), (0, 1, three)])
        self.assertEqual(counit_eval(mg, g), mg.element(3, [(0, 1, 5), (1, 2, 3)]))

    def test_permutations_agree(self):
        for f, value in ((simple_graph_model(), True), (multigraph_model(), 4)):
            lifted = network_model(f.constituent(2))
            x = f.edge(2, 0, 1, value)
            for i, j in k_subsets(4, 2):
                g = lifted.element(4, [(i, j, x), (0, 3, x)])
                self.assertEqual(counit_eval(f, g), counit_eval(f, g, transposition_counit_permutation))

    def test_unit_of_free_model(self):
        ctx = network_model(B, EVarieties.CMON)
        lifted = network_model(ctx.constituent(2), EVarieties.CMON)
        x = ctx.edge(2, 0, 1, True)
        self.assertEqual(counit_eval(ctx, lifted.edge(2, 0, 1, x)), x)

    def test_triangle_identity(self):
        for m, variety in product((B, P), EVarieties):
            if variety == EVarieties.CMON and m is P: continue
            ctx = network_model(m, variety)
            lifted = network_model(ctx.constituent(2), variety)
            eta = unit_hom(ctx)
            for n in range(4):
                for g in ctx.enumerate(n, 2):
                    self.assertEqual(counit_eval(ctx, induced_hom(eta, g, lifted, check=False)), g)

    def test_mismatch(self):
        sg = simple_graph_model()
        g = network_model(B).edge(2, 0, 1, True)
        self.assertRaises(ContextMismatchError, counit_eval, sg, g)
