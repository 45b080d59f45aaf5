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

from hypothesis import given, settings as hsettings, strategies as st

from pynetmod.algebra import boolean_monoid, nat_monoid, free_monoid, path_band_monoid, direct_product
from pynetmod.enums import EVarieties
from pynetmod.exceptions import (ContextMismatchError, UnknownComponentError, ElementNotInMonoidError,
                                 VarietyViolationError, NotAnAutomorphismError, CompatibilityError)
from pynetmod.green import (GreenContext, Letter, SimpleGraph, normalize, multiply, equal, aut_action,
                            universal_fold)
from pynetmod.kneser import kneser_graph
from pynetmod.algebra import identity_hom

B = boolean_monoid()
P = path_band_monoid()

def band_words(n_vertices:int, max_size:int=5):
    letter = st.tuples(st.integers(0, n_vertices - 1), st.sampled_from(P.elements))
    return st.lists(letter, max_size=max_size)

class TestGreenContext(unittest.TestCase):

    def test_valid_components(self):
        self.assertRaises(ValueError, GreenContext, SimpleGraph(2), (B,))
        self.assertRaises(VarietyViolationError, GreenContext, SimpleGraph(1), (nat_monoid(),), EVarieties.GMON)
        self.assertRaises(VarietyViolationError, GreenContext, SimpleGraph(1), (P,), EVarieties.CMON)

    def test_graphic_components_must_be_finite(self):
        f = free_monoid('a')
        self.assertRaises(VarietyViolationError, GreenContext, SimpleGraph(1), (f,), EVarieties.GMON)

    def test_validate_word(self):
        ctx = GreenContext(SimpleGraph(2), (B, B))
        self.assertEqual(ctx.validate_word([(1, True)]), (Letter(1, True),))
        self.assertRaises(UnknownComponentError, ctx.validate_word, [(2, True)])
        self.assertRaises(ElementNotInMonoidError, ctx.validate_word, [(0, 1)])

    def test_generators(self):
        ctx = GreenContext(SimpleGraph(2), (B, P))
        self.assertEqual(len(ctx.generators()), 6)
        self.assertEqual(ctx.generators()[0], Letter(0, True))

    def test_enumerate_edgeless(self):
        ctx = GreenContext(SimpleGraph.edgeless(2), (B, B))
        for length in range(6):
            self.assertEqual(len(ctx.enumerate(length)), 2 * length + 1)
        self.assertEqual(ctx.enumerate(0), [ctx.identity()])

    def test_enumerate_complete(self):
        # the Green product over a complete graph is the direct product
        for n, expected in ((2, 4), (3, 8)):
            ctx = GreenContext(SimpleGraph.complete(n), (B,) * n)
            self.assertEqual(len(ctx.enumerate(n + 2)), expected)

    def test_enumerate_sorted(self):
        ctx = GreenContext(SimpleGraph.path(3), (B,) * 3)
        elems = ctx.enumerate(3)
        keys = [ctx.word_key(e.word) for e in elems]
        self.assertEqual(keys, sorted(keys))

class TestNormalize(unittest.TestCase):

    def test_normal_forms_kept_per_context(self):
        a = GreenContext(SimpleGraph(2), (B, B))
        b = GreenContext(SimpleGraph(2), (B, B))
        x = a.normalize([(1, True), (0, True)])
        self.assertEqual(len(a._normal_forms), 1)
        self.assertEqual(len(b._normal_forms), 0)
        self.assertEqual(a.normalize([(1, True), (0, True)]), x)
        self.assertEqual(b.normalize([(1, True), (0, True)]).word, x.word)

    def test_disjoint_edges_commute(self):
        kg = kneser_graph(4, 2)
        # {0,1} has rank 0 and {2,3} rank 5 in colex order
        x = normalize([(0, True), (5, True)], kg, (B,) * 6)
        y = normalize([(5, True), (0, True)], kg, (B,) * 6)
        self.assertEqual(x.word, y.word)
        self.assertEqual(x.word, (Letter(0, True), Letter(5, True)))
        self.assertEqual(x.context.normalize(y.word), x)

    def test_identity_letter(self):
        ctx = GreenContext(SimpleGraph(2), (B, P))
        self.assertTrue(ctx.normalize([(0, False)]).is_identity())
        self.assertTrue(ctx.normalize([(1, '1'), (0, False)]).is_identity())

    def test_combine(self):
        f = free_monoid('ab')
        ctx = GreenContext(SimpleGraph.path(2), (f, f))
        x = ctx.normalize([(0, 'a'), (1, 'b'), (0, 'b')])
        self.assertEqual(x.word, (Letter(0, 'ab'), Letter(1, 'b')))

    def test_no_combine_across_non_commuting(self):
        f = free_monoid('ab')
        ctx = GreenContext(SimpleGraph(2), (f, f))
        x = ctx.normalize([(0, 'a'), (1, 'b'), (0, 'b')])
        self.assertEqual(len(x), 3)

    def test_lexmin(self):
        ctx = GreenContext(SimpleGraph.complete(2), (B, B))
        self.assertEqual(ctx.normalize([(1, True), (0, True)]).word, (Letter(0, True), Letter(1, True)))

    def test_not_idempotent_in_mon(self):
        ctx = GreenContext(SimpleGraph.edgeless(2), (B, B))
        ab = ctx.normalize([(0, True), (1, True)])
        self.assertNotEqual(ab * ab, ab)
        self.assertEqual(len(ab * ab), 4)

    def test_cmon(self):
        ctx = GreenContext(SimpleGraph.edgeless(2), (B, B), EVarieties.CMON)
        ab = ctx.normalize([(0, True), (1, True)])
        self.assertEqual(ab, ctx.normalize([(1, True), (0, True)]))
        self.assertEqual(ab * ab, ab)
        n = nat_monoid()
        ctx = GreenContext(SimpleGraph.edgeless(2), (n, n), EVarieties.CMON)
        x = ctx.normalize([(1, 2), (0, 1), (1, 3)])
        self.assertEqual(x.word, (Letter(0, 1), Letter(1, 5)))

    def test_gmon(self):
        ctx = GreenContext(SimpleGraph.edgeless(2), (B, B), EVarieties.GMON)
        a, b = ctx.generator(0, True), ctx.generator(1, True)
        self.assertEqual(a * b * a, a * b)
        self.assertEqual(a * b * a * b, a * b)
        self.assertNotEqual(a * b, b * a)

    def test_gmon_single_vertex(self):
        ctx = GreenContext(SimpleGraph(1), (P,), EVarieties.GMON)
        self.assertEqual(ctx.normalize([(0, 'a'), (0, 'b')]).word, (Letter(0, 'x'),))
        self.assertEqual(ctx.normalize([(0, 'x'), (0, 'a')]).word, (Letter(0, 'x'),))

    def test_gmon_least_factor(self):
        # c after a acts like b: a c = a b = x
        ctx = GreenContext(SimpleGraph.edgeless(2), (P, P), EVarieties.GMON)
        x = ctx.normalize([(0, 'a'), (1, 'b'), (0, 'c')])
        y = ctx.normalize([(0, 'a'), (1, 'b'), (0, 'b')])
        self.assertEqual(x, y)
        self.assertEqual(x.word, (Letter(0, 'a'), Letter(1, 'b'), Letter(0, 'b')))

    def test_gmon_graphic_law(self):
        ctx = GreenContext(SimpleGraph.path(3), (P,) * 3, EVarieties.GMON)
        elems = ctx.enumerate(2)
        for x in elems[::3]:
            for y in elems[::3]:
                self.assertEqual(x * y * x, x * y)

class TestMultiplyEqual(unittest.TestCase):

    def setUp(self) -> None:
        self.ctx = GreenContext(SimpleGraph.path(3), (P,) * 3)

    def test_identity(self):
        x = self.ctx.normalize([(0, 'a'), (2, 'c')])
        one = self.ctx.identity()
        self.assertEqual(multiply(x, one), x)
        self.assertEqual(multiply(one, x), x)

    def test_equal(self):
        x = self.ctx.normalize([(0, 'a')])
        self.assertTrue(equal(x, x))
        self.assertFalse(equal(x, self.ctx.identity()))

    def test_context_mismatch(self):
        other = GreenContext(SimpleGraph.path(3), (P,) * 3)
        x, y = self.ctx.generator(0, 'a'), other.generator(0, 'a')
        self.assertRaises(ContextMismatchError, multiply, x, y)
        self.assertRaises(ContextMismatchError, equal, x, y)
        self.assertNotEqual(x, y)

    @hsettings(max_examples=60, deadline=None)
    @given(band_words(3), band_words(3), band_words(3))
    def test_associative(self, u, v, w):
        x, y, z = (self.ctx.normalize(t) for t in (u, v, w))
        self.assertEqual((x * y) * z, x * (y * z))

    @hsettings(max_examples=60, deadline=None)
    @given(band_words(3, 6))
    def test_normal_form_is_fixed(self, u):
        x = self.ctx.normalize(u)
        self.assertEqual(self.ctx.normalize(x.word).word, x.word)

    @hsettings(max_examples=60, deadline=None)
    @given(band_words(3), band_words(3))
    def test_product_of_words(self, u, v):
        x = self.ctx.normalize(u) * self.ctx.normalize(v)
        self.assertEqual(x, self.ctx.normalize(u + v))
        self.assertEqual(hash(x), hash(self.ctx.normalize(u + v)))

class TestAutAction(unittest.TestCase):

    def test_identity(self):
        ctx = GreenContext(SimpleGraph.path(3), (B,) * 3)
        x = ctx.normalize([(0, True), (2, True)])
        self.assertEqual(aut_action((0, 1, 2), x), x)

    def test_swap(self):
        ctx = GreenContext(SimpleGraph(2), (B, B))
        x = aut_action((1, 0), ctx.generator(0, True))
        self.assertEqual(x.word, (Letter(1, True),))

    def test_not_an_automorphism(self):
        ctx = GreenContext(SimpleGraph.path(3), (B,) * 3)
        self.assertRaises(NotAnAutomorphismError, aut_action, (1, 0, 2), ctx.identity())
        ctx = GreenContext(SimpleGraph(2), (B, nat_monoid()))
        self.assertRaises(NotAnAutomorphismError, aut_action, (1, 0), ctx.identity())

    def test_homomorphism(self):
        ctx = GreenContext(SimpleGraph.path(3), (P,) * 3)
        perm = (2, 1, 0)
        x, y = ctx.normalize([(0, 'a'), (1, 'b')]), ctx.normalize([(2, 'c'), (0, 'b')])
        self.assertEqual(aut_action(perm, x * y), aut_action(perm, x) * aut_action(perm, y))

class TestUniversalFold(unittest.TestCase):

    def test_direct_product(self):
        bb = direct_product(B, B)
        ctx = GreenContext(SimpleGraph.complete(2), (B, B))
        maps = [bb.inclusion(0), bb.inclusion(1)]
        x = ctx.normalize([(1, True), (0, True)])
        self.assertEqual(universal_fold(x, maps), (True, True))
        self.assertEqual(universal_fold(ctx.generator(0, True), maps), (True, False))
        self.assertEqual(universal_fold(ctx.identity(), maps), (False, False))

    def test_mapping(self):
        bb = direct_product(B, B)
        ctx = GreenContext(SimpleGraph.complete(2), (B, B))
        maps = {0: bb.inclusion(0), 1: bb.inclusion(1)}
        self.assertEqual(universal_fold(ctx.generator(1, True), maps), (False, True))
        self.assertRaises(CompatibilityError, universal_fold, ctx.identity(), {0: bb.inclusion(0)})

    def test_non_commuting_images(self):
        ctx = GreenContext(SimpleGraph.complete(2), (P, P))
        maps = [identity_hom(P), identity_hom(P)]
        self.assertRaises(CompatibilityError, universal_fold, ctx.identity(), maps)
        # without adjacency nothing has to commute
        ctx = GreenContext(SimpleGraph(2), (P, P))
        x = ctx.normalize([(0, 'a'), (1, 'c')])
        self.assertEqual(universal_fold(x, maps), 'x')

    def test_wrong_source(self):
        ctx = GreenContext(SimpleGraph(1), (B,))
        self.assertRaises(CompatibilityError, universal_fold, ctx.identity(), [identity_hom(P)])
        self.assertRaises(CompatibilityError, universal_fold, ctx.identity(), [])
