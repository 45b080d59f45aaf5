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

from hypothesis import given, settings as hsettings, strategies as st

from pynetmod.algebra import boolean_monoid, path_band_monoid
from pynetmod.enums import EVarieties
from pynetmod.exceptions import BudgetExceededError
from pynetmod.green import (GreenContext, Letter, SimpleGraph, shuffle_closure_oracle, congruence_closure_oracle,
                            oracle_equal)
from pynetmod.kneser import kneser_graph

B = boolean_monoid()
P = path_band_monoid()

def kneser_context(n:int, monoid, variety=EVarieties.MON) -> GreenContext:
    g = kneser_graph(n, 2)
    return GreenContext(g, (monoid,) * g.n_vertices, variety)

class TestShuffleClosure(unittest.TestCase):

    def test_adjacent_letters(self):
        ctx = GreenContext(SimpleGraph.complete(2), (B, B))
        closure = shuffle_closure_oracle([(0, True), (1, True)], ctx)
        self.assertEqual(closure, {(Letter(0, True), Letter(1, True)), (Letter(1, True), Letter(0, True))})

    def test_non_adjacent_letters(self):
        ctx = GreenContext(SimpleGraph(2), (B, B))
        self.assertEqual(len(shuffle_closure_oracle([(0, True), (1, True)], ctx)), 1)

    def test_combination_and_deletion(self):
        ctx = GreenContext(SimpleGraph(1), (P,))
        closure = shuffle_closure_oracle([(0, 'a'), (0, '1'), (0, 'b')], ctx)
        self.assertIn((Letter(0, 'x'),), closure)
        self.assertIn((Letter(0, 'a'), Letter(0, 'b')), closure)

    def test_budget(self):
        ctx = GreenContext(SimpleGraph.complete(2), (B, B))
        self.assertRaises(BudgetExceededError, shuffle_closure_oracle, [(0, True), (1, True)], ctx, 1)

class TestCongruenceClosure(unittest.TestCase):

    def test_mon_is_shuffle_closure(self):
        ctx = kneser_context(4, B)
        word = [(0, True), (5, True), (1, True)]
        self.assertEqual(congruence_closure_oracle(word, ctx), shuffle_closure_oracle(word, ctx))

    def test_cmon_orderings(self):
        ctx = GreenContext(SimpleGraph(2), (B, B), EVarieties.CMON)
        closure = congruence_closure_oracle([(0, True), (1, True)], ctx)
        self.assertIn((Letter(1, True), Letter(0, True)), closure)

    def test_gmon_deletion(self):
        ctx = GreenContext(SimpleGraph(2), (B, B), EVarieties.GMON)
        closure = congruence_closure_oracle([(0, True), (1, True), (0, True)], ctx)
        self.assertIn((Letter(0, True), Letter(1, True)), closure)

    def test_variety_override(self):
        ctx = GreenContext(SimpleGraph(2), (B, B))
        word = [(0, True), (1, True), (0, True)]
        self.assertNotIn((Letter(0, True), Letter(1, True)), congruence_closure_oracle(word, ctx))
        self.assertIn((Letter(0, True), Letter(1, True)), congruence_closure_oracle(word, ctx, EVarieties.GMON))

    def test_oracle_equal(self):
        ctx = GreenContext(SimpleGraph(2), (B, B), EVarieties.GMON)
        self.assertTrue(oracle_equal([(0, True), (1, True), (0, True)], [(0, True), (1, True)], ctx))
        self.assertFalse(oracle_equal([(0, True), (1, True)], [(1, True), (0, True)], ctx))

    def test_band_absorption(self):
        # a^u b^v c^u = a^u b^v b^u: both lengthen to a^u b^v a^u c^u (resp. b^u) and combine to a^u b^v x^u
        ctx = GreenContext(SimpleGraph(2), (P, P), EVarieties.GMON)
        u = [(0, 'a'), (1, 'b'), (0, 'c')]
        v = [(0, 'a'), (1, 'b'), (0, 'b')]
        self.assertTrue(oracle_equal(u, v, ctx, max_len=4))
        self.assertEqual(ctx.normalize(u), ctx.normalize(v))

def _words(ctx:GreenContext, max_length:int):
    letters = ctx.generators()
    for length in range(max_length + 1):
        yield from product(letters, repeat=length)

def _assert_shuffle_agreement(test:unittest.TestCase, ctx:GreenContext, max_length:int):
    # the canonical word is reachable and every reachable word has the same canonical word
    for word in _words(ctx, max_length):
        normal = ctx.normalize(word)
        closure = shuffle_closure_oracle(word, ctx)
        test.assertIn(normal.word, closure, f'{word}')
        for w in closure:
            test.assertEqual(ctx.normalize(w), normal, f'{w} and {word}')

def _assert_class_agreement(test:unittest.TestCase, ctx:GreenContext, max_length:int):
    # congruence moves are reversible here, so one closure per canonical word covers its class
    classes = {}
    for word in _words(ctx, max_length):
        classes.setdefault(ctx.normalize(word).word, []).append(word)
    for normal, words in classes.items():
        closure = congruence_closure_oracle(normal, ctx, max_len=max_length + 1)
        for word in words:
            test.assertIn(word, closure, f'{word} and {normal}')
        for w in closure:
            test.assertEqual(ctx.normalize(w).word, normal, f'{w} and {normal}')

class TestNormalFormAgreement(unittest.TestCase):

    def test_mon_boolean(self):
        for n in range(2, 5):
            _assert_shuffle_agreement(self, kneser_context(n, B), 5)

    def test_mon_band(self):
        _assert_shuffle_agreement(self, kneser_context(2, P), 4)
        _assert_shuffle_agreement(self, kneser_context(3, P), 4)
        _assert_shuffle_agreement(self, kneser_context(4, P), 3)

    @hsettings(max_examples=200, deadline=None)
    @given(st.lists(st.sampled_from(kneser_context(4, P).generators()), min_size=4, max_size=4))
    def test_mon_band_long_words(self, word):
        ctx = kneser_context(4, P)
        normal = ctx.normalize(word)
        closure = shuffle_closure_oracle(word, ctx)
        self.assertIn(normal.word, closure)
        for w in closure:
            self.assertEqual(ctx.normalize(w), normal)

    def test_cmon_boolean(self):
        for n in range(2, 5):
            _assert_class_agreement(self, kneser_context(n, B, EVarieties.CMON), 5)

    def test_gmon_boolean(self):
        for n in range(2, 5):
            _assert_class_agreement(self, kneser_context(n, B, EVarieties.GMON), 5)

    def test_gmon_band(self):
        _assert_class_agreement(self, kneser_context(2, P, EVarieties.GMON), 4)
        _assert_class_agreement(self, kneser_context(3, P, EVarieties.GMON), 3)
        _assert_class_agreement(self, GreenContext(SimpleGraph(2), (P, P), EVarieties.GMON), 3)
        _assert_class_agreement(self, GreenContext(SimpleGraph.path(3), (P,) * 3, EVarieties.GMON), 3)
        _assert_class_agreement(self, kneser_context(4, P, EVarieties.GMON), 2)

    def test_gmon_band_needs_one_extra_letter(self):
        # a^0 a^1 c^0 and a^0 a^1 b^0 only meet through a word of length 4
        ctx = GreenContext(SimpleGraph(2), (P, P), EVarieties.GMON)
        u = [(0, 'a'), (1, 'a'), (0, 'c')]
        v = [(0, 'a'), (1, 'a'), (0, 'b')]
        self.assertEqual(ctx.normalize(u), ctx.normalize(v))
        self.assertTrue(oracle_equal(u, v, ctx, max_len=4))

    @hsettings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from(kneser_context(4, B).generators()), min_size=5, max_size=5))
    def test_mon_boolean_long_words(self, word):
        ctx = kneser_context(4, B)
        normal = ctx.normalize(word)
        closure = shuffle_closure_oracle(word, ctx)
        self.assertIn(normal.word, closure)
        for w in closure:
            self.assertEqual(ctx.normalize(w), normal)
