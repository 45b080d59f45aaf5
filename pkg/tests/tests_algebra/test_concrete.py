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

from pynetmod.algebra import (boolean_monoid, nat_monoid, free_monoid, path_band_monoid, direct_product,
                              find_pointed_violation, PATH_BAND_ELEMENTS)
from pynetmod.enums import EMonoidKinds

class TestBooleanMonoid(unittest.TestCase):

    def test_op(self):
        b = boolean_monoid()
        self.assertTrue(b.op(True, True))
        for x in (True, False):
            self.assertEqual(b.op(False, x), x)
        self.assertEqual(b.kind, EMonoidKinds.BOOL)
        self.assertEqual(b.elements, (False, True))

    def test_cached(self):
        self.assertIs(boolean_monoid(), boolean_monoid())

class TestPathBand(unittest.TestCase):

    def setUp(self) -> None:
        self.p = path_band_monoid()

    def test_examples(self):
        op = self.p.op
        self.assertEqual(op('a', 'b'), 'x')
        self.assertEqual(op('b', 'c'), 'y')
        self.assertEqual(op('a', 'c'), 'x')
        self.assertEqual(op('c', 'a'), 'y')
        self.assertEqual(op('x', 'b'), 'x')
        self.assertEqual(op('a', 'a'), 'a')

    def test_identity(self):
        for e in PATH_BAND_ELEMENTS:
            self.assertEqual(self.p.op('1', e), e)
            self.assertEqual(self.p.op(e, '1'), e)

    def test_laws(self):
        self.assertIsNone(self.p.find_law_violation())
        self.assertTrue(self.p.is_graphic())
        self.assertFalse(self.p.is_commutative())

    def test_idempotent(self):
        for e in PATH_BAND_ELEMENTS:
            self.assertEqual(self.p.op(e, e), e)

class TestNatMonoid(unittest.TestCase):

    def test_op(self):
        n = nat_monoid()
        self.assertEqual(n.op(2, 3), 5)
        self.assertEqual(n.op(0, 7), 7)
        self.assertFalse(n.is_finite())
        self.assertFalse(n.contains(True))

    @hsettings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0), st.integers(min_value=0), st.integers(min_value=0))
    def test_associative(self, a, b, c):
        n = nat_monoid()
        self.assertEqual(n.op(n.op(a, b), c), n.op(a, n.op(b, c)))

class TestFreeMonoid(unittest.TestCase):

    def test_op(self):
        f = free_monoid('ab')
        self.assertEqual(f.op('ab', 'ba'), 'abba')
        self.assertEqual(f.identity, '')
        self.assertEqual(f.payload, 'ab')

    def test_contains(self):
        f = free_monoid('ab')
        self.assertTrue(f.contains('abba'))
        self.assertTrue(f.contains(''))
        self.assertFalse(f.contains('abc'))

    def test_key(self):
        f = free_monoid('ba')
        self.assertLess(f.key('b'), f.key('a'))
        self.assertLess(f.key('aa'), f.key('bbb'))

    def test_valid_alphabet(self):
        self.assertRaises(ValueError, free_monoid, '')
        self.assertRaises(ValueError, free_monoid, 'aba')

    def test_laws(self):
        f = free_monoid('ab')
        self.assertTrue(f.check_laws())
        self.assertFalse(f.is_commutative())
        self.assertFalse(f.is_graphic())

class TestDirectProduct(unittest.TestCase):

    def test_op(self):
        bb = direct_product(boolean_monoid(), boolean_monoid())
        self.assertEqual(bb.op((True, False), (False, True)), (True, True))
        self.assertEqual(len(bb.elements), 4)
        self.assertEqual(bb.identity, (False, False))

    def test_infinite_factor(self):
        bn = direct_product(boolean_monoid(), nat_monoid())
        self.assertFalse(bn.is_finite())
        self.assertTrue(bn.contains((True, 3)))
        self.assertFalse(bn.contains((True, -3)))
        self.assertTrue(bn.check_laws())

    def test_inclusions(self):
        b, n = boolean_monoid(), nat_monoid()
        bn = direct_product(b, n)
        self.assertEqual(bn.inclusion(0)(True), (True, 0))
        self.assertEqual(bn.projection(1)(bn.inclusion(0)(True)), 0)
        self.assertEqual(bn.projection(0)(bn.inclusion(0)(True)), True)

    def test_pointed(self):
        self.assertIsNone(find_pointed_violation(direct_product(boolean_monoid(), boolean_monoid())))
        self.assertIsNone(find_pointed_violation(direct_product(path_band_monoid(), nat_monoid())))
