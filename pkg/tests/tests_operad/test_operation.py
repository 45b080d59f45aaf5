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

from pynetmod.algebra import boolean_monoid
from pynetmod.enums import EVarieties
from pynetmod.exceptions import ProfileMismatchError, CompatibilityError
from pynetmod.network_model import Permutation, network_model, simple_graph_model
from pynetmod.operad import OperadOperation, identity_operation, operad_compose

B = boolean_monoid()

class TestOperadOperation(unittest.TestCase):

    def test_properties(self):
        ctx = network_model(B, EVarieties.CMON)
        op = OperadOperation(ctx, [2, 0, 1], Permutation.identity(3), ctx.identity(3))
        self.assertEqual(op.profile, (2, 0, 1))
        self.assertEqual(op.n, 3)
        self.assertEqual(op.arity, 3)

    def test_profile_mismatch(self):
        ctx = network_model(B, EVarieties.CMON)
        self.assertRaises(ProfileMismatchError, OperadOperation, ctx, (2, 1), Permutation.identity(2), ctx.identity(3))
        self.assertRaises(ProfileMismatchError, OperadOperation, ctx, (2, 1), Permutation.identity(3), ctx.identity(2))
        self.assertRaises(ProfileMismatchError, OperadOperation, ctx, (4, -1), Permutation.identity(3), ctx.identity(3))

    def test_equality(self):
        ctx = network_model(B, EVarieties.CMON)
        a = OperadOperation(ctx, (2,), Permutation((1, 0)), ctx.edge(2, 0, 1, True))
        b = OperadOperation(ctx, (2,), Permutation((1, 0)), ctx.edge(2, 1, 0, True))
        self.assertEqual(a, b)
        self.assertNotEqual(a, identity_operation(ctx, 2))
        self.assertNotEqual(a, OperadOperation(ctx, (1, 1), Permutation((1, 0)), ctx.edge(2, 0, 1, True)))

class TestOperadCompose(unittest.TestCase):

    def setUp(self):
        self.ctx = network_model(B, EVarieties.CMON)

    def test_unit_laws(self):
        ctx = self.ctx
        op = OperadOperation(ctx, (2, 1), Permutation.from_cycles(3, [(0, 2)]), ctx.element(3, [(0, 1, True), (1, 2, True)]))
        self.assertEqual(operad_compose(op, [identity_operation(ctx, 2), identity_operation(ctx, 1)]), op)
        self.assertEqual(operad_compose(identity_operation(ctx, 3), [op]), op)

    def test_disjoint_edges(self):
        ctx = self.ctx
        outer = OperadOperation(ctx, (2, 2), Permutation.identity(4), ctx.identity(4))
        first = OperadOperation(ctx, (2,), Permutation.identity(2), ctx.edge(2, 0, 1, True))
        second = OperadOperation(ctx, (2,), Permutation((1, 0)), ctx.edge(2, 0, 1, True))
        op = operad_compose(outer, [first, second])
        self.assertEqual(op.profile, (2, 2))
        self.assertEqual(op.sigma, Permutation((0, 1, 3, 2)))
        self.assertEqual(op.network, ctx.element(4, [(0, 1, True), (2, 3, True)]))

    def test_outer_permutation(self):
        ctx = self.ctx
        outer = OperadOperation(ctx, (2, 1), Permutation.from_cycles(3, [(0, 1, 2)]), ctx.edge(3, 0, 1, True))
        inner = OperadOperation(ctx, (1, 1), Permutation.identity(2), ctx.edge(2, 0, 1, True))
        op = operad_compose(outer, [inner, identity_operation(ctx, 1)])
        self.assertEqual(op.profile, (1, 1, 1))
        self.assertEqual(op.sigma, outer.sigma)
        self.assertEqual(op.network, ctx.element(3, [(0, 1, True), (1, 2, True)]))

    def test_associative(self):
        ctx = self.ctx
        outer = OperadOperation(ctx, (3, 1), Permutation.from_cycles(4, [(0, 3)]), ctx.edge(4, 0, 1, True))
        inners = [OperadOperation(ctx, (2, 1), Permutation.from_cycles(3, [(0, 1, 2)]), ctx.edge(3, 1, 2, True)),
                  identity_operation(ctx, 1)]
        inner_inners = [[OperadOperation(ctx, (2,), Permutation((1, 0)), ctx.edge(2, 0, 1, True)),
                         identity_operation(ctx, 1)],
                        [identity_operation(ctx, 1)]]
        lhs = operad_compose(operad_compose(outer, inners), [x for xs in inner_inners for x in xs])
        rhs = operad_compose(outer, [operad_compose(op, xs) for op, xs in zip(inners, inner_inners)])
        self.assertEqual(lhs, rhs)

    def test_ordinary_model(self):
        sg = simple_graph_model()
        outer = OperadOperation(sg, (1, 1), Permutation.identity(2), sg.edge(2, 0, 1, True))
        op = operad_compose(outer, [identity_operation(sg, 1), identity_operation(sg, 1)])
        self.assertEqual(op, outer)

    def test_errors(self):
        ctx = self.ctx
        outer = OperadOperation(ctx, (2, 1), Permutation.identity(3), ctx.identity(3))
        self.assertRaises(ProfileMismatchError, operad_compose, outer, [identity_operation(ctx, 3)])
        self.assertRaises(ProfileMismatchError, operad_compose, outer,
                          [identity_operation(ctx, 1), identity_operation(ctx, 1)])
        other = network_model(B)
        self.assertRaises(CompatibilityError, operad_compose, outer,
                          [identity_operation(other, 2), identity_operation(ctx, 1)])
