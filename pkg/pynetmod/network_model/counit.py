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

from typing import Any, Callable

from pynetmod.algebra import MonoidHom
from pynetmod.exceptions import ContextMismatchError
from pynetmod.green import universal_fold
from pynetmod.kneser import k_subsets
from pynetmod.protocols import INetworkModel
from .free_model import NetworkElement
from .permutation import Permutation

PermutationRule = Callable[[int, int, int], Permutation]

def counit_permutation(i:int, j:int, n:int) -> Permutation:
    """
    Returns the permutation of n points with 0 -> i, 1 -> j which keeps
    the order of the remaining points.
    """
    rest = [p for p in range(n) if p != i and p != j]
    return Permutation(tuple([i, j] + rest))

def transposition_counit_permutation(i:int, j:int, n:int) -> Permutation:
    """Returns the double transposition (0 i)(1 j), applied from right to left"""
    return Permutation.transposition(n, 0, i) * Permutation.transposition(n, 1, j)

def counit_map(target:INetworkModel, i:int, j:int, n:int,
               permutation:PermutationRule=counit_permutation) -> MonoidHom:
    """
    Returns c_{i,j}: F(2) -> F(n), m -> F(sigma)(m + e) where m + e is the disjoint union
    of m with the empty network on n-2 vertices and sigma sends 0 to i and 1 to j.
    """
    sigma = permutation(i, j, n)
    empty = target.identity(n - 2)
    return MonoidHom(target.constituent(2), target.constituent(n),
                     lambda m: target.permute(sigma, target.disjoint_union(m, empty)),
                     f'c_{i},{j}')

def counit_eval(target:INetworkModel, g:NetworkElement, permutation:PermutationRule=counit_permutation,
                check:bool=True) -> Any:
    """
    Evaluates the counit of the free network model at the network model target.

    g is a network of Gamma_{F(2),V}(n): every letter carries an element of F(2).
    The letter m at the edge {i, j} is sent to c_{i,j}(m) and the images are
    multiplied in F(n) in word order.

    Args:
        target (INetworkModel): network model F
        g (NetworkElement): network whose edge monoid is F(2)
        permutation (PermutationRule, optional): places {0, 1} onto {i, j}. Defaults to counit_permutation.
        check (bool, optional): Check that the images of disjoint edges commute in F(n). Defaults to True.

    Raises:
        ContextMismatchError: Raised if the edge monoid of g is not F(2)
        CompatibilityError: Raised if check is True and images of disjoint edges do not commute,
            i.e. target is not a lawful network model
    """
    ctx = g.context
    if ctx.edge_monoid is not target.constituent(2):
        raise ContextMismatchError(f'edge monoid {ctx.edge_monoid.name} is not F(2) of {target}')
    n = g.n
    maps = [counit_map(target, i, j, n, permutation) for i, j in k_subsets(n, 2)]
    return universal_fold(g.element, maps, target=target.constituent(n), check=check, settings=ctx.settings)
