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

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import comb
from typing import Sequence

from pynetmod.green import SimpleGraph, GraphMap

KSubset = tuple[int, ...]

@dataclass(frozen=True, slots=True)
class Injection():
    """
    Class representing an injective map {0..m-1} -> {0..n-1}.

    Args:
        domain_size: m
        codomain_size: n
        mapping: mapping[i] is the image of i
    """
    domain_size:int
    """Size of the domain"""
    codomain_size:int
    """Size of the codomain"""
    mapping:tuple[int, ...]
    """Image of every element of the domain"""

    def __post_init__(self):
        object.__setattr__(self, 'mapping', tuple(self.mapping))
        if self.domain_size < 0 or self.codomain_size < 0:
            raise ValueError(f'sizes must not be negative, got {self.domain_size} and {self.codomain_size}')
        if len(self.mapping) != self.domain_size:
            raise ValueError(f'mapping must have {self.domain_size} entries, got {len(self.mapping)}')
        if any(not 0 <= j < self.codomain_size for j in self.mapping):
            raise ValueError(f'images must be in [0, {self.codomain_size}), got {self.mapping}')
        if len(set(self.mapping)) != len(self.mapping):
            raise ValueError(f'mapping is not injective: {self.mapping}')

    def __call__(self, i:int) -> int:
        return self.mapping[i]

    @classmethod
    def identity(cls, n:int) -> 'Injection':
        """Returns the identity of {0..n-1}"""
        return cls(n, n, tuple(range(n)))

    @classmethod
    def inclusion(cls, m:int, n:int) -> 'Injection':
        """Returns the inclusion {0..m-1} -> {0..n-1}"""
        return cls(m, n, tuple(range(m)))

    def compose(self, other:'Injection') -> 'Injection':
        """
        Returns self after other.

        Raises:
            ValueError: Raised if the codomain of other is not the domain of self
        """
        if other.codomain_size != self.domain_size:
            raise ValueError(f'cannot compose: codomain size {other.codomain_size} != domain size {self.domain_size}')
        return Injection(other.domain_size, self.codomain_size, tuple(self(other(i)) for i in range(other.domain_size)))

def _colex_key(s:KSubset) -> tuple[int, ...]:
    return s[::-1]

@cache
def k_subsets(n:int, k:int) -> tuple[KSubset, ...]:
    """
    Returns all k-element subsets of {0..n-1} as sorted tuples in colex order.

    The position of a subset in this order is its vertex index in KG_{n,k}.
    Subsets of {0..m-1} come first for every m < n, so the order of
    k_subsets(m, k) is a prefix of the order of k_subsets(n, k).

    Raises:
        ValueError: Raised if n or k is negative
    """
    if n < 0 or k < 0:
        raise ValueError(f'n and k must not be negative, got n={n}, k={k}')
    return tuple(sorted(combinations(range(n), k), key=_colex_key))

def subset_rank(subset:Sequence[int]) -> int:
    """Returns the colex position of a sorted subset (combinatorial number system)"""
    return sum(comb(s, i + 1) for i, s in enumerate(subset))

@cache
def kneser_graph(n:int, k:int) -> SimpleGraph:
    """
    Returns the Kneser graph KG_{n,k}.

    Vertex i is the subset k_subsets(n, k)[i]. Two vertices are adjacent
    iff their subsets are disjoint.
    """
    subsets = k_subsets(n, k)
    edges = frozenset((i, j) for i, j in combinations(range(len(subsets)), 2)
                      if not set(subsets[i]) & set(subsets[j]))
    return SimpleGraph(len(subsets), edges)

def subsets_map(f:Injection, k:int) -> dict[KSubset, KSubset]:
    """Returns the map U -> f[U] on the k-subsets of the domain of f"""
    return {u: tuple(sorted(f(i) for i in u)) for u in k_subsets(f.domain_size, k)}

def kneser_embedding(f:Injection, k:int) -> GraphMap:
    """Returns the graph map KG_{m,k} -> KG_{n,k} induced by the injection f: m -> n"""
    images = subsets_map(f, k)
    return GraphMap(kneser_graph(f.domain_size, k), kneser_graph(f.codomain_size, k),
                    tuple(subset_rank(images[u]) for u in k_subsets(f.domain_size, k)))

@cache
def kneser_laxator(m:int, n:int, k:int) -> GraphMap:
    """
    Returns the graph map KG_{m,k} + KG_{n,k} -> KG_{m+n,k}.

    Vertices of the left summand keep their subsets, subsets of the right summand
    are shifted by m.
    """
    left = [subset_rank(u) for u in k_subsets(m, k)]
    right = [subset_rank(tuple(i + m for i in u)) for u in k_subsets(n, k)]
    source = kneser_graph(m, k).disjoint_union(kneser_graph(n, k))
    return GraphMap(source, kneser_graph(m + n, k), tuple(left + right))
