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

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Any, Iterable, Mapping, Optional, Sequence

from pynetmod.algebra import Monoid, boolean_monoid, nat_monoid
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties, EMonoidKinds
from pynetmod.exceptions import ContextMismatchError, VarietyViolationError
from pynetmod.green import SimpleGraph
from pynetmod.kneser import k_subsets, subset_rank
from .free_model import NetworkElement, NetworkModelContext, network_model
from .permutation import Permutation

@dataclass(frozen=True, eq=False)
class OrdinaryNetworkModel():
    """
    Class representing the ordinary network model Gamma_M with Gamma_M(n) = M^{C(n,2)}.

    A network assigns a weight to every edge of the complete graph on n vertices.
    Weights are stored in the colex order of the edges. Overlay is componentwise,
    so the weights of all edges commute.

    Use ordinary_model() to get a shared instance.

    Args:
        edge_monoid: Monoid M of edge weights
        settings: Optional. Settings for enumerations
    """
    edge_monoid:Monoid
    """Monoid of edge weights"""
    settings:Settings = DEFAULT_SETTINGS
    """Settings for enumerations"""
    _constituents:dict[int, Monoid] = field(default_factory=dict, init=False, repr=False)

    def __str__(self):
        return f'Gamma_{{{self.edge_monoid.name}}}'

    def identity(self, n:int) -> 'OrdinaryNetworkElement':
        """Returns the network on n vertices with identity weights"""
        if n < 0: raise ValueError(f'n must not be negative, got {n}')
        return OrdinaryNetworkElement(self, n, (self.edge_monoid.identity,) * comb(n, 2))

    def from_weights(self, n:int, weights:Sequence[Any]|Mapping[tuple[int, int], Any]) -> 'OrdinaryNetworkElement':
        """
        Returns the network with the given weights.

        Args:
            n (int): number of vertices
            weights (Sequence | Mapping): weights in colex edge order or a mapping
                from sorted edges to weights. Missing edges get the identity.

        Raises:
            ValueError: Raised if the number of weights is wrong or an edge is invalid
            ElementNotInMonoidError: Raised if a weight is not an element of the edge monoid
        """
        m = self.edge_monoid
        if isinstance(weights, Mapping):
            full = [m.identity] * comb(n, 2)
            for (u, v), w in weights.items():
                full[self._edge_index(n, u, v)] = w
            weights = full
        if len(weights) != comb(n, 2):
            raise ValueError(f'expected {comb(n, 2)} weights, got {len(weights)}')
        return OrdinaryNetworkElement(self, n, tuple(m.validate(w) for w in weights))

    def element(self, n:int, raw_word:Iterable[tuple[int, int, Any]]) -> 'OrdinaryNetworkElement':
        """Returns the overlay of the weighted edges (u, v, value) from left to right"""
        m = self.edge_monoid
        weights = [m.identity] * comb(n, 2)
        for u, v, value in raw_word:
            i = self._edge_index(n, u, v)
            weights[i] = m.op(weights[i], m.validate(value))
        return OrdinaryNetworkElement(self, n, tuple(weights))

    def edge(self, n:int, u:int, v:int, value:Any) -> 'OrdinaryNetworkElement':
        """Returns the network with the single edge {u, v} weighted by value"""
        return self.element(n, [(u, v, value)])

    def overlay(self, g:'OrdinaryNetworkElement', h:'OrdinaryNetworkElement') -> 'OrdinaryNetworkElement':
        """
        Returns the componentwise product of g and h.

        Raises:
            ContextMismatchError: Raised if g and h belong to other models or have different vertex counts
        """
        self._check(g)
        self._check(h)
        if g.n != h.n:
            raise ContextMismatchError(f'cannot overlay networks on {g.n} and {h.n} vertices')
        op = self.edge_monoid.op
        return OrdinaryNetworkElement(self, g.n, tuple(op(a, b) for a, b in zip(g.weights, h.weights)))

    def disjoint_union(self, g:'OrdinaryNetworkElement', h:'OrdinaryNetworkElement') -> 'OrdinaryNetworkElement':
        """Returns g next to h. Edges between the two blocks get the identity weight"""
        self._check(g)
        self._check(h)
        m, n = g.n, h.n
        weights = [self.edge_monoid.identity] * comb(m + n, 2)
        weights[:len(g.weights)] = g.weights # colex order puts the edges of {0..m-1} first
        for (u, v), w in zip(k_subsets(n, 2), h.weights):
            weights[subset_rank((u + m, v + m))] = w
        return OrdinaryNetworkElement(self, m + n, tuple(weights))

    def permute(self, sigma:Permutation, g:'OrdinaryNetworkElement') -> 'OrdinaryNetworkElement':
        """Moves the weight of every edge {i, j} to {sigma(i), sigma(j)}"""
        self._check(g)
        if sigma.n != g.n:
            raise ValueError(f'permutation acts on {sigma.n} points, network has {g.n} vertices')
        weights = list(g.weights)
        for (u, v), w in zip(k_subsets(g.n, 2), g.weights):
            weights[subset_rank(sigma.apply_to_edge(u, v))] = w
        return OrdinaryNetworkElement(self, g.n, tuple(weights))

    def random_element(self, n:int, rng:random.Random) -> 'OrdinaryNetworkElement':
        """Returns a network with random weights"""
        return OrdinaryNetworkElement(self, n, tuple(self.edge_monoid.sample(rng) for _ in range(comb(n, 2))))

    def enumerate(self, n:int) -> list['OrdinaryNetworkElement']:
        """Returns all networks on n vertices. Only for finite edge monoids"""
        values = self.edge_monoid.elements
        if values is None:
            raise ValueError(f'{self.edge_monoid.name} does not enumerate its elements')
        return [OrdinaryNetworkElement(self, n, w) for w in product(values, repeat=comb(n, 2))]

    def constituent(self, n:int) -> Monoid:
        """
        Returns the constituent monoid Gamma_M(n).

        The monoid enumerates its elements if the edge monoid is finite and
        Gamma_M(n) has at most settings.enumeration_limit elements.
        The same Monoid instance is returned on every call.
        """
        monoid = self._constituents.get(n)
        if monoid is None:
            m = self.edge_monoid
            elements = None
            if m.is_finite() and len(m.elements) ** comb(n, 2) <= self.settings.enumeration_limit:
                elements = self.enumerate(n)
            monoid = Monoid(f'{self}({n})', self.identity(n), self.overlay, EMonoidKinds.ORDINARY,
                            elements=elements,
                            member=lambda g: isinstance(g, OrdinaryNetworkElement) and g.model is self and g.n == n,
                            order_key=lambda g: tuple(m.key(w) for w in g.weights),
                            sampler=lambda rng: self.random_element(n, rng),
                            payload=(self, n))
            monoid = self._constituents.setdefault(n, monoid)
        return monoid

    def _edge_index(self, n:int, u:int, v:int) -> int:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f'edge ({u}, {v}) is not a pair of distinct vertices in [0, {n})')
        return subset_rank(sorted((u, v)))

    def _check(self, g:'OrdinaryNetworkElement'):
        if not isinstance(g, OrdinaryNetworkElement) or g.model is not self:
            raise ContextMismatchError(f'network does not belong to {self}')

@dataclass(frozen=True, eq=False)
class OrdinaryNetworkElement():
    """
    Class representing a network of an ordinary network model.

    Dont instanciate this class directly. Use the methods of OrdinaryNetworkModel.
    """
    model:OrdinaryNetworkModel
    """Network model this network belongs to"""
    n:int
    """Number of vertices"""
    weights:tuple[Any, ...]
    """Weight of every edge of the complete graph in colex order"""

    def __mul__(self, other:'OrdinaryNetworkElement') -> 'OrdinaryNetworkElement':
        return self.model.overlay(self, other)

    def __eq__(self, other):
        if not isinstance(other, OrdinaryNetworkElement): return NotImplemented
        m = self.model.edge_monoid
        return (self.model is other.model and self.n == other.n
                and all(m.equal(a, b) for a, b in zip(self.weights, other.weights)))

    def __hash__(self):
        return hash((self.n, tuple(self.model.edge_monoid.key(w) for w in self.weights)))

    def __str__(self):
        from pynetmod.notation.literals import format_network
        return format_network(self)

    def weight(self, u:int, v:int) -> Any:
        """Returns the weight of the edge {u, v}"""
        return self.weights[self.model._edge_index(self.n, u, v)]

    @property
    def word(self) -> tuple[tuple[int, int, Any], ...]:
        """Gets the non identity weights as (u, v, weight) in colex edge order"""
        m = self.model.edge_monoid
        return tuple((u, v, w) for (u, v), w in zip(k_subsets(self.n, 2), self.weights) if not m.is_identity(w))

    def is_identity(self) -> bool:
        """Returns True if every weight is the identity"""
        return not self.word

    def support(self) -> SimpleGraph:
        """Returns the simple graph of all edges with non identity weight"""
        return SimpleGraph(self.n, frozenset((u, v) for u, v, _ in self.word))

@lru_cache(maxsize=None)
def _shared_ordinary_model(edge_monoid:Monoid, settings:Settings) -> OrdinaryNetworkModel:
    return OrdinaryNetworkModel(edge_monoid, settings)

def ordinary_model(edge_monoid:Monoid, settings:Settings=DEFAULT_SETTINGS) -> OrdinaryNetworkModel:
    """Returns the shared OrdinaryNetworkModel of (edge_monoid, settings), however the arguments are passed"""
    return _shared_ordinary_model(edge_monoid, settings)

def ordinary_gamma(n:int, edge_monoid:Monoid) -> Monoid:
    """Returns the constituent monoid Gamma_M(n) = M^{C(n,2)}"""
    return ordinary_model(edge_monoid).constituent(n)

def simple_graph_model() -> OrdinaryNetworkModel:
    """Returns the simple graph model SG = Gamma_B"""
    return ordinary_model(boolean_monoid())

def multigraph_model() -> OrdinaryNetworkModel:
    """Returns the multigraph model Gamma_N. Overlay adds edge multiplicities"""
    return ordinary_model(nat_monoid())

def cmon_iso(g:NetworkElement, target:Optional[OrdinaryNetworkModel]=None) -> OrdinaryNetworkElement:
    """
    Returns the ordinary network of a network of Gamma_{M,CMON}(n). The letters of every edge are combined in M.

    Raises:
        VarietyViolationError: Raised if g does not belong to a CMON model
    """
    ctx = g.context
    if ctx.variety != EVarieties.CMON:
        raise VarietyViolationError(f'cmon_iso needs a cmon network model, got {ctx.variety.value}')
    if target is None: target = ordinary_model(ctx.edge_monoid, ctx.settings)
    return target.element(g.n, g.word)

def cmon_iso_inverse(x:OrdinaryNetworkElement, target:Optional[NetworkModelContext]=None) -> NetworkElement:
    """
    Returns the network of Gamma_{M,CMON}(n) of an ordinary network.

    Raises:
        VarietyViolationError: Raised if target is not a CMON model
    """
    if target is None: target = network_model(x.model.edge_monoid, EVarieties.CMON, x.model.settings)
    if target.variety != EVarieties.CMON:
        raise VarietyViolationError(f'cmon_iso_inverse needs a cmon network model, got {target.variety.value}')
    return target.element(x.n, x.word)
