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

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Iterable, Optional, Sequence

from pynetmod.algebra import Monoid, MonoidHom, require_variety, require_hom
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties, EMonoidKinds
from pynetmod.exceptions import ContextMismatchError, CompatibilityError, VarietyViolationError
from pynetmod.green import GreenContext, GreenElement, SimpleGraph, aut_action
from pynetmod.kneser import k_subsets, subset_rank, kneser_graph, kneser_laxator
from .permutation import Permutation

logger = logging.getLogger(__name__)

RawEdgeLetter = tuple[int, int, Any]

@lru_cache(maxsize=4096)
def _edge_permutation(images:tuple[int, ...]) -> tuple[int, ...]:
    # vertex permutation of KG_{n,2} induced by a permutation of n points
    return tuple(subset_rank(sorted((images[u], images[v]))) for u, v in k_subsets(len(images), 2))

@dataclass(frozen=True, eq=False)
class NetworkModelContext():
    """
    Class representing the free network model Gamma_{M,V} of M-weighted networks in the variety V.

    The constituent monoid Gamma_{M,V}(n) is the Green product over the Kneser graph
    KG_{n,2} with every component equal to M. A letter at vertex {i, j} of KG_{n,2}
    is an edge between i and j weighted by an element of M. Letters on disjoint edges
    commute, letters sharing a vertex do not.

    Per-n Green products and constituent monoids are created on first use and
    never replaced afterwards. Use network_model() to get a shared instance.

    Args:
        edge_monoid: Monoid M of edge weights
        variety: Optional. Variety V. Defaults to MON
        settings: Optional. Settings for law checks and enumerations

    Raises:
        VarietyViolationError: Raised if M does not belong to V
    """
    edge_monoid:Monoid
    """Monoid of edge weights"""
    variety:EVarieties = EVarieties.MON
    """Variety of this network model"""
    settings:Settings = DEFAULT_SETTINGS
    """Settings for law checks and enumerations"""
    _contexts:dict[int, GreenContext] = field(default_factory=dict, init=False, repr=False)
    _constituents:dict[int, Monoid] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'variety', EVarieties(self.variety))
        require_variety(self.edge_monoid, self.variety, self.settings)
        if self.variety == EVarieties.GMON and not self.edge_monoid.is_finite():
            raise VarietyViolationError(f'graphic edge monoid {self.edge_monoid.name} must enumerate its elements')

    def __str__(self):
        return f'Gamma_{{{self.edge_monoid.name},{self.variety.value}}}'

    def green_context(self, n:int) -> GreenContext:
        """Returns the Green product over KG_{n,2} with all components equal to the edge monoid"""
        ctx = self._contexts.get(n)
        if ctx is None:
            if n < 0: raise ValueError(f'n must not be negative, got {n}')
            ctx = GreenContext(kneser_graph(n, 2), (self.edge_monoid,) * comb(n, 2), self.variety, self.settings)
            ctx = self._contexts.setdefault(n, ctx)
        return ctx

    def wrap(self, n:int, element:GreenElement) -> 'NetworkElement':
        """Returns element of the Green product over KG_{n,2} as network"""
        if element.context is not self.green_context(n):
            raise ContextMismatchError(f'element does not belong to {self}({n})')
        return NetworkElement(self, n, element)

    def identity(self, n:int) -> 'NetworkElement':
        """Returns the empty network on n vertices"""
        return NetworkElement(self, n, self.green_context(n).identity())

    def element(self, n:int, raw_word:Iterable[RawEdgeLetter]) -> 'NetworkElement':
        """
        Returns the network of the word of weighted edges (u, v, value), read from left to right.

        Raises:
            ValueError: Raised if an edge is a loop or has a vertex out of range
            ElementNotInMonoidError: Raised if a value is not an element of the edge monoid
        """
        letters = []
        for u, v, value in raw_word:
            if u == v: raise ValueError(f'networks have no loops, got edge ({u}, {v})')
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f'edge ({u}, {v}) is not a pair of vertices in [0, {n})')
            letters.append((subset_rank(sorted((u, v))), value))
        return NetworkElement(self, n, self.green_context(n).normalize(letters))

    def edge(self, n:int, u:int, v:int, value:Any) -> 'NetworkElement':
        """Returns the network with the single edge {u, v} weighted by value"""
        return self.element(n, [(u, v, value)])

    def overlay(self, g:'NetworkElement', h:'NetworkElement') -> 'NetworkElement':
        """
        Returns g overlaid with h (g u h), i.e. the product in Gamma(n).

        Raises:
            ContextMismatchError: Raised if g and h belong to other models or have different vertex counts
        """
        self._check(g)
        self._check(h)
        if g.n != h.n:
            raise ContextMismatchError(f'cannot overlay networks on {g.n} and {h.n} vertices')
        return NetworkElement(self, g.n, g.element * h.element)

    def disjoint_union(self, g:'NetworkElement', h:'NetworkElement') -> 'NetworkElement':
        """
        Returns g next to h on g.n + h.n vertices. The vertices of h are shifted by g.n.

        The edges of h are relabeled by the Kneser laxator KG_{m,2} + KG_{n,2} -> KG_{m+n,2}.
        """
        self._check(g)
        self._check(h)
        m, n = g.n, h.n
        lax = kneser_laxator(m, n, 2).vertex_map
        offset = comb(m, 2)
        word = [(lax[l.component], l.value) for l in g.element.word]
        word += [(lax[offset + l.component], l.value) for l in h.element.word]
        return NetworkElement(self, m + n, self.green_context(m + n).normalize(word))

    def permute(self, sigma:Permutation, g:'NetworkElement') -> 'NetworkElement':
        """
        Relabels every edge {i, j} of g to {sigma(i), sigma(j)}.

        Raises:
            ValueError: Raised if sigma does not act on g.n points
        """
        self._check(g)
        if sigma.n != g.n:
            raise ValueError(f'permutation acts on {sigma.n} points, network has {g.n} vertices')
        return NetworkElement(self, g.n, aut_action(_edge_permutation(sigma.images), g.element, check=False))

    def enumerate(self, n:int, max_length:Optional[int]=None) -> list['NetworkElement']:
        """Returns all networks on n vertices which are products of at most max_length weighted edges"""
        return [NetworkElement(self, n, e) for e in self.green_context(n).enumerate(max_length)]

    def random_element(self, n:int, rng:random.Random, max_length:int=4) -> 'NetworkElement':
        """Returns a random network with at most max_length letters"""
        if n < 2: return self.identity(n)
        edges = k_subsets(n, 2)
        word = []
        for _ in range(rng.randint(0, max_length)):
            u, v = rng.choice(edges)
            word.append((u, v, self.edge_monoid.sample(rng)))
        return self.element(n, word)

    def constituent(self, n:int) -> Monoid:
        """
        Returns the constituent monoid Gamma_{M,V}(n).

        The monoid enumerates its elements for n <= 2 and for CMON models up to
        settings.enumeration_limit elements, given a finite edge monoid.
        The same Monoid instance is returned on every call.
        """
        monoid = self._constituents.get(n)
        if monoid is None:
            monoid = self._make_constituent(n)
            monoid = self._constituents.setdefault(n, monoid)
        return monoid

    def _make_constituent(self, n:int) -> Monoid:
        m = self.edge_monoid
        ctx = self.green_context(n)
        elements = None
        if m.is_finite():
            n_edges = comb(n, 2)
            if n <= 2:
                elements = self.enumerate(n, n_edges)
            elif self.variety == EVarieties.CMON and len(m.elements) ** n_edges <= self.settings.enumeration_limit:
                elements = self.enumerate(n, n_edges)
            if elements is not None:
                logger.debug('%s(%d) enumerated with %d elements', self, n, len(elements))
        return Monoid(f'{self}({n})', self.identity(n), self.overlay, EMonoidKinds.NETWORK,
                      elements=elements,
                      member=lambda g: isinstance(g, NetworkElement) and g.context is self and g.n == n,
                      order_key=lambda g: ctx.word_key(g.element.word),
                      sampler=lambda rng: self.random_element(n, rng),
                      payload=(self, n))

    def _check(self, g:'NetworkElement'):
        if not isinstance(g, NetworkElement) or g.context is not self:
            raise ContextMismatchError(f'network does not belong to {self}')

@dataclass(frozen=True, eq=False)
class NetworkElement():
    """
    Class representing a network, i.e. an element of a constituent monoid Gamma_{M,V}(n).

    Dont instanciate this class directly. Use the methods of NetworkModelContext.
    """
    context:NetworkModelContext
    """Network model this network belongs to"""
    n:int
    """Number of vertices"""
    element:GreenElement
    """Canonical Green product element over KG_{n,2}"""

    @property
    def word(self) -> tuple[RawEdgeLetter, ...]:
        """Gets the canonical word as weighted edges (u, v, value) with u < v"""
        edges = k_subsets(self.n, 2)
        return tuple((*edges[l.component], l.value) for l in self.element.word)

    def __mul__(self, other:'NetworkElement') -> 'NetworkElement':
        return self.context.overlay(self, other)

    def __eq__(self, other):
        if not isinstance(other, NetworkElement): return NotImplemented
        return self.context is other.context and self.n == other.n and self.element == other.element

    def __hash__(self):
        return hash((self.n, self.element))

    def __len__(self):
        return len(self.element.word)

    def __str__(self):
        from pynetmod.notation.literals import format_network
        return format_network(self)

    def is_identity(self) -> bool:
        """Returns True if this is the empty network"""
        return not self.element.word

    def support(self) -> SimpleGraph:
        """Returns the simple graph of all edges carrying a letter"""
        return SimpleGraph(self.n, frozenset((u, v) for u, v, _ in self.word))

@lru_cache(maxsize=None)
def _shared_network_model(edge_monoid:Monoid, variety:EVarieties, settings:Settings) -> NetworkModelContext:
    return NetworkModelContext(edge_monoid, variety, settings)

def network_model(edge_monoid:Monoid, variety:EVarieties|str=EVarieties.MON,
                  settings:Settings=DEFAULT_SETTINGS) -> NetworkModelContext:
    """
    Returns the shared NetworkModelContext of (edge_monoid, variety, settings).

    Every call with equal arguments returns the same instance, however the
    arguments are passed.
    """
    return _shared_network_model(edge_monoid, EVarieties(variety), settings)

def gamma(n:int, ctx:NetworkModelContext) -> Monoid:
    """Returns the constituent monoid Gamma_{M,V}(n) of ctx"""
    return ctx.constituent(n)

def induced_hom(f:MonoidHom, g:NetworkElement, target:Optional[NetworkModelContext]=None,
                check:bool=True) -> NetworkElement:
    """
    Applies the homomorphism f: M -> N to every letter of g.

    Args:
        f (MonoidHom): homomorphism between edge monoids
        g (NetworkElement): network of Gamma_{M,V}(n)
        target (Optional[NetworkModelContext], optional): Gamma_{N,V}. Defaults to network_model(N, V).
        check (bool, optional): Check the homomorphism laws of f. Defaults to True.

    Raises:
        CompatibilityError: Raised if f does not start at M or end at N, or the varieties differ
        NotAHomomorphismError: Raised if check is True and f is not a homomorphism
        VarietyViolationError: Raised if N does not belong to V
    """
    src = g.context
    if target is None: target = network_model(f.target, src.variety, src.settings)
    if f.source is not src.edge_monoid:
        raise CompatibilityError(f'hom does not start at {src.edge_monoid.name}')
    if f.target is not target.edge_monoid:
        raise CompatibilityError(f'hom does not end at {target.edge_monoid.name}')
    if target.variety != src.variety:
        raise CompatibilityError(f'varieties differ: {src.variety.value} != {target.variety.value}')
    if check: require_hom(f, src.settings)
    return target.element(g.n, [(u, v, f(value)) for u, v, value in g.word])

def induced_constituent_hom(f:MonoidHom, n:int, source:NetworkModelContext,
                            target:NetworkModelContext) -> MonoidHom:
    """Returns the component Gamma_{f,V}(n): Gamma_{M,V}(n) -> Gamma_{N,V}(n) of the induced natural transformation"""
    return MonoidHom(source.constituent(n), target.constituent(n),
                     lambda g: induced_hom(f, g, target, check=False), f'Gamma_{f.name}({n})')

def unit_hom(ctx:NetworkModelContext) -> MonoidHom:
    """Returns eta: M -> Gamma_{M,V}(2) which places the weight on the single edge {0, 1}"""
    return MonoidHom(ctx.edge_monoid, ctx.constituent(2), lambda m: ctx.edge(2, 0, 1, m), 'eta')
