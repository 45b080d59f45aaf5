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
from typing import Optional, Sequence

from pynetmod.enums import EVarieties, EMonoidKinds
from pynetmod.exceptions import ProfileMismatchError, CompatibilityError, DegreeBoundError
from pynetmod.green import SimpleGraph
from pynetmod.network_model import NetworkElement
from .operation import OperadOperation

Edge = tuple[int, int]

def degree(h:SimpleGraph, v:int) -> int:
    """
    Returns the number of edges of h which include v.

    Raises:
        ValueError: Raised if v is not a vertex of h
    """
    return h.degree(v)

def is_k_bounded(h:SimpleGraph, k:int) -> bool:
    """Returns True if every vertex of h has degree <= k"""
    return all(d <= k for d in h.degrees())

@dataclass(frozen=True)
class BoundedDegreeNetwork():
    """
    Class representing an element of B_k(n): a simple graph on n vertices with all degrees <= k.

    Raises:
        ValueError: Raised if k < 0
        DegreeBoundError: Raised if a vertex has degree > k
    """
    graph:SimpleGraph
    """Simple graph"""
    k:int
    """Degree bound"""

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f'k must not be negative, got {self.k}')
        if not is_k_bounded(self.graph, self.k):
            worst = max(range(self.graph.n_vertices), key=self.graph.degree)
            raise DegreeBoundError(f'vertex {worst} has degree {self.graph.degree(worst)}, bound is {self.k}')

    @property
    def n(self) -> int:
        """Number of vertices"""
        return self.graph.n_vertices

def admit_edges(edge_word:Sequence[Edge], h:BoundedDegreeNetwork,
                h_prime:Optional[Sequence[Edge]]=None) -> BoundedDegreeNetwork:
    """
    Commits the edges of edge_word one by one to a word h' of h.

    An edge is admitted if the support of the extended word is still k-bounded,
    otherwise it is skipped. An edge already in the support is admitted without effect.

    Args:
        edge_word (Sequence[Edge]): edges to be committed in order
        h (BoundedDegreeNetwork): start network
        h_prime (Optional[Sequence[Edge]], optional): word with the same edge set as h.
            Defaults to the sorted edges of h.

    Raises:
        ValueError: Raised if h_prime has another edge set than h or an edge is invalid
    """
    n, k = h.n, h.k
    if h_prime is None: h_prime = h.graph.sorted_edges()
    word = [tuple(sorted(e)) for e in h_prime]
    support = set(word)
    if support != set(h.graph.edges):
        raise ValueError('h_prime must have the same edges as h')
    deg = h.graph.degrees()
    for e in edge_word:
        u, v = sorted(e)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f'edge {e} is not a pair of distinct vertices in [0, {n})')
        if (u, v) in support:
            word.append((u, v))
            continue
        if deg[u] < k and deg[v] < k:
            word.append((u, v))
            support.add((u, v))
            deg[u] += 1
            deg[v] += 1
    return BoundedDegreeNetwork(SimpleGraph(n, frozenset(support)), k)

def act_bounded_degree(g:NetworkElement, h:BoundedDegreeNetwork,
                       h_prime:Optional[Sequence[Edge]]=None) -> BoundedDegreeNetwork:
    """
    Acts by the network g of Gamma_{B,GMON}(n) on h.

    The edges of the canonical word of g are committed one by one;
    an edge is skipped if it would push a vertex above the degree bound.

    Raises:
        CompatibilityError: Raised if g is not a boolean graphic network
        ProfileMismatchError: Raised if g and h have different vertex counts
    """
    ctx = g.context
    if ctx.edge_monoid.kind != EMonoidKinds.BOOL or ctx.variety != EVarieties.GMON:
        raise CompatibilityError(f'bounded degree networks are acted on by Gamma_{{B,gmon}}, got {ctx}')
    if g.n != h.n:
        raise ProfileMismatchError(f'network has {g.n} vertices, state has {h.n}')
    return admit_edges([(u, v) for u, v, _ in g.word], h, h_prime)

def full_bounded_degree_action(op:OperadOperation, states:Sequence[BoundedDegreeNetwork],
                               k:Optional[int]=None) -> BoundedDegreeNetwork:
    """
    Acts by op = (sigma, g) on states: the states are placed next to each other,
    relabeled by sigma and then acted on by g.

    Args:
        op (OperadOperation): operation over Gamma_{B,GMON}
        states (Sequence[BoundedDegreeNetwork]): one state per input of op
        k (Optional[int], optional): degree bound of the result. Defaults to the bound of the states.
            Required if op has no inputs.

    Raises:
        ProfileMismatchError: Raised if the states do not fit the profile of op
        CompatibilityError: Raised if the states have different degree bounds
        ValueError: Raised if op has no inputs and k is not given
    """
    if len(states) != op.arity:
        raise ProfileMismatchError(f'operation takes {op.arity} states, got {len(states)}')
    for i, (state, ni) in enumerate(zip(states, op.profile)):
        if state.n != ni:
            raise ProfileMismatchError(f'state {i} has {state.n} vertices, profile expects {ni}')
    if k is None:
        if not states: raise ValueError('k is required for an operation without inputs')
        k = states[0].k
    if any(s.k != k for s in states):
        raise CompatibilityError('states must share their degree bound')
    graph = SimpleGraph(0)
    for s in states:
        graph = graph.disjoint_union(s.graph)
    return act_bounded_degree(op.network, BoundedDegreeNetwork(graph.relabel(op.sigma.images), k))
