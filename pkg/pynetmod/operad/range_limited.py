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
from typing import Any, Optional, Sequence

from pynetmod.exceptions import ProfileMismatchError, CompatibilityError, RangeLimitError
from pynetmod.green import SimpleGraph
from pynetmod.protocols import IMetricSpace, INetwork
from .operation import OperadOperation

@dataclass(frozen=True)
class RangeLimitedState():
    """
    Class representing a network of devices with limited range: a simple graph
    whose vertices are placed in a metric space and whose edges are not longer
    than the range limit.

    Args:
        graph: Communication links
        positions: Position of every vertex in space
        space: Metric space
        limit: Range limit L >= 0

    Raises:
        ValueError: Raised if the number of positions does not match the vertex count or limit < 0
        RangeLimitError: Raised if an edge is longer than limit
    """
    graph:SimpleGraph
    """Communication links"""
    positions:tuple
    """Position of every vertex"""
    space:IMetricSpace
    """Metric space of the positions"""
    limit:float
    """Range limit"""

    def __post_init__(self):
        object.__setattr__(self, 'positions', tuple(self.space.validate_point(p) for p in self.positions))
        if len(self.positions) != self.graph.n_vertices:
            raise ValueError(f'expected {self.graph.n_vertices} positions, got {len(self.positions)}')
        if self.limit < 0:
            raise ValueError(f'limit must not be negative, got {self.limit}')
        for u, v in self.graph.sorted_edges():
            d = self.space.distance(self.positions[u], self.positions[v])
            if d > self.limit:
                raise RangeLimitError(f'edge ({u}, {v}) has length {d}, range limit is {self.limit}')

    @property
    def n(self) -> int:
        """Number of vertices"""
        return self.graph.n_vertices

    def in_range(self, u:int, v:int) -> bool:
        """Returns True if the vertices u and v are at most limit apart"""
        return self.space.distance(self.positions[u], self.positions[v]) <= self.limit

def act_range_limited(op:OperadOperation, states:Sequence[RangeLimitedState],
                      space:Optional[IMetricSpace]=None, limit:Optional[float]=None) -> RangeLimitedState:
    """
    Acts by op = (sigma, g) on states (h_i, f_i).

    The states are placed next to each other and relabeled by sigma, the position
    of vertex v moves to sigma(v). Then every edge of g is added whose endpoints
    are at most the range limit apart. Edges of g out of range are not added.

    Args:
        op (OperadOperation): operation over a network model whose networks provide their support
        states (Sequence[RangeLimitedState]): one state per input of op
        space (Optional[IMetricSpace], optional): metric space of the result. Defaults to the space of the states.
        limit (Optional[float], optional): range limit of the result. Defaults to the limit of the states.
            space and limit are required if op has no inputs.

    Raises:
        ProfileMismatchError: Raised if the states do not fit the profile of op
        CompatibilityError: Raised if the states do not share space and limit
        ValueError: Raised if op has no inputs and space or limit is not given
    """
    if len(states) != op.arity:
        raise ProfileMismatchError(f'operation takes {op.arity} states, got {len(states)}')
    for i, (state, ni) in enumerate(zip(states, op.profile)):
        if state.n != ni:
            raise ProfileMismatchError(f'state {i} has {state.n} vertices, profile expects {ni}')
    if space is None or limit is None:
        if not states: raise ValueError('space and limit are required for an operation without inputs')
        if space is None: space = states[0].space
        if limit is None: limit = states[0].limit
    if any(s.space != space or s.limit != limit for s in states):
        raise CompatibilityError('states must share their metric space and range limit')
    if not isinstance(op.network, INetwork):
        raise CompatibilityError('network of the operation must provide its support graph')

    graph = SimpleGraph(0)
    positions = []
    for s in states:
        graph = graph.disjoint_union(s.graph)
        positions.extend(s.positions)
    sigma = op.sigma
    graph = graph.relabel(sigma.images)
    moved = [None] * len(positions)
    for v, p in enumerate(positions):
        moved[sigma(v)] = p
    attempted = op.network.support().sorted_edges()
    admitted = [(u, v) for u, v in attempted if space.distance(moved[u], moved[v]) <= limit]
    return RangeLimitedState(graph.with_edges(admitted), tuple(moved), space, limit)
