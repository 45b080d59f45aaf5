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
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
import numpy.typing as npt

Edge = tuple[int, int]

def _edge(u:int, v:int) -> Edge:
    return (u, v) if u < v else (v, u)

@dataclass(frozen=True)
class SimpleGraph():
    """
    Class representing a finite simple graph on the vertices 0..n_vertices-1.

    Edges are stored as sorted pairs (u, v) with u < v. The edges given on
    construction may be in any orientation.

    Args:
        n_vertices: Number of vertices
        edges: Optional. Unordered vertex pairs. Defaults to no edges.
    """
    n_vertices:int
    """Number of vertices of this graph"""
    edges:frozenset[Edge] = frozenset()
    """Edges of this graph as sorted pairs"""

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError(f'n_vertices must not be negative, got {self.n_vertices}')
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f'simple graphs have no loops, got {e}')
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f'edge {e} is not a pair of vertices in [0, {self.n_vertices})')
            edges.add(_edge(u, v))
        object.__setattr__(self, 'edges', frozenset(edges))

    @classmethod
    def complete(cls, n:int) -> 'SimpleGraph':
        """Returns the complete graph on n vertices"""
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def edgeless(cls, n:int) -> 'SimpleGraph':
        """Returns the graph on n vertices without edges"""
        return cls(n)

    @classmethod
    def path(cls, n:int) -> 'SimpleGraph':
        """Returns the path 0-1-...-(n-1)"""
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @cached_property
    def _neighbours(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def sorted_edges(self) -> list[Edge]:
        """Returns the edges sorted lexicographically"""
        return sorted(self.edges)

    def adjacent(self, u:int, v:int) -> bool:
        """Returns True if u and v are joined by an edge"""
        return v in self._neighbours[u]

    def neighbours(self, v:int) -> frozenset[int]:
        """Returns the neighbours of v"""
        return self._neighbours[v]

    def degree(self, v:int) -> int:
        """
        Returns the number of edges which include v.

        Raises:
            ValueError: Raised if v is not a vertex of this graph
        """
        if not 0 <= v < self.n_vertices:
            raise ValueError(f'vertex must be in [0, {self.n_vertices}), got {v}')
        return len(self._neighbours[v])

    def degrees(self) -> list[int]:
        """Returns the degrees of all vertices"""
        return [len(a) for a in self._neighbours]

    def disjoint_union(self, other:'SimpleGraph') -> 'SimpleGraph':
        """Returns this graph next to other. The vertices of other are shifted by n_vertices"""
        m = self.n_vertices
        return SimpleGraph(m + other.n_vertices,
                           self.edges | frozenset((u + m, v + m) for u, v in other.edges))

    def union(self, other:'SimpleGraph') -> 'SimpleGraph':
        """
        Returns the graph with the edges of this graph and other.

        Raises:
            ValueError: Raised if the vertex counts differ
        """
        if other.n_vertices != self.n_vertices:
            raise ValueError(f'vertex counts differ: {self.n_vertices} != {other.n_vertices}')
        return SimpleGraph(self.n_vertices, self.edges | other.edges)

    def with_edges(self, edges:Iterable[Edge]) -> 'SimpleGraph':
        """Returns this graph with the given edges added"""
        return SimpleGraph(self.n_vertices, self.edges | frozenset(_edge(*e) for e in edges))

    def relabel(self, mapping:Sequence[int]) -> 'SimpleGraph':
        """
        Returns the image of this graph under the vertex bijection v -> mapping[v].

        Raises:
            ValueError: Raised if mapping is not a permutation of the vertices
        """
        if sorted(mapping) != list(range(self.n_vertices)):
            raise ValueError(f'mapping must be a permutation of range({self.n_vertices}), got {list(mapping)}')
        return SimpleGraph(self.n_vertices, frozenset(_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def is_automorphism(self, mapping:Sequence[int]) -> bool:
        """Returns True if mapping is a permutation of the vertices which maps edges onto edges"""
        if sorted(mapping) != list(range(self.n_vertices)): return False
        return all(_edge(mapping[u], mapping[v]) in self.edges for u, v in self.edges)

    def adjacency_matrix(self) -> npt.NDArray[np.int_]:
        """Returns the symmetric 0/1 adjacency matrix"""
        a = np.zeros((self.n_vertices, self.n_vertices), dtype=int)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def to_networkx(self) -> nx.Graph:
        """Returns this graph as networkx.Graph with the vertices 0..n_vertices-1"""
        g = nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.sorted_edges())
        return g

@dataclass(frozen=True)
class Quiver():
    """
    Class representing a quiver, i.e. a directed multigraph.

    Args:
        vertices: Vertices of the quiver
        arrows: Arrows of the quiver
        src: Source of each arrow
        tgt: Target of each arrow
    """
    vertices:frozenset
    """Vertices of this quiver"""
    arrows:frozenset
    """Arrows of this quiver"""
    src:dict
    """Maps each arrow to its source vertex"""
    tgt:dict
    """Maps each arrow to its target vertex"""

    def __post_init__(self):
        for a in self.arrows:
            if a not in self.src or a not in self.tgt:
                raise ValueError(f'source and target of arrow {a!r} must be given')
            if self.src[a] not in self.vertices or self.tgt[a] not in self.vertices:
                raise ValueError(f'arrow {a!r} does not connect vertices of this quiver')

def insert_cospan(g:SimpleGraph) -> Quiver:
    """
    Replaces every edge of g by a cospan u -> {u, v} <- v.

    The vertices of the returned quiver are the vertices of g (int) and the
    edges of g (sorted pairs). The arrows are the pairs (v, e) with v in e,
    pointing from v to e.
    """
    vertices = frozenset(range(g.n_vertices)) | g.edges
    arrows = frozenset((v, e) for e in g.edges for v in e)
    return Quiver(vertices, arrows, {a: a[0] for a in arrows}, {a: a[1] for a in arrows})

@dataclass(frozen=True)
class GraphMap():
    """
    Class representing a vertex map between two simple graphs.

    Args:
        source: Source graph
        target: Target graph
        vertex_map: Image of every source vertex
    """
    source:SimpleGraph
    """Source graph"""
    target:SimpleGraph
    """Target graph"""
    vertex_map:tuple[int, ...]
    """vertex_map[v] is the image of source vertex v"""

    def __post_init__(self):
        object.__setattr__(self, 'vertex_map', tuple(self.vertex_map))
        if len(self.vertex_map) != self.source.n_vertices:
            raise ValueError(f'vertex_map must have {self.source.n_vertices} entries, got {len(self.vertex_map)}')
        for w in self.vertex_map:
            if not 0 <= w < self.target.n_vertices:
                raise ValueError(f'image vertex {w} is not in [0, {self.target.n_vertices})')

    def __call__(self, v:int) -> int:
        return self.vertex_map[v]

    def is_injective(self) -> bool:
        """Returns True if no two vertices share their image"""
        return len(set(self.vertex_map)) == len(self.vertex_map)

    def preserves_edges(self) -> bool:
        """Returns True if every edge is mapped onto an edge"""
        return all(self.target.adjacent(self(u), self(v)) for u, v in self.source.edges)

    def reflects_edges(self) -> bool:
        """Returns True if two vertices are adjacent whenever their images are"""
        n = self.source.n_vertices
        return all(self.source.adjacent(u, v)
                   for u, v in combinations(range(n), 2)
                   if self(u) != self(v) and self.target.adjacent(self(u), self(v)))

    def is_embedding(self) -> bool:
        """Returns True if this map is injective, preserves and reflects edges"""
        return self.is_injective() and self.preserves_edges() and self.reflects_edges()

    def compose(self, other:'GraphMap') -> 'GraphMap':
        """
        Returns self after other.

        Raises:
            ValueError: Raised if the target of other is not the source of self
        """
        if other.target != self.source:
            raise ValueError('target of the inner map must be the source of the outer map')
        return GraphMap(other.source, self.target, tuple(self(other(v)) for v in range(other.source.n_vertices)))

    @classmethod
    def identity(cls, g:SimpleGraph) -> 'GraphMap':
        """Returns the identity map of g"""
        return cls(g, g, tuple(range(g.n_vertices)))
