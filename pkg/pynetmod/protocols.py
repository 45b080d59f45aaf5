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

from typing import Any, Protocol, runtime_checkable
from . import enums

@runtime_checkable
class INetworkModel(Protocol):
    """
    Protocol for network models.

    A network model is a family of constituent monoids F(n), one per vertex count,
    together with the disjoint union F(m) x F(n) -> F(m+n) and the action
    of the symmetric group S_n on F(n).
    """

    def constituent(self, n:int) -> Any:
        """Gets the constituent monoid F(n) as a Monoid"""
        ...
    def identity(self, n:int) -> Any:
        """Gets the empty network on n vertices"""
        ...
    def overlay(self, g:Any, h:Any) -> Any:
        """Overlays the networks g and h which share their vertex count"""
        ...
    def disjoint_union(self, g:Any, h:Any) -> Any:
        """Places the networks g and h next to each other. The vertices of h are shifted"""
        ...
    def permute(self, sigma:Any, g:Any) -> Any:
        """Relabels the vertices of g by the permutation sigma"""
        ...

@runtime_checkable
class INetwork(Protocol):
    """Protocol for networks, i.e. elements of a constituent monoid"""
    n:int
    """Gets the number of vertices of this network"""

    def support(self) -> Any:
        """Gets the SimpleGraph of all edges carrying a non identity weight"""
        ...

@runtime_checkable
class IMetricSpace(Protocol):
    """Protocol for metric spaces used by range limited networks"""
    type:enums.EMetricSpaces
    """Gets the type of this metric space"""

    def distance(self, p:Any, q:Any) -> float:
        """Gets the distance between the points p and q"""
        ...
    def validate_point(self, p:Any) -> Any:
        """Returns p in normalized form. Raises ValueError if p is not a point of this space"""
        ...
