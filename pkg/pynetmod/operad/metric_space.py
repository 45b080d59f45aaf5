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

from dataclasses import dataclass, field
from numbers import Real
from typing import Any, Sequence

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import euclidean, pdist, squareform

from pynetmod.enums import EMetricSpaces

@dataclass(frozen=True)
class EuclideanSpace():
    """
    Class representing the euclidean line (dim=1) or plane (dim=2).

    Points are tuples of floats. Numbers are accepted as points of the line.
    """
    dim:int = 2
    """Dimension, 1 or 2"""
    type:EMetricSpaces = field(init=False)
    """Type of this metric space"""

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f'dim must be 1 or 2, got {self.dim}')
        object.__setattr__(self, 'type', EMetricSpaces.LINE if self.dim == 1 else EMetricSpaces.PLANE)

    def validate_point(self, p:Any) -> tuple[float, ...]:
        """
        Returns p as tuple of floats.

        Raises:
            ValueError: Raised if p does not have dim coordinates
        """
        if isinstance(p, Real): p = (p,)
        coords = tuple(float(c) for c in p)
        if len(coords) != self.dim:
            raise ValueError(f'points must have {self.dim} coordinates, got {p!r}')
        return coords

    def distance(self, p:Sequence[float], q:Sequence[float]) -> float:
        """Returns the euclidean distance of p and q"""
        return float(euclidean(p, q))

    def pairwise(self, points:Sequence[Sequence[float]]) -> npt.NDArray[np.float64]:
        """Returns the square matrix of distances between points"""
        if len(points) < 2: return np.zeros((len(points), len(points)))
        return squareform(pdist(np.asarray(points, dtype=float)))

@dataclass(frozen=True, eq=False)
class FiniteMetricSpace():
    """
    Class representing a finite metric space {0..n-1} given by its distance matrix.

    Raises:
        ValueError: Raised if the matrix is not square, not symmetric, has a non zero
            diagonal, negative entries or violates the triangle inequality
    """
    matrix:npt.NDArray[np.float64]
    """Distance matrix"""
    type:EMetricSpaces = field(init=False, default=EMetricSpaces.MATRIX)
    """Type of this metric space"""

    def __post_init__(self):
        d = np.asarray(self.matrix, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError(f'distance matrix must be square, got shape {d.shape}')
        if (d < 0).any():
            raise ValueError('distances must not be negative')
        squareform(d, checks=True) # symmetric with zero diagonal
        if not (d[:, None, :] <= d[:, :, None] + d[None, :, :] + 1e-12).all():
            raise ValueError('distance matrix violates the triangle inequality')
        d.setflags(write=False)
        object.__setattr__(self, 'matrix', d)

    @property
    def size(self) -> int:
        """Number of points"""
        return self.matrix.shape[0]

    def validate_point(self, p:Any) -> int:
        """
        Returns p if it is a point index.

        Raises:
            ValueError: Raised if p is not in [0, size)
        """
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or not 0 <= p < self.size:
            raise ValueError(f'points must be indices in [0, {self.size}), got {p!r}')
        return int(p)

    def distance(self, p:int, q:int) -> float:
        """Returns the distance of the points p and q"""
        return float(self.matrix[p, q])

    def pairwise(self, points:Sequence[int]) -> npt.NDArray[np.float64]:
        """Returns the square matrix of distances between points"""
        idx = np.asarray(points, dtype=int)
        return self.matrix[np.ix_(idx, idx)]
