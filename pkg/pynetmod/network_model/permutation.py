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
from itertools import permutations
from typing import Iterable, Sequence

@dataclass(frozen=True, slots=True)
class Permutation():
    """
    Class representing a bijection of {0..n-1}.

    Permutations compose like functions: (sigma * tau)(i) = sigma(tau(i)).

    Args:
        images: images[i] is the image of i
    """
    images:tuple[int, ...]
    """Image of every point"""

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f'images must be a permutation of range({len(self.images)}), got {self.images}')

    @property
    def n(self) -> int:
        """Number of points"""
        return len(self.images)

    def __call__(self, i:int) -> int:
        return self.images[i]

    def __mul__(self, other:'Permutation') -> 'Permutation':
        return self.compose(other)

    def compose(self, other:'Permutation') -> 'Permutation':
        """
        Returns self after other.

        Raises:
            ValueError: Raised if the permutations act on different numbers of points
        """
        if other.n != self.n:
            raise ValueError(f'cannot compose permutations on {self.n} and {other.n} points')
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> 'Permutation':
        """Returns the inverse permutation"""
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        """Returns True if every point is fixed"""
        return all(i == j for i, j in enumerate(self.images))

    def block_sum(self, other:'Permutation') -> 'Permutation':
        """Returns self + other acting on self.n + other.n points. other acts on the shifted points"""
        m = self.n
        return Permutation(self.images + tuple(m + j for j in other.images))

    def apply_to_edge(self, u:int, v:int) -> tuple[int, int]:
        """Returns the sorted image of the edge {u, v}"""
        a, b = self.images[u], self.images[v]
        return (a, b) if a < b else (b, a)

    def to_cycles(self) -> list[tuple[int, ...]]:
        """Returns the cycles of length > 1, each starting at its least point"""
        seen = set()
        cycles = []
        for start in range(self.n):
            if start in seen: continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cycle) > 1: cycles.append(tuple(cycle))
        return cycles

    @classmethod
    def identity(cls, n:int) -> 'Permutation':
        """Returns the identity on n points"""
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n:int, i:int, j:int) -> 'Permutation':
        """Returns the transposition (i j) on n points. The identity if i == j"""
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n:int, cycles:Iterable[Sequence[int]]) -> 'Permutation':
        """
        Returns the permutation given by disjoint cycles.

        Raises:
            ValueError: Raised if a point is out of range or occurs twice
        """
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for p in cycle:
                if not 0 <= p < n:
                    raise ValueError(f'point {p} is not in [0, {n})')
                if p in seen:
                    raise ValueError(f'point {p} occurs in more than one cycle')
                seen.add(p)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def block_swap(cls, m:int, n:int) -> 'Permutation':
        """Returns the permutation on m + n points which moves the first m points behind the last n"""
        return cls(tuple(i + n if i < m else i - m for i in range(m + n)))

def all_permutations(n:int) -> list[Permutation]:
    """Returns all n! permutations of n points"""
    return [Permutation(p) for p in permutations(range(n))]
