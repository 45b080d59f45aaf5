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

@dataclass(frozen=True, slots=True)
class Settings():
    """
    Tunables for law checks, closures and enumerations.

    Every function which samples or enumerates takes a Settings instance.
    Use dataclasses.replace on DEFAULT_SETTINGS to derive modified settings.
    """
    sample_budget:int = 1000
    """Number of sampled pairs (or triples) used to check laws on infinite monoids"""
    seed:int = 0
    """Seed of the deterministic sampler"""
    closure_bound:int = 50000
    """Maximum number of words in a brute force closure before BudgetExceededError is raised"""
    enumeration_length:int = 4
    """Default word length bound when enumerating elements of a Green product"""
    enumeration_limit:int = 4096
    """Largest finite constituent monoid which is enumerated element by element"""

    def __post_init__(self):
        if self.sample_budget < 1:
            raise ValueError(f'sample_budget must be greater than 0, got {self.sample_budget}')
        if self.closure_bound < 1:
            raise ValueError(f'closure_bound must be greater than 0, got {self.closure_bound}')
        if self.enumeration_length < 0:
            raise ValueError(f'enumeration_length must not be negative, got {self.enumeration_length}')
        if self.enumeration_limit < 1:
            raise ValueError(f'enumeration_limit must be greater than 0, got {self.enumeration_limit}')

DEFAULT_SETTINGS = Settings()
