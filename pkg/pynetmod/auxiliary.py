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
from typing import Iterable, Sequence, TypeVar

from .config import Settings

T = TypeVar('T')

def subset_label(subset:Sequence[int]) -> str:
    """
    Returns the label of a vertex subset with 1-based vertex labels.

    The labels are concatenated ({0,1} -> '12') as long as every label
    is a single digit. Otherwise they are separated by ','.

    Args:
        subset (Sequence[int]): 0-based vertex indices

    Returns:
        str: label of the subset
    """
    labels = [str(v + 1) for v in subset]
    if all(len(l) == 1 for l in labels): return ''.join(labels)
    return ','.join(labels)

def make_rng(settings:Settings, salt:int|str=0) -> random.Random:
    """
    Returns a deterministic random generator seeded by settings.seed and salt.
    """
    return random.Random(f'{settings.seed}:{salt}')

def first_or_none(iterable:Iterable[T]) -> T|None:
    """Returns the first item of iterable or None if it is empty"""
    for item in iterable:
        return item
    return None
