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
from functools import lru_cache
from typing import Optional

from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties
from pynetmod.exceptions import VarietyViolationError
from .monoid import Monoid

logger = logging.getLogger(__name__)

@lru_cache(maxsize=256)
def find_variety_violation(monoid:Monoid, variety:EVarieties,
                           settings:Settings=DEFAULT_SETTINGS) -> Optional[str]:
    """
    Checks whether monoid satisfies the defining equations of variety.

    Exhaustive on finite monoids, sampled otherwise. Results are cached per
    (monoid, variety, settings).

    Returns:
        Optional[str]: Description of the first violated equation or None
    """
    logger.debug('checking %s against variety %s', monoid.name, variety.value)
    variety = EVarieties(variety)
    if variety == EVarieties.CMON:
        pair = monoid.find_commutativity_violation(settings)
        if pair is not None:
            a, b = pair
            return f'{monoid.name} is not commutative: {a!r}{b!r} != {b!r}{a!r}'
    elif variety == EVarieties.GMON:
        pair = monoid.find_graphic_violation(settings)
        if pair is not None:
            a, b = pair
            return f'{monoid.name} is not graphic: {a!r}{b!r}{a!r} != {a!r}{b!r}'
    return None

def satisfies_variety(monoid:Monoid, variety:EVarieties, settings:Settings=DEFAULT_SETTINGS) -> bool:
    """Returns True if monoid satisfies the equations of variety on all checked elements"""
    return find_variety_violation(monoid, variety, settings) is None

def require_variety(monoid:Monoid, variety:EVarieties, settings:Settings=DEFAULT_SETTINGS) -> Monoid:
    """
    Returns monoid if it belongs to variety.

    Raises:
        VarietyViolationError: Raised if an equation of variety fails
    """
    violation = find_variety_violation(monoid, EVarieties(variety), settings)
    if violation is not None: raise VarietyViolationError(violation)
    return monoid
