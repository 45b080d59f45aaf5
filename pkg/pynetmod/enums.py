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

from enum import Enum

class EVarieties(str, Enum):
    MON = 'mon'
    """All monoids. Only the commutations forced by the indexing graph hold"""
    CMON = 'cmon'
    """Commutative monoids. ab = ba holds for all elements"""
    GMON = 'gmon'
    """Graphic monoids. aba = ab holds for all elements"""

class EMonoidKinds(str, Enum):
    BOOL = 'bool'
    """Boolean monoid ({T, F}, or)"""
    NAT = 'nat'
    """Natural numbers under addition"""
    BAND = 'band'
    """Six element graphic monoid of the path a-x-b-y-c"""
    FREE = 'free'
    """Free monoid over a finite alphabet"""
    PRODUCT = 'product'
    """Direct product of two monoids"""
    NETWORK = 'network'
    """Constituent monoid of a free network model"""
    ORDINARY = 'ordinary'
    """Constituent monoid of an ordinary network model"""
    CUSTOM = 'custom'
    """Any other monoid given by identity and operation"""

class EOutputFormats(str, Enum):
    TEXT = 'text'
    """Literal notation as accepted by the parsers"""
    JSON = 'json'
    """JSON documents"""
    DOT = 'dot'
    """Graphviz DOT"""

class EMetricSpaces(str, Enum):
    LINE = 'line'
    """Real line with the absolute distance"""
    PLANE = 'plane'
    """Euclidean plane"""
    MATRIX = 'matrix'
    """Finite metric space given by a distance matrix"""
