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
class ContextMismatchError(ValueError):
    """Raised when two elements from different contexts are combined"""
    pass

class UnknownComponentError(ValueError):
    """Raised when a letter refers to a vertex which is not in the indexing graph"""
    pass

class ElementNotInMonoidError(ValueError):
    """Raised when a value is not an element of the monoid it is attached to"""
    pass

class VarietyViolationError(ValueError):
    """Raised when a monoid does not satisfy the equations of the requested variety"""
    pass

class NotAHomomorphismError(ValueError):
    """Raised when a map between monoids violates the homomorphism laws"""
    pass

class NotAnAutomorphismError(ValueError):
    """Raised when a vertex permutation is not an automorphism of the indexing graph"""
    pass

class CompatibilityError(ValueError):
    """Raised when maps or states which must agree on a shared structure do not"""
    pass

class ProfileMismatchError(ValueError):
    """Raised when the arity profile of an operation does not fit its arguments"""
    pass

class DegreeBoundError(ValueError):
    """Raised when a network exceeds its degree bound"""
    pass

class RangeLimitError(ValueError):
    """Raised when an edge of a range limited network is longer than the range limit"""
    pass

class LiteralParseError(ValueError):
    """Raised when a literal (element, word, network, permutation) cannot be parsed"""
    pass

class BudgetExceededError(RuntimeError):
    """Raised when a brute force closure grows beyond its configured bound"""
    pass
