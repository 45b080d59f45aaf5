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

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Any, Callable, Iterable, Iterator, Optional

from pynetmod.auxiliary import make_rng, first_or_none
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EMonoidKinds
from pynetmod.exceptions import ElementNotInMonoidError, NotAHomomorphismError, CompatibilityError

Element = Any

@dataclass(frozen=True, eq=False)
class Monoid():
    """
    Class representing a monoid by its identity, its operation and its equality.

    Elements are opaque values owned by the monoid. Equality of elements
    is always decided by equal(). Finite monoids carry their elements
    (enumeration order = element order), infinite monoids carry a sampler
    which is used for law checks.

    Monoids compare and hash by identity.

    Args:
        name: Display name of this monoid
        identity: Identity element
        op: Binary operation
        kind: Kind of this monoid. Drives literal parsing and formatting
        elements: Optional. All elements in a fixed order. None for infinite monoids
        member: Optional. Membership test. Defaults to a lookup in elements
        eq_fn: Optional. Equality of elements. Defaults to ==
        order_key: Optional. Sort key of elements. Defaults to the position in elements
        sampler: Optional. Draws an element from a random.Random
        factors: Factors if this monoid is a direct product
        payload: Optional. Extra data for parsers, e.g. the alphabet of a free monoid
    """
    name:str
    """Display name of this monoid"""
    identity:Element
    """Identity element of this monoid"""
    op:Callable[[Element, Element], Element]
    """Binary operation of this monoid"""
    kind:EMonoidKinds = EMonoidKinds.CUSTOM
    """Kind of this monoid"""
    elements:Optional[tuple[Element, ...]] = None
    """All elements of this monoid in enumeration order, or None if not enumerable"""
    member:Optional[Callable[[Element], bool]] = None
    """Membership test"""
    eq_fn:Optional[Callable[[Element, Element], bool]] = None
    """Equality of elements"""
    order_key:Optional[Callable[[Element], Any]] = None
    """Sort key of elements"""
    sampler:Optional[Callable[[random.Random], Element]] = None
    """Random element generator"""
    factors:tuple['Monoid', ...] = ()
    """Factors of a direct product. Empty for all other monoids"""
    payload:Any = field(default=None, repr=False)
    """Extra data used by parsers and formatters"""

    def __post_init__(self):
        if self.elements is not None:
            object.__setattr__(self, 'elements', tuple(self.elements))
            if not any(self.equal(self.identity, e) for e in self.elements):
                raise ValueError(f'identity of {self.name} must be one of its elements')

    def __str__(self):
        return self.name

    @cached_property
    def _positions(self) -> dict:
        try:
            return {e: i for i, e in enumerate(self.elements or ())}
        except TypeError: # unhashable elements
            return {}

    def mul(self, a:Element, b:Element) -> Element:
        """Returns the product a*b"""
        return self.op(a, b)

    def product(self, values:Iterable[Element]) -> Element:
        """Returns the product of all values from left to right. Identity if values is empty"""
        return reduce(self.op, values, self.identity)

    def equal(self, a:Element, b:Element) -> bool:
        """Returns True if a and b are the same element of this monoid"""
        if self.eq_fn is not None: return self.eq_fn(a, b)
        return a == b

    def is_identity(self, a:Element) -> bool:
        """Returns True if a is the identity of this monoid"""
        return self.equal(a, self.identity)

    def is_finite(self) -> bool:
        """Returns True if this monoid enumerates its elements"""
        return self.elements is not None

    def contains(self, a:Element) -> bool:
        """Returns True if a is an element of this monoid"""
        if self.member is not None: return self.member(a)
        if self.elements is not None: return any(self.equal(a, e) for e in self.elements)
        return True

    def validate(self, a:Element) -> Element:
        """
        Returns a if it is an element of this monoid.

        Raises:
            ElementNotInMonoidError: Raised if a is not an element of this monoid
        """
        if not self.contains(a):
            raise ElementNotInMonoidError(f'{a!r} is not an element of {self.name}')
        return a

    def key(self, a:Element) -> Any:
        """Returns the sort key of a. Keys of different elements differ"""
        if self.order_key is not None: return self.order_key(a)
        if self.elements is not None:
            try:
                return self._positions[a]
            except (KeyError, TypeError):
                for i, e in enumerate(self.elements):
                    if self.equal(a, e): return i
                raise ElementNotInMonoidError(f'{a!r} is not an element of {self.name}')
        return a

    def non_identity_elements(self) -> tuple[Element, ...]:
        """Returns all elements except the identity. Only for finite monoids"""
        if self.elements is None:
            raise ValueError(f'{self.name} does not enumerate its elements')
        return tuple(e for e in self.elements if not self.is_identity(e))

    def sample(self, rng:random.Random) -> Element:
        """Draws a random element of this monoid"""
        if self.sampler is not None: return self.sampler(rng)
        if self.elements is not None: return rng.choice(self.elements)
        raise ValueError(f'{self.name} can neither be enumerated nor sampled')

    def pairs(self, settings:Settings=DEFAULT_SETTINGS) -> Iterator[tuple[Element, Element]]:
        """
        Yields all pairs of elements if this monoid is finite,
        otherwise settings.sample_budget sampled pairs.
        """
        if self.elements is not None:
            yield from itertools.product(self.elements, repeat=2)
            return
        rng = make_rng(settings, f'pairs:{self.name}')
        for _ in range(settings.sample_budget):
            yield self.sample(rng), self.sample(rng)

    def triples(self, settings:Settings=DEFAULT_SETTINGS) -> Iterator[tuple[Element, Element, Element]]:
        """
        Yields all triples of elements if this monoid is finite,
        otherwise settings.sample_budget sampled triples.
        """
        if self.elements is not None:
            yield from itertools.product(self.elements, repeat=3)
            return
        rng = make_rng(settings, f'triples:{self.name}')
        for _ in range(settings.sample_budget):
            yield self.sample(rng), self.sample(rng), self.sample(rng)

    def find_law_violation(self, settings:Settings=DEFAULT_SETTINGS) -> Optional[str]:
        """
        Checks the identity laws and associativity.

        Returns:
            Optional[str]: Description of the first violation found or None
        """
        e = self.identity
        for a, _ in self.pairs(settings):
            if not self.equal(self.op(e, a), a) or not self.equal(self.op(a, e), a):
                return f'identity law fails for {a!r} in {self.name}'
        for a, b, c in self.triples(settings):
            if not self.equal(self.op(self.op(a, b), c), self.op(a, self.op(b, c))):
                return f'associativity fails for ({a!r}, {b!r}, {c!r}) in {self.name}'
        return None

    def check_laws(self, settings:Settings=DEFAULT_SETTINGS) -> bool:
        """Returns True if the identity laws and associativity hold on all checked elements"""
        return self.find_law_violation(settings) is None

    def find_commutativity_violation(self, settings:Settings=DEFAULT_SETTINGS) -> Optional[tuple[Element, Element]]:
        """Returns a pair (a, b) with ab != ba or None"""
        return first_or_none((a, b) for a, b in self.pairs(settings)
                             if not self.equal(self.op(a, b), self.op(b, a)))

    def is_commutative(self, settings:Settings=DEFAULT_SETTINGS) -> bool:
        """Returns True if ab = ba holds on all checked pairs"""
        return self.find_commutativity_violation(settings) is None

    def find_graphic_violation(self, settings:Settings=DEFAULT_SETTINGS) -> Optional[tuple[Element, Element]]:
        """Returns a pair (a, b) with aba != ab or None"""
        return first_or_none((a, b) for a, b in self.pairs(settings)
                             if not self.equal(self.op(self.op(a, b), a), self.op(a, b)))

    def is_graphic(self, settings:Settings=DEFAULT_SETTINGS) -> bool:
        """Returns True if aba = ab holds on all checked pairs"""
        return self.find_graphic_violation(settings) is None

    def inclusion(self, i:int) -> 'MonoidHom':
        """
        Returns the inclusion of factor i into this direct product.
        The other coordinates are padded with identities.
        """
        self._check_factor(i)
        def include(a):
            return tuple(a if j == i else f.identity for j, f in enumerate(self.factors))
        return MonoidHom(self.factors[i], self, include, f'i_{i}')

    def projection(self, i:int) -> 'MonoidHom':
        """Returns the projection of this direct product onto factor i"""
        self._check_factor(i)
        return MonoidHom(self, self.factors[i], lambda a: a[i], f'p_{i}')

    def _check_factor(self, i:int):
        if not self.factors:
            raise ValueError(f'{self.name} is not a direct product')
        if not 0 <= i < len(self.factors):
            raise ValueError(f'factor index must be in [0, {len(self.factors)}), got {i}')

@dataclass(frozen=True, eq=False)
class MonoidHom():
    """
    Class representing a map between monoids which is meant to be a homomorphism.

    The homomorphism laws are not checked on construction. Use check_hom
    or require_hom.
    """
    source:Monoid
    """Source monoid"""
    target:Monoid
    """Target monoid"""
    map:Callable[[Element], Element]
    """The underlying map"""
    name:str = ''
    """Optional display name"""

    def __call__(self, a:Element) -> Element:
        return self.map(a)

    def compose(self, other:'MonoidHom') -> 'MonoidHom':
        """
        Returns self after other.

        Raises:
            CompatibilityError: Raised if the target of other is not the source of self
        """
        if other.target is not self.source:
            raise CompatibilityError(f'cannot compose {self.name or "hom"} after {other.name or "hom"}: '
                                     f'{other.target.name} is not {self.source.name}')
        return MonoidHom(other.source, self.target, lambda a: self.map(other.map(a)),
                         f'{self.name}*{other.name}')

def identity_hom(monoid:Monoid) -> MonoidHom:
    """Returns the identity homomorphism of monoid"""
    return MonoidHom(monoid, monoid, lambda a: a, f'id_{monoid.name}')

def zero_hom(source:Monoid, target:Monoid) -> MonoidHom:
    """Returns the homomorphism which sends every element to the identity of target"""
    return MonoidHom(source, target, lambda a: target.identity, f'0_{source.name},{target.name}')

def find_hom_violation(h:MonoidHom, settings:Settings=DEFAULT_SETTINGS) -> Optional[str]:
    """
    Checks the homomorphism laws of h.

    The laws are checked exhaustively on finite sources and on
    settings.sample_budget sampled pairs otherwise.

    Returns:
        Optional[str]: Description of the first violation found or None
    """
    src, tgt = h.source, h.target
    if not tgt.equal(h(src.identity), tgt.identity):
        return f'{h.name or "hom"} sends the identity {src.identity!r} to {h(src.identity)!r}'
    for a, b in src.pairs(settings):
        if not tgt.equal(h(src.op(a, b)), tgt.op(h(a), h(b))):
            return f'{h.name or "hom"} does not preserve the product of {a!r} and {b!r}'
    return None

def check_hom(h:MonoidHom, settings:Settings=DEFAULT_SETTINGS) -> bool:
    """Returns True if the homomorphism laws hold on all checked pairs"""
    return find_hom_violation(h, settings) is None

def require_hom(h:MonoidHom, settings:Settings=DEFAULT_SETTINGS) -> MonoidHom:
    """
    Returns h if it is a homomorphism.

    Raises:
        NotAHomomorphismError: Raised if a homomorphism law fails
    """
    violation = find_hom_violation(h, settings)
    if violation is not None: raise NotAHomomorphismError(violation)
    return h
