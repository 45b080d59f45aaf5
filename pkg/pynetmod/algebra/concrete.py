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

from functools import cache
from operator import add
from typing import Optional

from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EMonoidKinds
from .monoid import Monoid, MonoidHom

PATH_BAND_ELEMENTS = ('1', 'a', 'b', 'c', 'x', 'y')

# Rows are left factors, columns right factors in the order of PATH_BAND_ELEMENTS.
# Multiplying p by q moves from p a small distance towards q along the path a-x-b-y-c.
_PATH_BAND_TABLE = {
    '1': ('1', 'a', 'b', 'c', 'x', 'y'),
    'a': ('a', 'a', 'x', 'x', 'x', 'x'),
    'b': ('b', 'x', 'b', 'y', 'x', 'y'),
    'c': ('c', 'y', 'y', 'c', 'y', 'y'),
    'x': ('x', 'x', 'x', 'x', 'x', 'x'),
    'y': ('y', 'y', 'y', 'y', 'y', 'y'),
}

@cache
def boolean_monoid() -> Monoid:
    """
    Returns the boolean monoid B = ({T, F}, or).

    T is represented by True and F (the identity) by False.
    """
    return Monoid('B', False, lambda a, b: a or b, EMonoidKinds.BOOL,
                  elements=(False, True),
                  member=lambda a: isinstance(a, bool),
                  order_key=int)

@cache
def nat_monoid() -> Monoid:
    """Returns the natural numbers under addition. Not enumerable, sampled from 0..20"""
    return Monoid('N', 0, add, EMonoidKinds.NAT,
                  member=lambda a: isinstance(a, int) and not isinstance(a, bool) and a >= 0,
                  order_key=lambda a: a,
                  sampler=lambda rng: rng.randint(0, 20))

@cache
def free_monoid(alphabet:str) -> Monoid:
    """
    Returns the free monoid over alphabet. Elements are str, the operation is concatenation.

    Elements are ordered length-lexicographically with the letter order of alphabet.

    Args:
        alphabet (str): Letters of the free monoid. Must not be empty or contain duplicates

    Raises:
        ValueError: Raised if alphabet is empty or contains duplicate letters
    """
    if not alphabet:
        raise ValueError('alphabet of a free monoid must not be empty')
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f'alphabet must not contain duplicate letters, got {alphabet!r}')
    letters = set(alphabet)
    def sample(rng):
        return ''.join(rng.choice(alphabet) for _ in range(rng.randint(0, 4)))
    return Monoid(f'Free({alphabet})', '', add, EMonoidKinds.FREE,
                  member=lambda a: isinstance(a, str) and set(a) <= letters,
                  order_key=lambda a: (len(a), tuple(alphabet.index(ch) for ch in a)),
                  sampler=sample,
                  payload=alphabet)

@cache
def path_band_monoid() -> Monoid:
    """
    Returns the six element graphic monoid {1, a, b, c, x, y} of the path a-x-b-y-c.

    1 is the identity, x and y are left zeros and a, b, c are idempotent.
    Examples: ab = x, bc = y, ac = x, ca = y, xb = x, aa = a.
    """
    cols = {e: i for i, e in enumerate(PATH_BAND_ELEMENTS)}
    return Monoid('P', '1', lambda p, q: _PATH_BAND_TABLE[p][cols[q]], EMonoidKinds.BAND,
                  elements=PATH_BAND_ELEMENTS,
                  member=lambda a: isinstance(a, str) and a in cols)

def direct_product(m:Monoid, n:Monoid) -> Monoid:
    """
    Returns the direct product m x n with componentwise operation.

    Elements are pairs. The product is finite if both factors are finite.
    Its inclusions and projections are available by inclusion(i) and projection(i).
    """
    elements = None
    if m.is_finite() and n.is_finite():
        elements = tuple((a, b) for a in m.elements for b in n.elements)
    def sample(rng):
        return (m.sample(rng), n.sample(rng))
    return Monoid(f'{m.name}x{n.name}', (m.identity, n.identity),
                  lambda p, q: (m.op(p[0], q[0]), n.op(p[1], q[1])),
                  EMonoidKinds.PRODUCT,
                  elements=elements,
                  member=lambda p: isinstance(p, tuple) and len(p) == 2 and m.contains(p[0]) and n.contains(p[1]),
                  eq_fn=lambda p, q: m.equal(p[0], q[0]) and n.equal(p[1], q[1]),
                  order_key=lambda p: (m.key(p[0]), n.key(p[1])),
                  sampler=sample,
                  factors=(m, n))

def find_pointed_violation(product:Monoid, settings:Settings=DEFAULT_SETTINGS) -> Optional[str]:
    """
    Checks the four equations of inclusions and projections of a binary direct product:
    p_0*i_0 = id, p_1*i_1 = id, p_1*i_0 = 0 and p_0*i_1 = 0.

    Returns:
        Optional[str]: Description of the first violation found or None
    """
    for i in range(2):
        for j in range(2):
            factor = product.factors[i]
            target = product.factors[j]
            inc, proj = product.inclusion(i), product.projection(j)
            values = factor.elements if factor.is_finite() else [a for a, _ in factor.pairs(settings)]
            for a in values:
                expected = a if i == j else target.identity
                if not target.equal(proj(inc(a)), expected):
                    return f'p_{j}(i_{i}({a!r})) is {proj(inc(a))!r}, expected {expected!r}'
    return None

def collapse_hom() -> MonoidHom:
    """Returns the homomorphism N -> B which sends all but 0 to T"""
    return MonoidHom(nat_monoid(), boolean_monoid(), lambda a: a != 0, 'collapse')
