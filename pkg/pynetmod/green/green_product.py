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
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Mapping, NamedTuple, Optional, Sequence

from pynetmod.algebra import Monoid, MonoidHom, require_variety
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties
from pynetmod.exceptions import (ContextMismatchError, UnknownComponentError, VarietyViolationError,
                                 NotAnAutomorphismError, CompatibilityError)
from .graph import SimpleGraph

logger = logging.getLogger(__name__)

class Letter(NamedTuple):
    """A letter m^v of a Green product word: the value m of the component monoid at vertex v"""
    component:int
    """Vertex of the indexing graph"""
    value:Any
    """Element of the component monoid"""

Word = tuple[Letter, ...]

@dataclass(frozen=True, eq=False)
class GreenContext():
    """
    Class representing a Green product: a family of monoids indexed by the
    vertices of a simple graph, where monoids at adjacent vertices commute,
    taken in a variety of monoids.

    Contexts compare and hash by identity. Elements of different
    contexts can not be combined.

    Args:
        graph: Indexing graph
        components: Component monoid of every vertex of graph
        variety: Optional. Variety the Green product is taken in. Defaults to MON
        settings: Optional. Settings for law checks and enumerations

    Raises:
        ValueError: Raised if the number of components does not match the vertex count
        VarietyViolationError: Raised if a component monoid does not belong to variety
            or a graphic component monoid does not enumerate its elements
    """
    graph:SimpleGraph
    """Indexing graph"""
    components:tuple[Monoid, ...]
    """Component monoid of every vertex"""
    variety:EVarieties = EVarieties.MON
    """Variety of this Green product"""
    settings:Settings = DEFAULT_SETTINGS
    """Settings for law checks and enumerations"""
    _normal_forms:dict[Word, Word] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        object.__setattr__(self, 'variety', EVarieties(self.variety))
        if len(self.components) != self.graph.n_vertices:
            raise ValueError(f'expected {self.graph.n_vertices} component monoids, got {len(self.components)}')
        for m in {id(m): m for m in self.components}.values():
            require_variety(m, self.variety, self.settings)
            if self.variety == EVarieties.GMON and not m.is_finite():
                raise VarietyViolationError(f'graphic component {m.name} must enumerate its elements')

    def monoid(self, component:int) -> Monoid:
        """
        Returns the component monoid at vertex component.

        Raises:
            UnknownComponentError: Raised if component is not a vertex of the indexing graph
        """
        if not isinstance(component, int) or not 0 <= component < len(self.components):
            raise UnknownComponentError(f'component must be in [0, {len(self.components)}), got {component!r}')
        return self.components[component]

    def letter_key(self, letter:Letter) -> tuple:
        """Returns the sort key (component, element key) of letter"""
        return (letter.component, self.components[letter.component].key(letter.value))

    def word_key(self, word:Iterable[Letter]) -> tuple:
        """Returns the sort key of a word: length first, then letter keys"""
        keys = tuple(self.letter_key(l) for l in word)
        return (len(keys), keys)

    def validate_word(self, raw_word:Iterable[Sequence]) -> Word:
        """
        Converts raw_word to a tuple of Letter and checks every letter.

        Args:
            raw_word (Iterable[Sequence]): Letters or (component, value) pairs

        Raises:
            UnknownComponentError: Raised if a component is not a vertex of the indexing graph
            ElementNotInMonoidError: Raised if a value is not an element of its component
        """
        word = []
        for item in raw_word:
            c, value = item
            self.monoid(c).validate(value)
            word.append(Letter(c, value))
        return tuple(word)

    def normalize(self, raw_word:Iterable[Sequence]) -> 'GreenElement':
        """Returns the element represented by raw_word in canonical form"""
        return GreenElement(self, _normal_form(self, self.validate_word(raw_word)))

    def identity(self) -> 'GreenElement':
        """Returns the empty word"""
        return GreenElement(self, ())

    def generator(self, component:int, value:Any) -> 'GreenElement':
        """Returns the element of the single letter value^component"""
        return self.normalize([(component, value)])

    def generators(self) -> list[Letter]:
        """
        Returns all non identity letters in letter order.

        Raises:
            ValueError: Raised if a component monoid does not enumerate its elements
        """
        return [Letter(c, v) for c, m in enumerate(self.components) for v in m.non_identity_elements()]

    def enumerate(self, max_length:Optional[int]=None) -> list['GreenElement']:
        """
        Returns all elements which are products of at most max_length generators.

        Args:
            max_length (Optional[int], optional): Word length bound. Defaults to settings.enumeration_length.

        Returns:
            list[GreenElement]: Distinct elements sorted by length, then letter keys
        """
        if max_length is None: max_length = self.settings.enumeration_length
        gens = [self.normalize([g]) for g in self.generators()]
        one = self.identity()
        seen = {one}
        frontier = [one]
        for _ in range(max_length):
            nxt = []
            for x in frontier:
                for g in gens:
                    y = multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
            if not frontier: break
        logger.debug('enumerated %d elements up to length %d', len(seen), max_length)
        return sorted(seen, key=lambda e: self.word_key(e.word))

@dataclass(frozen=True, eq=False)
class GreenElement():
    """
    Class representing an element of a Green product by its canonical word.

    Dont instanciate this class directly. Use GreenContext.normalize.
    """
    context:GreenContext
    """Green product this element belongs to"""
    word:Word
    """Canonical word"""

    def __mul__(self, other:'GreenElement') -> 'GreenElement':
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, GreenElement): return NotImplemented
        return self.context is other.context and equal(self, other)

    def __hash__(self):
        return hash((id(self.context), tuple(l.component for l in self.word)))

    def __len__(self):
        return len(self.word)

    def __str__(self):
        if not self.word: return '1'
        return ' * '.join(f'v{l.component}:{l.value!r}' for l in self.word)

    def is_identity(self) -> bool:
        """Returns True if this is the empty word"""
        return not self.word

    def support(self) -> frozenset[int]:
        """Returns the vertices carrying a letter"""
        return frozenset(l.component for l in self.word)

def _check_same_context(x:GreenElement, y:GreenElement):
    if x.context is not y.context:
        raise ContextMismatchError('elements belong to different Green products')

def _drop_identities(ctx:GreenContext, word:Iterable[Letter]) -> list[Letter]:
    return [l for l in word if not ctx.components[l.component].is_identity(l.value)]

def _combine_once(ctx:GreenContext, word:list[Letter]) -> Optional[list[Letter]]:
    # letter i can be shuffled next to letter j iff all letters in between commute with j
    adjacent = ctx.graph.adjacent
    for j, right in enumerate(word):
        v = right.component
        for i in range(j - 1, -1, -1):
            u = word[i].component
            if u == v:
                m = ctx.components[v]
                value = m.op(word[i].value, right.value)
                head = word[:i] + word[i + 1:j]
                if m.is_identity(value): return head + word[j + 1:]
                return head + [Letter(v, value)] + word[j + 1:]
            if not adjacent(u, v): break
    return None

def _combine(ctx:GreenContext, word:list[Letter]) -> list[Letter]:
    while True:
        combined = _combine_once(ctx, word)
        if combined is None: return word
        word = combined

def _least_factor(m:Monoid, z:Any, target:Any) -> Any:
    for y in m.elements:
        if m.equal(m.op(z, y), target): return y
    return target

def _absorb(ctx:GreenContext, word:list[Letter]) -> list[Letter]:
    # z is the product of the earlier letters at the same vertex. A letter y with zy = z
    # is a factor of the prefix and drops out, otherwise y is replaced by the least y'
    # with zy' = zy.
    chains = {}
    out = []
    for l in word:
        m = ctx.components[l.component]
        z = chains.get(l.component, m.identity)
        zy = m.op(z, l.value)
        if m.equal(zy, z): continue
        out.append(Letter(l.component, _least_factor(m, z, zy)))
        chains[l.component] = zy
    return out

def _lexmin(ctx:GreenContext, word:list[Letter]) -> Word:
    adjacent = ctx.graph.adjacent
    remaining = list(word)
    out = []
    while remaining:
        best, best_key = -1, None
        for idx, letter in enumerate(remaining):
            if all(adjacent(p.component, letter.component) for p in remaining[:idx]):
                key = ctx.letter_key(letter)
                if best_key is None or key < best_key:
                    best, best_key = idx, key
        out.append(remaining.pop(best))
    return tuple(out)

def _cmon_form(ctx:GreenContext, word:list[Letter]) -> Word:
    acc = {}
    for l in word:
        m = ctx.components[l.component]
        acc[l.component] = m.op(acc.get(l.component, m.identity), l.value)
    return tuple(Letter(c, acc[c]) for c in sorted(acc) if not ctx.components[c].is_identity(acc[c]))

def _compute_normal_form(ctx:GreenContext, word:Word) -> Word:
    w = _drop_identities(ctx, word)
    if ctx.variety == EVarieties.CMON: return _cmon_form(ctx, w)
    if ctx.variety == EVarieties.GMON:
        w = _absorb(ctx, w)
        while True:
            nxt = _absorb(ctx, _combine(ctx, w))
            if nxt == w: break
            w = nxt
    else:
        w = _combine(ctx, w)
    return _lexmin(ctx, w)

_NORMAL_FORM_CACHE_SIZE = 1 << 16

def _normal_form(ctx:GreenContext, word:Word) -> Word:
    cache = ctx._normal_forms
    try:
        return cache[word]
    except KeyError:
        pass
    except TypeError: # unhashable values
        return _compute_normal_form(ctx, word)
    nf = _compute_normal_form(ctx, word)
    if len(cache) >= _NORMAL_FORM_CACHE_SIZE: cache.clear()
    cache[word] = nf
    return nf

def normalize(raw_word:Iterable[Sequence], index_graph:SimpleGraph, components:Sequence[Monoid],
              variety:EVarieties=EVarieties.MON, settings:Settings=DEFAULT_SETTINGS) -> GreenElement:
    """
    Returns the canonical form of raw_word in the Green product of components over index_graph.

    The canonical form is computed by
    (1) dropping identity letters,
    (2) combining same-component letters which can be shuffled next to each other until no such pair is left,
    (3) choosing the lexicographically least word of the shuffle class under the letter order
    (component, element order).
    In CMON all letters of a component are combined and sorted by component.
    In GMON a letter is dropped if the product of the earlier letters at its vertex absorbs it
    and its value is replaced by the least value with the same effect on that product.

    Raises:
        UnknownComponentError: Raised if a letter refers to an unknown vertex
        ElementNotInMonoidError: Raised if a value is not in its component monoid
    """
    return GreenContext(index_graph, tuple(components), variety, settings).normalize(raw_word)

def multiply(x:GreenElement, y:GreenElement) -> GreenElement:
    """
    Returns the product x*y.

    Raises:
        ContextMismatchError: Raised if x and y belong to different Green products
    """
    _check_same_context(x, y)
    if not x.word: return y
    if not y.word: return x
    return GreenElement(x.context, _normal_form(x.context, x.word + y.word))

def equal(x:GreenElement, y:GreenElement) -> bool:
    """
    Returns True if x and y are the same element, i.e. their canonical words agree.

    Raises:
        ContextMismatchError: Raised if x and y belong to different Green products
    """
    _check_same_context(x, y)
    if len(x.word) != len(y.word): return False
    ctx = x.context
    return all(a.component == b.component and ctx.components[a.component].equal(a.value, b.value)
               for a, b in zip(x.word, y.word))

def aut_action(perm:Sequence[int], x:GreenElement, check:bool=True) -> GreenElement:
    """
    Relabels the components of every letter of x by the vertex permutation perm.

    Args:
        perm (Sequence[int]): perm[v] is the image of vertex v
        x (GreenElement): element to be relabeled
        check (bool, optional): Check that perm is an automorphism. Defaults to True.

    Raises:
        NotAnAutomorphismError: Raised if perm is not an automorphism of the indexing graph
            or moves a vertex onto a vertex with another component monoid
    """
    ctx = x.context
    if check:
        if not ctx.graph.is_automorphism(perm):
            raise NotAnAutomorphismError(f'{list(perm)} is not an automorphism of the indexing graph')
        if any(ctx.components[perm[v]] is not ctx.components[v] for v in range(len(ctx.components))):
            raise NotAnAutomorphismError(f'{list(perm)} does not preserve the component monoids')
    return GreenElement(ctx, _normal_form(ctx, tuple(Letter(perm[l.component], l.value) for l in x.word)))

def _check_fold_maps(ctx:GreenContext, maps:Sequence[MonoidHom], target:Monoid, settings:Settings):
    for v, (m, f) in enumerate(zip(ctx.components, maps)):
        if f.source is not m:
            raise CompatibilityError(f'map at vertex {v} does not start at {m.name}')
        if f.target is not target:
            raise CompatibilityError(f'map at vertex {v} does not end at {target.name}')
    for u, v in ctx.graph.sorted_edges():
        fu, fv = maps[u], maps[v]
        mu, mv = ctx.components[u], ctx.components[v]
        if mu.is_finite() and mv.is_finite():
            pairs = product(mu.elements, mv.elements)
        else:
            pairs = ((a, b) for (a, _), (b, _) in zip(mu.pairs(settings), mv.pairs(settings)))
        for a, b in pairs:
            p, q = fu(a), fv(b)
            if not target.equal(target.op(p, q), target.op(q, p)):
                raise CompatibilityError(f'images of {a!r} at {u} and {b!r} at {v} do not commute in {target.name}')

def universal_fold(x:GreenElement, vertex_maps:Sequence[MonoidHom]|Mapping[int, MonoidHom],
                   target:Optional[Monoid]=None, check:bool=True,
                   settings:Settings=DEFAULT_SETTINGS) -> Any:
    """
    Returns f_{v1}(m1)...f_{vk}(mk) for the word m1^{v1}...mk^{vk} of x.

    The result does not depend on the representative word as long as the
    images of adjacent components commute in the target monoid.

    Args:
        x (GreenElement): element to be folded
        vertex_maps (Sequence[MonoidHom] | Mapping[int, MonoidHom]): homomorphism from the component monoid of every vertex into the target
        target (Optional[Monoid], optional): Target monoid. Defaults to the target of the first map.
        check (bool, optional): Check the commutation condition on every edge. Defaults to True.
        settings (Settings, optional): Sample budget for infinite components.

    Raises:
        CompatibilityError: Raised if a map does not fit its component or the target,
            or if images of adjacent components do not commute
    """
    ctx = x.context
    n = len(ctx.components)
    if isinstance(vertex_maps, Mapping):
        missing = [v for v in range(n) if v not in vertex_maps]
        if missing: raise CompatibilityError(f'no maps given for vertices {missing}')
        maps = [vertex_maps[v] for v in range(n)]
    else:
        maps = list(vertex_maps)
        if len(maps) != n: raise CompatibilityError(f'expected {n} vertex maps, got {len(maps)}')
    if target is None:
        if not maps: raise ValueError('target must be given for an empty indexing graph')
        target = maps[0].target
    if check: _check_fold_maps(ctx, maps, target, settings)
    return target.product(maps[l.component](l.value) for l in x.word)
