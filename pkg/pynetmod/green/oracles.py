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
from collections import deque
from typing import Callable, Iterable, Iterator, Optional, Sequence

from pynetmod.config import Settings
from pynetmod.enums import EVarieties
from pynetmod.exceptions import BudgetExceededError
from .green_product import GreenContext, Letter, Word

logger = logging.getLogger(__name__)

def _closure(start:Word, moves:Callable[[Word], Iterator[Word]], bound:int) -> set[Word]:
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in moves(w):
            if nxt in seen: continue
            seen.add(nxt)
            if len(seen) > bound:
                raise BudgetExceededError(f'closure of {len(start)}-letter word exceeds {bound} words')
            queue.append(nxt)
    return seen

def _shuffles(ctx:GreenContext, w:Word) -> Iterator[Word]:
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if ctx.graph.adjacent(a.component, b.component):
            yield w[:i] + (b, a) + w[i + 2:]

def _combinations(ctx:GreenContext, w:Word) -> Iterator[Word]:
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a.component != b.component: continue
        m = ctx.components[a.component]
        value = m.op(a.value, b.value)
        if m.is_identity(value): yield w[:i] + w[i + 2:]
        else: yield w[:i] + (Letter(a.component, value),) + w[i + 2:]

def _identity_deletions(ctx:GreenContext, w:Word) -> Iterator[Word]:
    for i, l in enumerate(w):
        if ctx.components[l.component].is_identity(l.value):
            yield w[:i] + w[i + 1:]

def _splits(ctx:GreenContext, w:Word, max_len:int) -> Iterator[Word]:
    if len(w) + 1 > max_len: return
    for i, l in enumerate(w):
        m = ctx.components[l.component]
        if not m.is_finite(): continue
        rest = m.non_identity_elements()
        for p in rest:
            for q in rest:
                if m.equal(m.op(p, q), l.value):
                    yield w[:i] + (Letter(l.component, p), Letter(l.component, q)) + w[i + 1:]

def _swaps(w:Word) -> Iterator[Word]:
    # ab -> ba for contiguous subwords a = w[i:j], b = w[j:k]
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                yield w[:i] + w[j:k] + w[i:j] + w[k:]

def _graphic_moves(w:Word, max_len:int) -> Iterator[Word]:
    # aba -> ab and ab -> aba for contiguous subwords a = w[i:j] and b = w[j:k], b may be empty
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            a = w[i:j]
            for k in range(j, n + 1):
                if w[k:k + len(a)] == a:
                    yield w[:k] + w[k + len(a):]
                if n + len(a) <= max_len:
                    yield w[:k] + a + w[k:]

def shuffle_closure_oracle(word:Iterable[Sequence], context:GreenContext, max_steps:Optional[int]=None,
                           settings:Optional[Settings]=None) -> set[Word]:
    """
    Returns all words reachable from word by shuffles, combinations of
    neighbouring same-component letters and deletions of identity letters.

    This is ground truth for equality in the variety MON: two words are equal
    iff their closures intersect.

    Args:
        word (Iterable[Sequence]): Letters or (component, value) pairs
        context (GreenContext): Green product the word belongs to
        max_steps (Optional[int], optional): Bound on the closure size. Defaults to settings.closure_bound.
        settings (Optional[Settings], optional): Defaults to the settings of context.

    Raises:
        BudgetExceededError: Raised if the closure grows beyond its bound
    """
    settings = settings or context.settings
    bound = max_steps if max_steps is not None else settings.closure_bound
    start = context.validate_word(word)
    def moves(w):
        yield from _shuffles(context, w)
        yield from _combinations(context, w)
        yield from _identity_deletions(context, w)
    closure = _closure(start, moves, bound)
    logger.debug('shuffle closure of %d letters has %d words', len(start), len(closure))
    return closure

def congruence_closure_oracle(word:Iterable[Sequence], context:GreenContext,
                              variety:Optional[EVarieties]=None, max_len:Optional[int]=None,
                              settings:Optional[Settings]=None) -> set[Word]:
    """
    Returns all words of length <= max_len reachable from word by shuffles, combinations,
    splits of letters of finite components and instances of the defining equations of variety.
    The equations are instantiated with a and b ranging over all contiguous subwords:
    ab <-> ba for CMON, aba <-> ab for GMON.

    For MON this is the shuffle closure.

    Args:
        word (Iterable[Sequence]): Letters or (component, value) pairs
        context (GreenContext): Green product the word belongs to
        variety (Optional[EVarieties], optional): Defaults to the variety of context.
        max_len (Optional[int], optional): Longest word visited. Defaults to the length of word.
        settings (Optional[Settings], optional): Defaults to the settings of context.

    Raises:
        BudgetExceededError: Raised if the closure grows beyond settings.closure_bound
    """
    settings = settings or context.settings
    variety = EVarieties(variety or context.variety)
    if variety == EVarieties.MON:
        return shuffle_closure_oracle(word, context, settings=settings)
    start = context.validate_word(word)
    if max_len is None: max_len = len(start)
    def moves(w):
        yield from _shuffles(context, w)
        yield from _combinations(context, w)
        yield from _identity_deletions(context, w)
        yield from _splits(context, w, max_len)
        if variety == EVarieties.CMON: yield from _swaps(w)
        else: yield from _graphic_moves(w, max_len)
    closure = _closure(start, moves, settings.closure_bound)
    logger.debug('%s congruence closure of %d letters has %d words', variety.value, len(start), len(closure))
    return closure

def oracle_equal(u:Iterable[Sequence], v:Iterable[Sequence], context:GreenContext,
                 variety:Optional[EVarieties]=None, max_len:Optional[int]=None,
                 settings:Optional[Settings]=None) -> bool:
    """
    Returns True if the oracle closures of the raw words u and v intersect.

    Args:
        max_len (Optional[int], optional): Longest word visited by the congruence closure.
            Defaults to the length of the longer word.
    """
    u, v = context.validate_word(u), context.validate_word(v)
    if max_len is None: max_len = max(len(u), len(v))
    cu = congruence_closure_oracle(u, context, variety, max_len, settings)
    if v in cu: return True
    cv = congruence_closure_oracle(v, context, variety, max_len, settings)
    return not cu.isdisjoint(cv)
