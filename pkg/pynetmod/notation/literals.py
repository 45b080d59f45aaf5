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

import re
from typing import Any, Sequence

from pynetmod.algebra import Monoid, boolean_monoid, nat_monoid, free_monoid, path_band_monoid
from pynetmod.enums import EMonoidKinds
from pynetmod.exceptions import LiteralParseError
from pynetmod.green import GreenContext, GreenElement
from pynetmod.network_model import NetworkModelContext, OrdinaryNetworkModel, Permutation
from pynetmod.operad import OperadOperation

_EDGE_TERM = re.compile(r'^e\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*(.+?)\s*$')
_GREEN_TERM = re.compile(r'^v(\d+)\s*:\s*(.+?)\s*$')
_CYCLE = re.compile(r'\(([^()]*)\)')

def parse_monoid(text:str) -> Monoid:
    """
    Returns the monoid named by text: bool, nat, band or free:<alphabet>.

    Raises:
        LiteralParseError: Raised if text names no known monoid
    """
    text = text.strip()
    if text == 'bool': return boolean_monoid()
    if text == 'nat': return nat_monoid()
    if text == 'band': return path_band_monoid()
    if text.startswith('free:'):
        try:
            return free_monoid(text[5:])
        except ValueError as e:
            raise LiteralParseError(str(e)) from e
    raise LiteralParseError(f'unknown monoid {text!r}, expected bool, nat, band or free:<alphabet>')

def format_monoid(monoid:Monoid) -> str:
    """Returns the literal name of monoid as accepted by parse_monoid"""
    match monoid.kind:
        case EMonoidKinds.BOOL: return 'bool'
        case EMonoidKinds.NAT: return 'nat'
        case EMonoidKinds.BAND: return 'band'
        case EMonoidKinds.FREE: return f'free:{monoid.payload}'
    raise LiteralParseError(f'monoid {monoid.name} has no literal name')

def _split_top_level(text:str, sep:str) -> list[str]:
    parts, depth, quote, current = [], 0, None, []
    for ch in text:
        if quote:
            if ch == quote: quote = None
        elif ch in '"\'': quote = ch
        elif ch == '(': depth += 1
        elif ch == ')': depth -= 1
        elif ch == sep and depth == 0:
            parts.append(''.join(current))
            current = []
            continue
        current.append(ch)
    parts.append(''.join(current))
    return parts

def parse_element(text:str, monoid:Monoid) -> Any:
    """
    Parses an element literal of monoid.

    T / F for the boolean monoid, decimal integers for naturals, quoted words for
    free monoids, one of 1 a b c x y for the path band and (p,q) for direct products.

    Raises:
        LiteralParseError: Raised if text is no element of monoid
    """
    t = text.strip()
    match monoid.kind:
        case EMonoidKinds.BOOL:
            if t in ('T', 'F'): return t == 'T'
        case EMonoidKinds.NAT:
            if t.isdigit(): return int(t)
        case EMonoidKinds.BAND:
            if monoid.contains(t): return t
        case EMonoidKinds.FREE:
            if len(t) >= 2 and t[0] == t[-1] and t[0] in '"\'' and monoid.contains(t[1:-1]):
                return t[1:-1]
        case EMonoidKinds.PRODUCT:
            if t.startswith('(') and t.endswith(')'):
                parts = _split_top_level(t[1:-1], ',')
                if len(parts) == 2:
                    return tuple(parse_element(p, f) for p, f in zip(parts, monoid.factors))
    raise LiteralParseError(f'{text!r} is not an element of {monoid.name}')

def format_element(value:Any, monoid:Monoid) -> str:
    """Returns the literal of an element of monoid as accepted by parse_element"""
    match monoid.kind:
        case EMonoidKinds.BOOL: return 'T' if value else 'F'
        case EMonoidKinds.NAT | EMonoidKinds.BAND: return str(value)
        case EMonoidKinds.FREE: return f'"{value}"'
        case EMonoidKinds.PRODUCT:
            return '(' + ','.join(format_element(v, f) for v, f in zip(value, monoid.factors)) + ')'
    return str(value)

def _terms(text:str) -> list[str]:
    t = text.strip()
    if not t: raise LiteralParseError('empty literal, use 1 for the identity')
    if t == '1': return []
    return [p.strip() for p in _split_top_level(t, '*')]

def parse_edge_word(text:str, monoid:Monoid, n:int) -> list[tuple[int, int, Any]]:
    """
    Parses a network literal like 'e(1,2)=T * e(3,4)=T' into 0-based weighted edges.
    '1' is the empty network. Vertex labels are 1-based.

    Raises:
        LiteralParseError: Raised if a term is malformed, a vertex is out of range or an edge is a loop
    """
    word = []
    for term in _terms(text):
        match = _EDGE_TERM.match(term)
        if match is None:
            raise LiteralParseError(f'{term!r} is not an edge term e(i,j)=<element>')
        u, v = int(match[1]), int(match[2])
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise LiteralParseError(f'e({u},{v}) is not an edge between distinct vertices 1..{n}')
        word.append((u - 1, v - 1, parse_element(match[3], monoid)))
    return word

def parse_network(text:str, model:NetworkModelContext|OrdinaryNetworkModel, n:int) -> Any:
    """Parses a network literal over n vertices of model (free or ordinary network model)"""
    return model.element(n, parse_edge_word(text, model.edge_monoid, n))

def format_network(g:Any) -> str:
    """
    Returns the literal of a network with 1-based vertex labels. Free networks
    are written in canonical word order, ordinary networks in colex edge order.
    """
    if not g.word: return '1'
    m = g.context.edge_monoid if hasattr(g, 'context') else g.model.edge_monoid
    return ' * '.join(f'e({u + 1},{v + 1})={format_element(value, m)}' for u, v, value in g.word)

def parse_green_word(text:str, context:GreenContext) -> GreenElement:
    """
    Parses a word literal like 'v0:T * v2:T' of a Green product. Vertex indices are 0-based.

    Raises:
        LiteralParseError: Raised if a term is malformed or refers to an unknown vertex
    """
    word = []
    for term in _terms(text):
        match = _GREEN_TERM.match(term)
        if match is None:
            raise LiteralParseError(f'{term!r} is not a letter v<k>:<element>')
        c = int(match[1])
        if c >= len(context.components):
            raise LiteralParseError(f'vertex {c} is not in [0, {len(context.components)})')
        word.append((c, parse_element(match[2], context.components[c])))
    return context.normalize(word)

def format_green_word(x:GreenElement) -> str:
    """Returns the literal of a Green product element"""
    if not x.word: return '1'
    comps = x.context.components
    return ' * '.join(f'v{l.component}:{format_element(l.value, comps[l.component])}' for l in x.word)

def parse_permutation(text:str, n:int) -> Permutation:
    """
    Parses a permutation of n points in 1-based cycle notation, e.g. '(1 2)(3 4)'.
    '()', '' and 'id' are the identity. Points may be separated by blanks or ','.

    Raises:
        LiteralParseError: Raised if the notation is malformed or a point is out of range
    """
    t = text.strip()
    if t in ('', '()', 'id'): return Permutation.identity(n)
    if _CYCLE.sub('', t).strip():
        raise LiteralParseError(f'{text!r} is not in cycle notation')
    cycles = []
    for body in _CYCLE.findall(t):
        points = [p for p in re.split(r'[\s,]+', body.strip()) if p]
        if not all(p.isdigit() for p in points):
            raise LiteralParseError(f'cycle ({body}) must contain positive integers')
        cycles.append([int(p) - 1 for p in points])
    try:
        return Permutation.from_cycles(n, cycles)
    except ValueError as e:
        raise LiteralParseError(str(e)) from e

def format_permutation(sigma:Permutation) -> str:
    """Returns sigma in 1-based cycle notation. '()' for the identity"""
    cycles = sigma.to_cycles()
    if not cycles: return '()'
    return ''.join('(' + ' '.join(str(p + 1) for p in c) + ')' for c in cycles)

def parse_operation(text:str, model:NetworkModelContext|OrdinaryNetworkModel,
                    profile:Sequence[int]) -> OperadOperation:
    """
    Parses an operation literal '(perm; network)' for the given input profile.

    Raises:
        LiteralParseError: Raised if the literal is malformed
        ProfileMismatchError: Raised if the literal does not fit the profile
    """
    t = text.strip()
    if not (t.startswith('(') and t.endswith(')')) or ';' not in t:
        raise LiteralParseError(f'{text!r} is not an operation (perm; network)')
    perm_text, net_text = t[1:-1].split(';', 1)
    n = sum(profile)
    return OperadOperation(model, tuple(profile), parse_permutation(perm_text, n), parse_network(net_text, model, n))

def format_operation(op:OperadOperation) -> str:
    """Returns the literal of op"""
    return f'({format_permutation(op.sigma)}; {format_network(op.network)})'
