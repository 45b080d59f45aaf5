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

import json
from typing import Any, Sequence

from pynetmod.algebra import Monoid
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EMonoidKinds, EVarieties
from pynetmod.exceptions import LiteralParseError
from pynetmod.green import GreenContext, GreenElement, SimpleGraph
from pynetmod.network_model import NetworkElement, network_model
from pynetmod.operad import BoundedDegreeNetwork, RangeLimitedState, EuclideanSpace, FiniteMetricSpace
from pynetmod.protocols import IMetricSpace
from .literals import parse_monoid, format_monoid, parse_element, format_element

def value_to_json(value:Any, monoid:Monoid) -> Any:
    """Returns a JSON value for an element of monoid. Naturals stay numbers, products become lists"""
    match monoid.kind:
        case EMonoidKinds.NAT | EMonoidKinds.FREE | EMonoidKinds.BAND: return value
        case EMonoidKinds.PRODUCT: return [value_to_json(v, f) for v, f in zip(value, monoid.factors)]
    return format_element(value, monoid)

def value_from_json(data:Any, monoid:Monoid) -> Any:
    """
    Returns the element of monoid encoded by data.

    Raises:
        LiteralParseError: Raised if data encodes no element of monoid
    """
    match monoid.kind:
        case EMonoidKinds.NAT | EMonoidKinds.FREE | EMonoidKinds.BAND:
            if monoid.contains(data): return data
            raise LiteralParseError(f'{data!r} is not an element of {monoid.name}')
        case EMonoidKinds.PRODUCT:
            if not isinstance(data, list) or len(data) != 2:
                raise LiteralParseError(f'{data!r} is not a pair')
            return tuple(value_from_json(v, f) for v, f in zip(data, monoid.factors))
    return parse_element(str(data), monoid)

def graph_to_json(g:SimpleGraph, one_based:bool=True) -> dict:
    """Returns {n, edges} with sorted edges"""
    s = 1 if one_based else 0
    return {'n': g.n_vertices, 'edges': [[u + s, v + s] for u, v in g.sorted_edges()]}

def graph_from_json(data:dict, one_based:bool=True) -> SimpleGraph:
    """Returns the simple graph encoded by {n, edges}"""
    s = 1 if one_based else 0
    return SimpleGraph(int(data['n']), frozenset((u - s, v - s) for u, v in data.get('edges', [])))

def green_to_json(x:GreenElement) -> dict:
    """Returns {graph: {n, edges}, variety, word: [{component, value}, ...]} with 0-based vertices"""
    comps = x.context.components
    return {'graph': graph_to_json(x.context.graph, one_based=False),
            'variety': x.context.variety.value,
            'word': [{'component': l.component, 'value': value_to_json(l.value, comps[l.component])}
                     for l in x.word]}

def green_from_json(data:dict, components:Sequence[Monoid], settings:Settings=DEFAULT_SETTINGS) -> GreenElement:
    """Returns the Green product element encoded by data over the given component monoids"""
    ctx = GreenContext(graph_from_json(data['graph'], one_based=False), tuple(components),
                       EVarieties(data.get('variety', 'mon')), settings)
    word = []
    for letter in data['word']:
        c = letter['component']
        word.append((c, value_from_json(letter['value'], ctx.monoid(c))))
    return ctx.normalize(word)

def network_to_json(g:NetworkElement) -> dict:
    """Returns {n, monoid, variety, word: [{u, v, value}, ...]} with 1-based vertices"""
    m = g.context.edge_monoid
    return {'n': g.n, 'monoid': format_monoid(m), 'variety': g.context.variety.value,
            'word': [{'u': u + 1, 'v': v + 1, 'value': value_to_json(value, m)} for u, v, value in g.word]}

def network_from_json(data:dict, settings:Settings=DEFAULT_SETTINGS) -> NetworkElement:
    """Returns the network encoded by data in the shared network model of its monoid and variety"""
    m = parse_monoid(data['monoid'])
    ctx = network_model(m, EVarieties(data.get('variety', 'mon')), settings)
    return ctx.element(int(data['n']), [(l['u'] - 1, l['v'] - 1, value_from_json(l['value'], m))
                                        for l in data['word']])

def space_to_json(space:IMetricSpace) -> dict:
    """Returns {type, matrix?} of a metric space"""
    data = {'type': space.type.value}
    if isinstance(space, FiniteMetricSpace): data['matrix'] = space.matrix.tolist()
    return data

def space_from_json(data:dict) -> IMetricSpace:
    """
    Returns the metric space encoded by {type: line|plane|matrix, matrix}.

    Raises:
        LiteralParseError: Raised if the type is unknown
    """
    match data.get('type'):
        case 'line': return EuclideanSpace(1)
        case 'plane': return EuclideanSpace(2)
        case 'matrix': return FiniteMetricSpace(data['matrix'])
    raise LiteralParseError(f'unknown metric space {data.get("type")!r}, expected line, plane or matrix')

def bounded_to_json(h:BoundedDegreeNetwork) -> dict:
    """Returns {n, k, edges} with 1-based vertices"""
    return {**graph_to_json(h.graph), 'k': h.k}

def bounded_from_json(data:dict, k:int|None=None) -> BoundedDegreeNetwork:
    """Returns the bounded degree network encoded by {n, edges, k}. k overrides the encoded bound"""
    return BoundedDegreeNetwork(graph_from_json(data), int(data['k'] if k is None else k))

def range_state_to_json(state:RangeLimitedState) -> dict:
    """Returns {n, edges, positions} with 1-based vertices"""
    positions = [list(p) if isinstance(p, tuple) else p for p in state.positions]
    return {**graph_to_json(state.graph), 'positions': positions}

def range_state_from_json(data:dict, space:IMetricSpace, limit:float) -> RangeLimitedState:
    """Returns the range limited state encoded by {n, edges, positions}"""
    return RangeLimitedState(graph_from_json(data), tuple(data['positions']), space, float(limit))

def dumps(data:Any) -> str:
    """Returns data as indented JSON text"""
    return json.dumps(data, indent=2)
