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
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from pynetmod.algebra import boolean_monoid
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties
from pynetmod.exceptions import LiteralParseError
from pynetmod.network_model import network_model, simple_graph_model
from pynetmod.operad import (RangeLimitedState, BoundedDegreeNetwork, act_range_limited,
                             full_bounded_degree_action)
from pynetmod.protocols import IMetricSpace
from .json_codec import space_from_json, range_state_from_json, bounded_from_json
from .literals import parse_operation

logger = logging.getLogger(__name__)

@dataclass
class Scenario():
    """
    Class representing a scenario file: a list of states of one algebra and
    a list of operations. Every operation acts on all states.

    A scenario with a range limit L is range limited, otherwise it needs a degree bound k.
    """
    states:list[RangeLimitedState|BoundedDegreeNetwork]
    """States acted on by every operation"""
    ops:list[str] = field(default_factory=list)
    """Operation literals (perm; network)"""
    space:Optional[IMetricSpace] = None
    """Metric space of a range limited scenario"""
    limit:Optional[float] = None
    """Range limit of a range limited scenario"""
    k:Optional[int] = None
    """Degree bound of a bounded degree scenario"""

    @property
    def is_range_limited(self) -> bool:
        """True if this scenario acts on range limited states"""
        return self.limit is not None

    def profile(self) -> tuple[int, ...]:
        """Returns the sizes of all states"""
        return tuple(s.n for s in self.states)

def load_scenario(data:dict) -> Scenario:
    """
    Returns the scenario encoded by
    {space: {type, matrix?}, L, states: [{n, edges, positions}], ops: [...]} or
    {k, states: [{n, edges}], ops: [...]}.

    Raises:
        LiteralParseError: Raised if neither L nor k is given
    """
    ops = list(data.get('ops', []))
    if 'L' in data:
        space = space_from_json(data.get('space', {'type': 'plane'}))
        limit = float(data['L'])
        states = [range_state_from_json(s, space, limit) for s in data['states']]
        return Scenario(states, ops, space=space, limit=limit)
    if 'k' in data:
        k = int(data['k'])
        return Scenario([bounded_from_json(s, k) for s in data['states']], ops, k=k)
    raise LiteralParseError('scenario needs a range limit L or a degree bound k')

def read_scenario(path:str|Path) -> Scenario:
    """Reads a scenario from a JSON file"""
    with open(path, 'r', encoding='utf-8') as f:
        return load_scenario(json.load(f))

def apply_operation(scenario:Scenario, op_text:str, settings:Settings=DEFAULT_SETTINGS) -> Any:
    """Parses op_text for the profile of scenario and acts on all its states"""
    if scenario.is_range_limited:
        op = parse_operation(op_text, simple_graph_model(), scenario.profile())
        return act_range_limited(op, scenario.states)
    model = network_model(boolean_monoid(), EVarieties.GMON, settings)
    op = parse_operation(op_text, model, scenario.profile())
    return full_bounded_degree_action(op, scenario.states)

def run_scenario(scenario:Scenario, settings:Settings=DEFAULT_SETTINGS) -> list:
    """Returns the result of every operation of scenario acting on its states"""
    results = []
    for op_text in scenario.ops:
        logger.info('acting by %s', op_text)
        results.append(apply_operation(scenario, op_text, settings))
    return results
