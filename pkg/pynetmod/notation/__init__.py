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

from .literals import (parse_monoid, format_monoid, parse_element, format_element, parse_edge_word,
                       parse_network, format_network, parse_green_word, format_green_word,
                       parse_permutation, format_permutation, parse_operation, format_operation)
from .json_codec import (value_to_json, value_from_json, graph_to_json, graph_from_json, green_to_json,
                         green_from_json, network_to_json, network_from_json, space_to_json, space_from_json,
                         bounded_to_json, bounded_from_json, range_state_to_json, range_state_from_json, dumps)
from .dot import graph_to_dot, kneser_to_dot, network_to_dot
from .scenario import Scenario, load_scenario, read_scenario, apply_operation, run_scenario
