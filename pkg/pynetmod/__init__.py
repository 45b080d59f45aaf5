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

__version__ = '0.1.0'

__pdoc__ = {}
__pdoc__['__main__'] = False

from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties, EMonoidKinds, EOutputFormats, EMetricSpaces
from pynetmod.algebra import (Monoid, MonoidHom, boolean_monoid, nat_monoid, free_monoid, path_band_monoid,
                              direct_product)
from pynetmod.green import SimpleGraph, GreenContext, GreenElement
from pynetmod.kneser import kneser_graph, kneser_laxator
from pynetmod.network_model import (Permutation, NetworkModelContext, NetworkElement, network_model,
                                    simple_graph_model, multigraph_model, counit_eval)
from pynetmod.operad import OperadOperation, operad_compose
