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

from typing import Any, Optional, Sequence

from pynetmod.auxiliary import subset_label
from pynetmod.enums import EVarieties
from pynetmod.green import SimpleGraph
from pynetmod.kneser import k_subsets, kneser_graph
from pynetmod.network_model import NetworkElement
from .literals import format_element

def graph_to_dot(g:SimpleGraph, name:str='G', labels:Optional[Sequence[str]]=None) -> str:
    """
    Returns g as undirected Graphviz graph.

    Args:
        g (SimpleGraph): graph to export
        name (str, optional): graph name. Defaults to 'G'.
        labels (Optional[Sequence[str]], optional): vertex labels. Defaults to 1-based vertex numbers.
    """
    if labels is None: labels = [str(v + 1) for v in range(g.n_vertices)]
    lines = [f'graph {name} {{']
    for v in range(g.n_vertices):
        lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in g.sorted_edges():
        lines.append(f'  {u} -- {v};')
    lines.append('}')
    return '\n'.join(lines) + '\n'

def kneser_to_dot(n:int, k:int) -> str:
    """Returns KG_{n,k} as Graphviz graph. Vertices are labeled by their subsets, e.g. '12'"""
    labels = [subset_label(s) for s in k_subsets(n, k)]
    return graph_to_dot(kneser_graph(n, k), f'KG_{n}_{k}', labels)

def network_to_dot(g:Any, name:str='network') -> str:
    """
    Returns a network as Graphviz graph with 1-based vertex labels.

    Networks of MON and GMON models are drawn as multigraphs with one edge per
    letter in word order. Each edge is labeled with its position in the word and its weight.
    Other networks get one edge per weighted edge.
    """
    ordered = isinstance(g, NetworkElement) and g.context.variety != EVarieties.CMON
    m = g.context.edge_monoid if isinstance(g, NetworkElement) else g.model.edge_monoid
    lines = [f'graph {name} {{']
    for v in range(g.n):
        lines.append(f'  {v} [label="{v + 1}"];')
    for pos, (u, v, value) in enumerate(g.word, start=1):
        label = f'{pos}:{format_element(value, m)}' if ordered else format_element(value, m)
        label = label.replace('"', '\\"')
        lines.append(f'  {u} -- {v} [label="{label}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
