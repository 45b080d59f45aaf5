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

from dataclasses import dataclass
from functools import reduce
from typing import Any, Sequence

from pynetmod.exceptions import ProfileMismatchError, CompatibilityError
from pynetmod.network_model import Permutation
from pynetmod.protocols import INetworkModel

@dataclass(frozen=True, eq=False)
class OperadOperation():
    """
    Class representing an operation (sigma, g) in O_F(n1, ..., nk; n) of the operad of a network model F.

    Args:
        model: Network model F
        profile: Input sizes (n1, ..., nk). The output size is n = n1 + ... + nk
        sigma: Permutation of n points
        network: Network of F(n)

    Raises:
        ProfileMismatchError: Raised if sigma or network does not fit n
    """
    model:INetworkModel
    """Network model F"""
    profile:tuple[int, ...]
    """Input sizes"""
    sigma:Permutation
    """Permutation of the output vertices"""
    network:Any
    """Network of F(n)"""

    def __post_init__(self):
        object.__setattr__(self, 'profile', tuple(self.profile))
        if any(ni < 0 for ni in self.profile):
            raise ProfileMismatchError(f'input sizes must not be negative, got {self.profile}')
        n = sum(self.profile)
        if self.sigma.n != n:
            raise ProfileMismatchError(f'permutation acts on {self.sigma.n} points, profile sums to {n}')
        if self.network.n != n:
            raise ProfileMismatchError(f'network has {self.network.n} vertices, profile sums to {n}')

    @property
    def n(self) -> int:
        """Output size"""
        return sum(self.profile)

    @property
    def arity(self) -> int:
        """Number of inputs"""
        return len(self.profile)

    def __eq__(self, other):
        if not isinstance(other, OperadOperation): return NotImplemented
        return (self.model is other.model and self.profile == other.profile
                and self.sigma == other.sigma and self.network == other.network)

    def __hash__(self):
        return hash((self.profile, self.sigma))

def identity_operation(model:INetworkModel, n:int) -> OperadOperation:
    """Returns the unit (id, empty network) in O_F(n; n)"""
    return OperadOperation(model, (n,), Permutation.identity(n), model.identity(n))

def operad_compose(outer:OperadOperation, inners:Sequence[OperadOperation]) -> OperadOperation:
    """
    Composes outer = (sigma, g) with inners (tau_i, h_i).

    The result is (sigma * (tau_1 + ... + tau_k), sigma(h_1 + ... + h_k) u g) where + is the
    disjoint union. Its profile is the concatenation of the inner profiles.

    Raises:
        ProfileMismatchError: Raised if the number or output sizes of inners do not match the profile of outer
        CompatibilityError: Raised if an inner operation belongs to another network model
    """
    if len(inners) != outer.arity:
        raise ProfileMismatchError(f'outer operation takes {outer.arity} inputs, got {len(inners)}')
    model = outer.model
    for i, (inner, ni) in enumerate(zip(inners, outer.profile)):
        if inner.model is not model:
            raise CompatibilityError(f'inner operation {i} belongs to another network model')
        if inner.n != ni:
            raise ProfileMismatchError(f'input {i} of outer operation has size {ni}, inner operation has output size {inner.n}')
    tau = reduce(Permutation.block_sum, (op.sigma for op in inners), Permutation.identity(0))
    h = reduce(model.disjoint_union, (op.network for op in inners), model.identity(0))
    network = model.overlay(model.permute(outer.sigma, h), outer.network)
    profile = tuple(ni for op in inners for ni in op.profile)
    return OperadOperation(model, profile, outer.sigma * tau, network)
