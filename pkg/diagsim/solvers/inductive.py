# Copyright (c) 2024 The diagsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Deflation solver: fix one diagonal entry per stage by a basis change,
recurse on the trailing block, finish with the order-2 case.

Used to cross-check the two-step solver; needs n - 1 stages.
"""

from dataclasses import dataclass

from diagsim.errors import PreconditionError
from diagsim.matrix import (Matrix, block_diagonal, conjugate, from_columns,
                            identity, invert, is_diagonal, is_scalar, lift,
                            matrix_vector, rank)
from diagsim.processor import Processor, check_hypotheses
from diagsim.trace import ReductionTrace, compose

ENTRY_FIX_NOTE = 'p13 = alpha23 - 1'


@dataclass(frozen=True)
class BasisChange:
    """Basis x, Ax - gamma x, then standard vectors; S has it as columns."""

    x: tuple
    basis: tuple
    basis_matrix: Matrix


def unit_vector(n, i, ring):
    return tuple(ring.one if j == i else ring.zero for j in range(n))


def find_independent_vector(A):
    """x with x, Ax independent: e_j for the first column j holding a
    nonzero off-diagonal entry, or e_i + e_j for the first a_ii != a_jj."""
    n, ring = A.order, A.ring
    if is_scalar(A):
        raise PreconditionError(
            'matrix is scalar; every x is an eigenvector')
    if not is_diagonal(A):
        for j in range(n):
            if any(not ring.is_zero(A[i, j]) for i in range(n) if i != j):
                return unit_vector(n, j, ring)
    for i in range(n):
        for j in range(i + 1, n):
            if A[i, i] != A[j, j]:
                return tuple(ring.one if k in (i, j) else ring.zero
                             for k in range(n))


def build_basis_change(A, x, gamma1):
    n, ring = A.order, A.ring
    Ax = matrix_vector(A, x)
    second = tuple(ring.sub(y, ring.mul(gamma1, z)) for y, z in zip(Ax, x))
    basis = [tuple(x), second]
    if rank(basis, ring) != 2:
        raise PreconditionError('x and Ax are linearly dependent')
    for j in range(n):
        if len(basis) == n:
            break
        candidate = unit_vector(n, j, ring)
        if rank(basis + [candidate], ring) == len(basis) + 1:
            basis.append(candidate)
    return BasisChange(tuple(x), tuple(basis), from_columns(basis, ring))


def entry_fix_conjugator(alpha, p13):
    """Identity except entry (0, 2) = p13."""
    return identity(alpha.order, alpha.ring).replace({(0, 2): p13})


def deflate(A, gamma1):
    """Witness whose result has (0, 0) = gamma1, (1, 2) = 1 and hence a
    nonscalar trailing block of order n - 1. Also returns the basis
    change used."""
    if A.order < 3:
        raise PreconditionError('deflation needs order at least 3')
    change = build_basis_change(A, find_independent_vector(A), gamma1)
    # alpha = S^-1 A S has first column (gamma1, 1, 0, ..., 0)
    represented = conjugate(A, invert(change.basis_matrix))
    alpha = represented.result
    p13 = alpha.ring.sub(alpha[1, 2], alpha.ring.one)
    fixed = conjugate(alpha, entry_fix_conjugator(alpha, p13))
    return compose(A, [represented, fixed]), change


def base_case(A, gamma1):
    """Order 2: in the basis x, Ax - gamma1 x the diagonal is
    (gamma1, tr A - gamma1)."""
    change = build_basis_change(A, find_independent_vector(A), gamma1)
    return conjugate(A, invert(change.basis_matrix)), change


def solve_inductive(A, gamma):
    A = lift(A)
    gamma = check_hypotheses(A, gamma)
    n = A.order
    steps = ReductionTrace()
    witnesses = []
    current = A
    for stage in range(n - 1):
        block = current.submatrix(stage)
        if block.order >= 3:
            local, change = deflate(block, gamma[stage])
            kind, note = 'deflate', ENTRY_FIX_NOTE
        else:
            local, change = base_case(block, gamma[stage])
            kind, note = 'base-case', ''
        lifted = block_diagonal(stage, local.conjugator)
        lifted_inverse = block_diagonal(stage, local.conjugator_inverse)
        witness = conjugate(current, lifted)
        assert witness.conjugator_inverse == lifted_inverse
        steps.record(kind, witness, indices={'stage': stage},
                     basis=change.basis_matrix, note=note)
        witnesses.append(witness)
        current = witness.result
        assert current.diagonal()[:stage + 1] == gamma[:stage + 1]
        assert current.order - stage - 1 < 2 or \
            not is_scalar(current.submatrix(stage + 1))
    return compose(A, witnesses), steps


class InductiveSolver(Processor):

    def __init__(self, verify=True, log_level='INFO'):
        super().__init__(name='inductive', verify=verify, log_level=log_level)

    def reduce(self, A, gamma):
        return solve_inductive(A, gamma)
