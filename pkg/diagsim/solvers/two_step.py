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

"""Two elementary similarities, after at most one diagonal bump.

1. diagonal input: add a unit at (0, s) (``diagonal_bump``);
2. make every off-diagonal entry of a row r equal to 1 (``unify_row``);
3. write the target diagonal through column r (``set_diagonal``).
"""

from collections import namedtuple
from fractions import Fraction

from diagsim.errors import PreconditionError
from diagsim.matrix import conjugate, identity, is_diagonal, lift, trace
from diagsim.processor import Processor, check_hypotheses
from diagsim.ring import INTEGER, RATIONAL
from diagsim.trace import ReductionTrace, compose

PivotChoice = namedtuple('PivotChoice', ['r', 's'])


def bump_column(A):
    """Smallest s with a_ss != a_00."""
    for s in range(1, A.order):
        if A[s, s] != A[0, 0]:
            return s
    raise PreconditionError('matrix is scalar; theorem hypothesis violated')


def bump_conjugator(A, s):
    difference = A.ring.sub(A[s, s], A[0, 0])
    if A.ring == INTEGER:
        # 1 / (a_ss - a_00) is rational; the result stays integral
        return identity(A.order, RATIONAL).replace(
            {(0, s): Fraction(1, difference)})
    return identity(A.order, A.ring).replace(
        {(0, s): A.ring.inv(difference)})


def diagonal_bump(A, s):
    if not is_diagonal(A):
        raise PreconditionError('diagonal bump needs a diagonal matrix')
    if not 0 < s < A.order:
        raise PreconditionError('bump column must be in 1..{}'.format(
            A.order - 1))
    if A[s, s] == A[0, 0]:
        raise PreconditionError(
            'bump needs a_00 != a_ss, both are {}'.format(
                A.ring.format(A[0, 0])))
    return conjugate(A, bump_conjugator(A, s))


def choose_pivot(A):
    """Lexicographically first off-diagonal entry equal to 1, otherwise
    the first nonzero one."""
    if is_diagonal(A):
        raise PreconditionError('no off-diagonal pivot in a diagonal matrix')
    cells = [(r, s) for r in range(A.order) for s in range(A.order) if r != s]
    for r, s in cells:
        if A.ring.is_one(A[r, s]):
            return PivotChoice(r, s)
    for r, s in cells:
        if not A.ring.is_zero(A[r, s]):
            return PivotChoice(r, s)


def unify_row_conjugator(A, pivot):
    r, s = pivot
    if not (0 <= r < A.order and 0 <= s < A.order):
        raise PreconditionError('pivot ({}, {}) is outside the matrix'.format(
            r + 1, s + 1))
    if r == s:
        raise PreconditionError('pivot must be off the diagonal')
    if A.ring.is_zero(A[r, s]):
        raise PreconditionError('pivot entry ({}, {}) is zero'.format(
            r + 1, s + 1))
    entries = {(s, s): A[r, s], (s, r): A.ring.zero}
    for k in range(A.order):
        if k not in (r, s):
            entries[(s, k)] = A.ring.sub(A[r, k], A.ring.one)
    return identity(A.order, A.ring).replace(entries)


def unify_row(A, pivot):
    """Every off-diagonal entry of row r becomes 1; det of the conjugator
    is a_rs."""
    return conjugate(A, unify_row_conjugator(A, pivot))


def set_diagonal_conjugator(A, r, gamma):
    entries = {}
    for k in range(A.order):
        if k != r:
            entries[(k, r)] = A.ring.sub(gamma[k], A[k, k])
    return identity(A.order, A.ring).replace(entries)


def set_diagonal(A, r, gamma):
    ring = A.ring
    gamma = tuple(ring.convert(g) for g in gamma)
    for k in range(A.order):
        if k != r and not ring.is_one(A[r, k]):
            raise PreconditionError(
                'row {} has entry {} at column {}, expected 1'.format(
                    r + 1, ring.format(A[r, k]), k + 1))
    if ring.sum(gamma) != trace(A):
        raise PreconditionError(
            'trace mismatch: diagonal sums to {} but tr A = {}'.format(
                ring.format(ring.sum(gamma)), ring.format(trace(A))))
    return conjugate(A, set_diagonal_conjugator(A, r, gamma))


def solve_two_step(A, gamma, pivot=None):
    """Returns (witness, trace). Integer input is solved over the
    rationals; ``pivot`` forces the unify-row pivot of a non-diagonal A."""
    A = lift(A)
    gamma = check_hypotheses(A, gamma)
    steps = ReductionTrace()
    witnesses = []
    current = A
    if is_diagonal(A):
        if pivot is not None:
            raise PreconditionError(
                'a diagonal matrix has no off-diagonal pivot to force')
        s = bump_column(A)
        witness = diagonal_bump(A, s)
        steps.record('bump', witness, indices={'r': 0, 's': s})
        witnesses.append(witness)
        current = witness.result
        pivot = PivotChoice(0, s)
    elif pivot is None:
        pivot = choose_pivot(A)
    pivot = PivotChoice(*pivot)

    witness = unify_row(current, pivot)
    steps.record('unify-row', witness, indices={'r': pivot.r, 's': pivot.s})
    witnesses.append(witness)

    witness = set_diagonal(witness.result, pivot.r, gamma)
    steps.record('set-diagonal', witness, indices={'r': pivot.r})
    witnesses.append(witness)
    assert len(steps) <= 3
    return compose(A, witnesses), steps


class TwoStepSolver(Processor):

    def __init__(self, pivot=None, verify=True, log_level='INFO'):
        super().__init__(name='two-step', verify=verify, log_level=log_level)
        self.pivot = pivot

    def reduce(self, A, gamma):
        return solve_two_step(A, gamma, pivot=self.pivot)
