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

"""Integer pipeline.

An integer matrix is first brought to one holding an off-diagonal 1 by
unimodular moves (a permutation, then 2x2 Bezout blocks on the first
row) and one final rescaling; the two-step lemmas then run with integer
conjugators of determinant 1, so every matrix stays integral.
"""

from fractions import Fraction

from diagsim.bezout import extended_gcd
from diagsim.errors import PreconditionError
from diagsim.matrix import (conjugate, identity, identity_witness,
                            is_diagonal, is_scalar, permutation_similarity)
from diagsim.processor import Processor, check_hypotheses
from diagsim.ring import INTEGER, RATIONAL
from diagsim.solvers.two_step import (bump_column, diagonal_bump,
                                      set_diagonal, unify_row)
from diagsim.trace import RATIONAL_LABEL, UNIMODULAR, ReductionTrace, compose


def first_unit(A):
    for r in range(A.order):
        for s in range(A.order):
            if r != s and A[r, s] == 1:
                return r, s
    return None


def first_nonzero(A):
    for r in range(A.order):
        for s in range(A.order):
            if r != s and A[r, s] != 0:
                return r, s
    return None


def leading_permutation(n, r, s):
    """sigma with sigma[r] = 0, sigma[s] = 1, the rest in order."""
    sigma = [None] * n
    sigma[r], sigma[s] = 0, 1
    rest = iter(range(2, n))
    for i in range(n):
        if sigma[i] is None:
            sigma[i] = next(rest)
    return sigma


def bezout_conjugator(n, k, bezout):
    return identity(n, INTEGER).replace({
        (1, 1): bezout.p,
        (1, k): bezout.q,
        (k, 1): bezout.r,
        (k, k): bezout.s,
    })


def scale_conjugator(A):
    """Identity except entry (0, 0) = 1 / a_01."""
    return identity(A.order, RATIONAL).replace({(0, 0): Fraction(1, A[0, 1])})


def tail(A):
    return [k for k in range(2, A.order) if A[0, k] != 0]


def check_integer(A):
    if A.ring != INTEGER:
        raise PreconditionError(
            'integer pipeline needs an integer matrix, got {}'.format(
                A.ring.label))


def find_unit_entry(A):
    """Integer matrix similar to A with an off-diagonal 1.

    Returns (witness, (r, s), trace) where (r, s) is the 0-based position
    of that 1 in the result.
    """
    check_integer(A)
    if is_scalar(A):
        raise PreconditionError(
            'matrix is scalar; theorem hypothesis violated')
    steps = ReductionTrace()
    position = first_unit(A)
    if position is not None:
        return identity_witness(A), position, steps
    if is_diagonal(A):
        s = bump_column(A)
        witness = diagonal_bump(A, s)
        assert witness.result.ring == INTEGER
        steps.record('bump', witness, RATIONAL_LABEL,
                     indices={'r': 0, 's': s})
        return compose(A, [witness]), (0, s), steps

    witnesses = []
    current = A
    r, s = first_nonzero(A)
    if (r, s) != (0, 1):
        witness = permutation_similarity(
            A, leading_permutation(A.order, r, s))
        steps.record('permute', witness, UNIMODULAR, indices={'r': r, 's': s})
        witnesses.append(witness)
        current = witness.result

    bound = (A.order - 2) + max(0, abs(current[0, 1]).bit_length() - 1)
    iterations = 0
    while tail(current):
        remaining = len(tail(current))
        k = tail(current)[0]
        bezout = extended_gcd(current[0, 1], current[0, k])
        witness = conjugate(current, bezout_conjugator(A.order, k, bezout))
        steps.record('bezout-step2', witness, UNIMODULAR,
                     indices={'k': k}, bezout=bezout)
        witnesses.append(witness)
        current = witness.result
        iterations += 1
        assert current.ring == INTEGER
        assert current[0, 1] == bezout.m and current[0, k] == 0
        assert len(tail(current)) < remaining and iterations <= bound
        if bezout.m == 1:
            break

    if current[0, 1] != 1:
        # tail is zero: scaling row 0 by 1 / a_01 and column 0 by a_01
        # keeps every entry integral
        witness = conjugate(current, scale_conjugator(current))
        assert witness.result.ring == INTEGER
        steps.record('scale-step3', witness, RATIONAL_LABEL)
        witnesses.append(witness)
        current = witness.result

    position = first_unit(current)
    assert position is not None
    return compose(A, witnesses), position, steps


def solve_integer(A, gamma):
    check_integer(A)
    gamma = check_hypotheses(A, gamma)
    witness, (r, s), steps = find_unit_entry(A)
    witnesses = [witness]

    unified = unify_row(witness.result, (r, s))
    steps.record('unify-row', unified, UNIMODULAR, indices={'r': r, 's': s})
    witnesses.append(unified)

    final = set_diagonal(unified.result, r, gamma)
    steps.record('set-diagonal', final, UNIMODULAR, indices={'r': r})
    witnesses.append(final)

    for step in steps:
        assert step.result.ring == INTEGER
    return compose(A, witnesses), steps


class IntegerSolver(Processor):

    integer = True

    def __init__(self, verify=True, log_level='INFO'):
        super().__init__(name='integer', verify=verify, log_level=log_level)

    def reduce(self, A, gamma):
        return solve_integer(A, gamma)
