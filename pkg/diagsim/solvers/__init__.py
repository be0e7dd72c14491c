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

from diagsim.errors import PreconditionError
from diagsim.ring import INTEGER
from diagsim.solvers.inductive import InductiveSolver
from diagsim.solvers.integer import IntegerSolver
from diagsim.solvers.two_step import TwoStepSolver

ALGORITHMS = ('auto', 'two-step', 'inductive', 'integer')


def get_solver(algorithm, ring, pivot=None, verify=True, log_level='INFO'):
    """Solver for ``algorithm``; 'auto' picks the integer pipeline for
    integer input and two-step otherwise."""
    if algorithm == 'auto':
        algorithm = 'integer' if ring == INTEGER else 'two-step'
    if algorithm == 'two-step':
        return TwoStepSolver(pivot=pivot, verify=verify, log_level=log_level)
    if algorithm == 'inductive':
        return InductiveSolver(verify=verify, log_level=log_level)
    if algorithm == 'integer':
        if ring != INTEGER:
            raise PreconditionError(
                'the integer algorithm needs an integer matrix, got {}'
                .format(ring.label))
        return IntegerSolver(verify=verify, log_level=log_level)
    raise PreconditionError('unknown algorithm {!r}'.format(algorithm))


def solve(A, gamma, algorithm='auto', **kwargs):
    return get_solver(algorithm, A.ring, **kwargs).solve(A, gamma)
