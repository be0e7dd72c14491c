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

"""Worked examples replayed step by step.

paper-example-1: two-step over Q on a 5x5 matrix, pivot forced to (3, 4).
paper-example-2: the integer pipeline on the same matrix; it finds the
unit (4, 2) by itself and every intermediate stays integral.
"""

from diagsim.document import parse_problem
from diagsim.matrix import trace
from diagsim.solvers import get_solver
from diagsim.trace import describe
from diagsim.utils import read_resource

DEMOS = {
    'paper-example-1': ('two-step', (2, 3)),
    'paper-example-2': ('integer', None),
}


def load_example(name):
    return parse_problem(read_resource('data/{}.json'.format(name)))


def render_matrix(M):
    return ['  [{}]'.format(', '.join(row)) for row in M.to_strings()]


def render(name, problem, solution):
    A, ring = problem.matrix, problem.ring
    lines = ['# {}'.format(name), 'ring: {}'.format(ring.label), 'A:']
    lines += render_matrix(A)
    lines.append('target diagonal: [{}]'.format(
        ', '.join(ring.format(g) for g in problem.target())))
    lines.append('trace: {}'.format(ring.format(trace(A))))
    lines.append('algorithm: {}'.format(solution.algorithm))
    for i, step in enumerate(solution.trace, 1):
        lines.append('step {}: {}'.format(i, describe(step)))
        lines.append('conjugator:')
        lines += render_matrix(step.conjugator)
        lines.append('result:')
        lines += render_matrix(step.result)
    lines.append('conjugations: {}'.format(solution.conjugations))
    lines.append('verification: {}'.format(
        'pass' if solution.report.ok else 'fail'))
    return '\n'.join(lines) + '\n'


def run_demo(name, log_level='WARNING'):
    algorithm, pivot = DEMOS[name]
    problem = load_example(name)
    solver = get_solver(algorithm, problem.ring, pivot=pivot,
                        log_level=log_level)
    solution = solver.solve(problem.matrix, problem.target())
    return render(name, problem, solution)
