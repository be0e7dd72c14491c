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

import argparse
import json
import os
import sys

from diagsim.demo import DEMOS, run_demo
from diagsim.document import (Problem, dump_problem, dump_solution,
                              parse_problem, parse_solution)
from diagsim.errors import DiagsimError, ParseError, VerificationError
from diagsim.generator import SHAPES, GenSpec, gen_problem
from diagsim.oracle import verify, verify_trace
from diagsim.processor import get_logger
from diagsim.ring import get_ring
from diagsim.solvers import ALGORITHMS, get_solver
from diagsim.utils import parse_pivot, str2bool

RINGS = {'int': 'integer', 'rat': 'rational', 'gf': 'prime-field'}


def read_text(path):
    try:
        with open(path, encoding='utf-8') as fin:
            return fin.read()
    except OSError as e:
        raise ParseError('cannot read {}: {}'.format(path, e.strerror))


def write_text(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding='utf-8') as fout:
            fout.write(text)


def cmd_solve(args):
    problem = parse_problem(read_text(args.input))
    pivot = parse_pivot(args.pivot) if args.pivot else None
    solver = get_solver(args.algorithm,
                        problem.ring,
                        pivot=pivot,
                        verify=str2bool(args.verify, default=True),
                        log_level=args.log_level)
    solution = solver.solve(problem.matrix, problem.target())
    write_text(args.output, dump_solution(solution))
    return 0


def cmd_verify(args):
    problem = parse_problem(read_text(args.input))
    solution = parse_solution(read_text(args.solution))
    report = verify(problem.matrix,
                    problem.target(),
                    solution.witness,
                    integer=solution.algorithm == 'integer')
    report = report.merge(
        verify_trace(problem.matrix, solution.trace, solution.result))
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else VerificationError.exit_code


def cmd_demo(args):
    sys.stdout.write(run_demo(args.name, log_level=args.log_level))
    return 0


def cmd_gen(args):
    ring = get_ring(RINGS[args.ring], args.p if args.ring == 'gf' else None)
    if args.count < 1:
        raise DiagsimError('count must be at least 1')
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
    for i in range(args.count):
        seed = args.seed + i
        spec = GenSpec(ring, args.n, entry_bound=args.bound, seed=seed,
                       shape=args.shape)
        text = dump_problem(Problem(*gen_problem(spec)))
        if args.output_dir:
            name = '{}-n{}-seed{}.json'.format(args.ring, args.n, seed)
            write_text(os.path.join(args.output_dir, name), text)
        else:
            write_text(None, text)
    return 0


def cmd_compare(args):
    problem = parse_problem(read_text(args.input))
    print('order: {}'.format(problem.matrix.order))
    for algorithm in ('two-step', 'inductive'):
        solver = get_solver(algorithm, problem.ring,
                            log_level=args.log_level)
        solution = solver.solve(problem.matrix, problem.target())
        print('{}: {} conjugations'.format(algorithm,
                                           solution.conjugations))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog='diagsim',
        description='similar matrices with a prescribed diagonal')
    parser.add_argument('--log_level',
                        type=str,
                        default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='log level, logs go to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='solve a problem document')
    solve.add_argument('input', help='problem document (json)')
    solve.add_argument('--algorithm',
                       type=str,
                       default='auto',
                       choices=ALGORITHMS,
                       help='auto: integer for integer input, else two-step')
    solve.add_argument('--pivot',
                       type=str,
                       default=None,
                       help='unify-row pivot "r,s" (1-based), two-step only')
    solve.add_argument('--output',
                       type=str,
                       default=None,
                       help='solution document path, stdout by default')
    solve.add_argument('--verify',
                       type=str,
                       default='True',
                       help='check the solution before writing it')
    solve.set_defaults(func=cmd_solve)

    check = commands.add_parser('verify',
                                help='re-check a solution independently')
    check.add_argument('input', help='problem document (json)')
    check.add_argument('solution', help='solution document (json)')
    check.set_defaults(func=cmd_verify)

    demo = commands.add_parser('demo', help='print a worked example')
    demo.add_argument('name', choices=sorted(DEMOS))
    demo.set_defaults(func=cmd_demo)

    gen = commands.add_parser('gen', help='generate problem documents')
    gen.add_argument('--ring', type=str, default='rat', choices=sorted(RINGS))
    gen.add_argument('--p', type=int, default=None, help='prime modulus')
    gen.add_argument('--n', type=int, default=4, help='matrix order')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--shape', type=str, default='dense', choices=SHAPES)
    gen.add_argument('--count', type=int, default=1)
    gen.add_argument('--bound', type=int, default=9, help='entry bound')
    gen.add_argument('--output_dir',
                     type=str,
                     default=None,
                     help='one file per document, stdout by default')
    gen.set_defaults(func=cmd_gen)

    compare = commands.add_parser(
        'compare', help='conjugation counts of two-step and inductive')
    compare.add_argument('input', help='problem document (json)')
    compare.set_defaults(func=cmd_compare)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = get_logger('cli', args.log_level)
    try:
        return args.func(args)
    except DiagsimError as e:
        logger.error(str(e))
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
