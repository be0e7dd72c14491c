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

"""JSON problem and solution documents.

Scalars are always canonical strings ("-3", "17/5", residues "0".."p-1")
so that no integer width ever leaks into the format. Indices are 1-based.

Problem::

    {"ring": "rational", "matrix": [["4", "0"], ["2", "3"]],
     "diagonal": ["3", "4"]}

``"modulus": p`` is required with ``"ring": "prime-field"``. A solution
carries each matrix as ``{"ring": ..., ["modulus": ...,] "rows": ...}``
because conjugators may live in a larger ring than the result.
"""

import json
from dataclasses import dataclass
from typing import Optional

from diagsim.bezout import BezoutTriple
from diagsim.errors import DiagsimError, ParseError
from diagsim.matrix import Matrix, SimilarityWitness, trace
from diagsim.oracle import VerificationReport
from diagsim.processor import Solution
from diagsim.ring import get_ring
from diagsim.trace import ReductionTrace, Step


@dataclass(frozen=True)
class Problem:

    matrix: Matrix
    diagonal: Optional[tuple] = None

    @property
    def ring(self):
        return self.matrix.ring

    def target(self):
        """The prescribed diagonal, by default (0, ..., 0, tr A)."""
        if self.diagonal is not None:
            return self.diagonal
        zeros = (self.ring.zero,) * (self.matrix.order - 1)
        return zeros + (trace(self.matrix),)


def _locate(text, token):
    """1-based (line, column) of the first quoted occurrence of token."""
    needle = json.dumps(token)
    offset = text.find(needle)
    if offset < 0:
        return None, None
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def _load(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)


def _scalar(ring, value, text):
    if not isinstance(value, str):
        raise ParseError('scalar {!r} must be a string'.format(value),
                         *_locate(text, value))
    try:
        return ring.parse(value)
    except DiagsimError as e:
        raise ParseError(str(e), *_locate(text, value))


def _ring(doc):
    if 'ring' not in doc:
        raise ParseError('missing "ring"')
    try:
        return get_ring(doc['ring'], doc.get('modulus'))
    except DiagsimError as e:
        raise ParseError(str(e))


def _rows(rows, ring, text):
    if not isinstance(rows, list) or not rows \
            or not all(isinstance(row, list) for row in rows):
        raise ParseError('a matrix is a non-empty array of rows')
    if any(len(row) != len(rows) for row in rows):
        raise ParseError('matrix is not square')
    return Matrix([[_scalar(ring, x, text) for x in row] for row in rows],
                  ring)


def _ring_fields(ring):
    return dict(ring.describe())


def matrix_to_json(M):
    doc = _ring_fields(M.ring)
    doc['rows'] = M.to_strings()
    return doc


def matrix_from_json(doc, text):
    if not isinstance(doc, dict) or 'rows' not in doc:
        raise ParseError('a tagged matrix needs "ring" and "rows"')
    return _rows(doc['rows'], _ring(doc), text)


def parse_problem(text):
    doc = _load(text)
    if not isinstance(doc, dict) or 'matrix' not in doc:
        raise ParseError('a problem needs "ring" and "matrix"')
    ring = _ring(doc)
    matrix = _rows(doc['matrix'], ring, text)
    diagonal = None
    if doc.get('diagonal') is not None:
        if not isinstance(doc['diagonal'], list) \
                or len(doc['diagonal']) != matrix.order:
            raise ParseError('diagonal must have {} entries'.format(
                matrix.order))
        diagonal = tuple(_scalar(ring, x, text) for x in doc['diagonal'])
    return Problem(matrix, diagonal)


def dump_problem(problem):
    doc = _ring_fields(problem.ring)
    doc['matrix'] = problem.matrix.to_strings()
    if problem.diagonal is not None:
        doc['diagonal'] = [problem.ring.format(x) for x in problem.diagonal]
    return json.dumps(doc, indent=2) + '\n'


def step_to_json(step):
    doc = {
        'kind': step.kind,
        'indices': {key: value + 1 for key, value in step.indices.items()},
        'conjugator_ring': step.conjugator_ring,
        'conjugator': matrix_to_json(step.conjugator),
        'result': matrix_to_json(step.result),
    }
    if step.bezout is not None:
        doc['bezout'] = step.bezout.to_dict()
    if step.basis is not None:
        doc['basis'] = matrix_to_json(step.basis)
    if step.note:
        doc['note'] = step.note
    return doc


def step_from_json(doc, text):
    try:
        bezout = doc.get('bezout')
        return Step(
            kind=doc['kind'],
            conjugator=matrix_from_json(doc['conjugator'], text),
            result=matrix_from_json(doc['result'], text),
            conjugator_ring=doc['conjugator_ring'],
            indices={k: v - 1 for k, v in doc.get('indices', {}).items()},
            bezout=BezoutTriple(**bezout) if bezout else None,
            basis=matrix_from_json(doc['basis'], text)
            if 'basis' in doc else None,
            note=doc.get('note', ''))
    except (KeyError, TypeError) as e:
        raise ParseError('malformed trace step: {}'.format(e))


def dump_solution(solution):
    doc = {
        'algorithm': solution.algorithm,
        'conjugations': solution.conjugations,
        'result': matrix_to_json(solution.witness.result),
        'conjugator': matrix_to_json(solution.witness.conjugator),
        'conjugator_inverse':
        matrix_to_json(solution.witness.conjugator_inverse),
        'trace': [step_to_json(step) for step in solution.trace],
    }
    if solution.report is not None:
        doc['verification'] = solution.report.to_dict()
    return json.dumps(doc, indent=2) + '\n'


def parse_solution(text):
    doc = _load(text)
    required = ('algorithm', 'result', 'conjugator', 'conjugator_inverse')
    if not isinstance(doc, dict) or any(key not in doc for key in required):
        raise ParseError('a solution needs {}'.format(', '.join(required)))
    witness = SimilarityWitness(
        matrix_from_json(doc['conjugator'], text),
        matrix_from_json(doc['conjugator_inverse'], text),
        matrix_from_json(doc['result'], text))
    steps = ReductionTrace(
        [step_from_json(step, text) for step in doc.get('trace', [])])
    report = None
    if 'verification' in doc:
        flags = {k: v for k, v in doc['verification'].items() if k != 'pass'}
        try:
            report = VerificationReport(**flags)
        except TypeError as e:
            raise ParseError('malformed verification report: {}'.format(e))
    return Solution(doc['algorithm'], witness, steps, report)
