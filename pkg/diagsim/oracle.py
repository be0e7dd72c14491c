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

"""Exact verification of solver output.

Nothing here trusts the solvers: similarity is checked as P A = B P with
det P != 0 (no inverse is taken), the stored inverse is checked against
P directly, and characteristic polynomials are recomputed.
"""

from dataclasses import asdict, dataclass, fields, replace
from typing import Optional

from diagsim.errors import PreconditionError
from diagsim.matrix import (char_poly, common_ring, determinant, identity,
                            multiply, trace)
from diagsim.ring import INTEGER, RATIONAL

CHECKS = ('witness_ok', 'diagonal_ok', 'trace_ok', 'charpoly_ok',
          'integrality_ok', 'replay_ok', 'labels_ok')


@dataclass(frozen=True)
class VerificationReport:
    """Flags left as None do not apply to the check that was run."""

    witness_ok: Optional[bool] = None
    diagonal_ok: Optional[bool] = None
    trace_ok: Optional[bool] = None
    charpoly_ok: Optional[bool] = None
    integrality_ok: Optional[bool] = None
    replay_ok: Optional[bool] = None
    labels_ok: Optional[bool] = None
    first_failure: Optional[str] = None

    @property
    def ok(self):
        return all(getattr(self, name) is not False for name in CHECKS)

    def merge(self, other):
        values = {}
        for f in fields(self):
            mine = getattr(self, f.name)
            values[f.name] = mine if mine is not None else getattr(
                other, f.name)
        return VerificationReport(**values)

    def to_dict(self):
        report = {k: v for k, v in asdict(self).items() if v is not None}
        report['pass'] = self.ok
        return report


def _first_difference(X, Y):
    for i in range(X.order):
        for j in range(X.order):
            if X[i, j] != Y[i, j]:
                return i, j
    return None


def _fail(report, message):
    if report.first_failure is None:
        report = replace(report, first_failure=message)
    return report


def _fmt(ring, x):
    return ring.format(x)


def check_similarity(A, P, B):
    """None when P A = B P and P is nonsingular, else a location string."""
    A, P, B = common_ring(A, P, B)
    cell = _first_difference(multiply(P, A), multiply(B, P))
    if cell is not None:
        return 'P A != B P at ({}, {})'.format(cell[0] + 1, cell[1] + 1)
    if P.ring.is_zero(determinant(P)):
        return 'conjugator is singular'
    return None


def verify(A, gamma, witness, integer=None):
    if integer is None:
        integer = A.ring == INTEGER
    P = witness.conjugator
    P_inv = witness.conjugator_inverse
    B = witness.result
    if len({A.order, P.order, P_inv.order, B.order, len(gamma)}) != 1:
        raise PreconditionError('order mismatch between matrix, diagonal '
                                'and witness')
    report = VerificationReport()

    failure = check_similarity(A, P, B)
    if failure is None:
        P_, P_inv_ = common_ring(P, P_inv)
        cell = _first_difference(multiply(P_, P_inv_),
                                 identity(P.order, P_.ring))
        if cell is not None:
            failure = 'P P^-1 != I at ({}, {})'.format(cell[0] + 1,
                                                       cell[1] + 1)
    report = replace(report, witness_ok=failure is None)
    if failure is not None:
        report = _fail(report, failure)

    A_, B_ = common_ring(A, B)
    ring = A_.ring
    targets = [ring.convert(g) for g in gamma]
    diagonal = B_.diagonal()
    misses = [k for k in range(B_.order) if diagonal[k] != targets[k]]
    report = replace(report, diagonal_ok=not misses)
    if misses:
        k = misses[0]
        report = _fail(report, 'diagonal entry {} is {}, expected {}'.format(
            k + 1, _fmt(ring, diagonal[k]), _fmt(ring, targets[k])))

    traces = (trace(B_), trace(A_), ring.sum(targets))
    report = replace(report, trace_ok=len(set(traces)) == 1)
    if not report.trace_ok:
        report = _fail(report, 'traces differ: tr B = {}, tr A = {}, '
                       'sum of diagonal = {}'.format(
                           *(_fmt(ring, t) for t in traces)))

    same = char_poly(A_).coefficients == char_poly(B_).coefficients
    report = replace(report, charpoly_ok=same)
    if not same:
        report = _fail(report, 'characteristic polynomials differ')

    if integer:
        cells = [(i, j) for i in range(B.order) for j in range(B.order)
                 if not B.ring.is_integral(B[i, j])]
        report = replace(report, integrality_ok=not cells)
        if cells:
            i, j = cells[0]
            report = _fail(report, 'entry ({}, {}) = {} is not an integer'
                           .format(i + 1, j + 1, _fmt(B.ring, B[i, j])))
    return report


def _is_unimodular(P):
    if P.ring not in (INTEGER, RATIONAL) or not P.is_integral():
        return False
    return determinant(P) in (1, -1)


def check_label(step):
    label = step.conjugator_ring
    ring = step.conjugator.ring
    if label == 'integer-unimodular':
        return _is_unimodular(step.conjugator)
    if label == 'rational':
        return ring in (INTEGER, RATIONAL)
    if label == 'prime-field':
        return ring not in (INTEGER, RATIONAL)
    return False


def verify_trace(A, steps, result=None):
    """Replay every step from A, checking each recorded intermediate and
    each claimed conjugator ring. With ``result`` the last intermediate
    must also equal it."""
    report = VerificationReport(replay_ok=True, labels_ok=True)
    current = A
    for index, step in enumerate(steps, 1):
        if not check_label(step):
            report = replace(report, labels_ok=False)
            report = _fail(report, 'step {} ({}): conjugator is not {}'.format(
                index, step.kind, step.conjugator_ring))
        try:
            failure = check_similarity(current, step.conjugator, step.result)
        except PreconditionError as e:
            failure = str(e)
        if failure is not None:
            report = replace(report, replay_ok=False)
            report = _fail(report, 'step {} ({}): {}'.format(
                index, step.kind, failure))
        current = step.result
    if result is not None and report.replay_ok:
        try:
            end, result = common_ring(current, result)
            same = end == result
        except PreconditionError:
            same = False
        if not same:
            report = replace(report, replay_ok=False)
            report = _fail(report, 'trace does not end at the result')
    return report
