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

import logging
from dataclasses import dataclass
from typing import Optional

from diagsim.errors import PreconditionError, VerificationError
from diagsim.matrix import Matrix, SimilarityWitness, is_scalar, trace
from diagsim.oracle import VerificationReport, verify, verify_trace
from diagsim.trace import ReductionTrace, describe


def get_logger(name, level='INFO'):
    logger = logging.getLogger('diagsim-{}'.format(name))
    if not logger.handlers:
        handler = logging.StreamHandler()
        fmt = logging.Formatter(
            '%(asctime)s DIAGSIM %(levelname)s %(message)s')
        handler.setFormatter(fmt)
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger


def check_hypotheses(A, gamma):
    """Theorem hypotheses: A nonscalar, len(gamma) = n and sum(gamma) =
    tr A. Returns gamma read in the ring of A."""
    if len(gamma) != A.order:
        raise PreconditionError(
            'diagonal has {} entries but the matrix has order {}'.format(
                len(gamma), A.order))
    if is_scalar(A):
        raise PreconditionError(
            'matrix is scalar; theorem hypothesis violated')
    ring = A.ring
    gamma = tuple(ring.convert(g) for g in gamma)
    total = ring.sum(gamma)
    if total != trace(A):
        raise PreconditionError(
            'trace mismatch: diagonal sums to {} but tr A = {}'.format(
                ring.format(total), ring.format(trace(A))))
    return gamma


@dataclass(frozen=True)
class Solution:

    algorithm: str
    witness: SimilarityWitness
    trace: ReductionTrace
    report: Optional[VerificationReport] = None

    @property
    def result(self):
        return self.witness.result

    @property
    def conjugations(self):
        return len(self.trace)


class Processor:
    """Shared front of every solver: a name, a logger and the oracle run
    over each result. Subclasses implement ``reduce``."""

    integer = False

    def __init__(self, name, verify=True, log_level='INFO'):
        self.name = name
        self.verify = verify
        self.logger = get_logger(name, log_level)

    def reduce(self, A, gamma):
        raise NotImplementedError()

    def solve(self, A: Matrix, gamma):
        self.logger.info('solving order {} over {} ...'.format(
            A.order, A.ring.label))
        witness, steps = self.reduce(A, gamma)
        for i, step in enumerate(steps, 1):
            self.logger.debug('step {}: {}'.format(i, describe(step)))
        report = None
        if self.verify:
            report = verify(A, gamma, witness, integer=self.integer)
            report = report.merge(verify_trace(A, steps, witness.result))
            if not report.ok:
                self.logger.error('verification failed: {}'.format(
                    report.first_failure))
                raise VerificationError(report)
        self.logger.info('done: {} conjugations'.format(len(steps)))
        return Solution(self.name, witness, steps, report)
