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

from dataclasses import dataclass, field
from typing import Optional

from diagsim.bezout import BezoutTriple
from diagsim.matrix import Matrix, identity_witness
from diagsim.ring import INTEGER, RATIONAL

KINDS = ('bump', 'permute', 'bezout-step2', 'scale-step3', 'unify-row',
         'set-diagonal', 'deflate', 'base-case')

UNIMODULAR = 'integer-unimodular'
RATIONAL_LABEL = 'rational'
PRIME_FIELD_LABEL = 'prime-field'
LABELS = (UNIMODULAR, RATIONAL_LABEL, PRIME_FIELD_LABEL)


def field_label(matrix):
    if matrix.ring in (INTEGER, RATIONAL):
        return RATIONAL_LABEL
    return PRIME_FIELD_LABEL


@dataclass(frozen=True)
class Step:
    """One elementary similarity: result = conjugator * previous * inverse.

    ``indices`` holds the 0-based r, s, k (or stage) the step acted on and
    ``conjugator_ring`` the claim made about the conjugator: integer with
    determinant +-1, or merely rational / over GF(p).
    """

    kind: str
    conjugator: Matrix
    result: Matrix
    conjugator_ring: str
    indices: dict = field(default_factory=dict)
    bezout: Optional[BezoutTriple] = None
    basis: Optional[Matrix] = None
    note: str = ''


class ReductionTrace:

    def __init__(self, steps=None):
        self.steps = list(steps or [])

    def record(self, kind, witness, conjugator_ring=None, **kwargs):
        assert kind in KINDS
        if conjugator_ring is None:
            conjugator_ring = field_label(witness.conjugator)
        assert conjugator_ring in LABELS
        step = Step(kind=kind,
                    conjugator=witness.conjugator,
                    result=witness.result,
                    conjugator_ring=conjugator_ring,
                    **kwargs)
        self.steps.append(step)
        return step

    def extend(self, other):
        self.steps.extend(other.steps)

    def kinds(self):
        return [step.kind for step in self.steps]

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __eq__(self, other):
        return isinstance(other, ReductionTrace) and self.steps == other.steps


def compose(A, witnesses):
    """Fold step witnesses, applied in order, into one witness for A."""
    total = identity_witness(A)
    for witness in witnesses:
        total = total.then(witness)
    return total


def describe(step):
    """One-line, 1-based summary of a step for transcripts and logs."""
    idx = {key: value + 1 for key, value in step.indices.items()}
    if step.kind in ('unify-row', 'bump'):
        return '{} at ({}, {})'.format(step.kind, idx['r'], idx['s'])
    if step.kind == 'set-diagonal':
        return 'set-diagonal at row {}'.format(idx['r'])
    if step.kind == 'bezout-step2':
        b = step.bezout
        return 'bezout-step2 at column {} (m={}, p={}, q={}, r={}, s={})' \
            .format(idx['k'], b.m, b.p, b.q, b.r, b.s)
    if step.kind == 'permute':
        return 'permute ({}, {}) to (1, 2)'.format(idx['r'], idx['s'])
    if step.kind in ('deflate', 'base-case'):
        return '{} at stage {}'.format(step.kind, idx['stage'])
    return step.kind

