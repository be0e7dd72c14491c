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

"""Seeded problem instances.

Randomness comes from SplitMix64 with its published constants:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

all modulo 2**64. A draw from range(n) is ``out % n``. Any platform or
language replaying this recurrence reproduces the same corpus.
"""

from dataclasses import dataclass
from fractions import Fraction

from diagsim.errors import PreconditionError
from diagsim.matrix import Matrix, is_scalar, trace
from diagsim.ring import INTEGER, RATIONAL, Ring

MASK = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
SHAPES = ('dense', 'diagonal', 'sparse-one-offdiag')
MAX_RETRIES = 64


class SplitMix64:

    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n):
        return self.next() % n

    def between(self, low, high):
        """Uniform-ish integer in [low, high]."""
        return low + self.below(high - low + 1)

    def scalar(self, ring, bound, nonzero=False):
        while True:
            if ring == INTEGER:
                value = self.between(-bound, bound)
            elif ring == RATIONAL:
                value = Fraction(self.between(-bound, bound),
                                 self.between(1, bound))
            else:
                value = self.below(ring.modulus)
            if not nonzero or value != 0:
                return ring.convert(value)


@dataclass(frozen=True)
class GenSpec:

    ring: Ring
    n: int
    entry_bound: int = 9
    seed: int = 0
    shape: str = 'dense'

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError('order must be at least 2')
        if self.entry_bound < 1:
            raise PreconditionError('entry bound must be at least 1')
        if self.shape not in SHAPES:
            raise PreconditionError('unknown shape {!r}'.format(self.shape))


def _draw(spec, rng):
    n, ring, bound = spec.n, spec.ring, spec.entry_bound
    if spec.shape == 'dense':
        return [[rng.scalar(ring, bound) for _ in range(n)] for _ in range(n)]
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.scalar(ring, bound)
    if spec.shape == 'sparse-one-offdiag':
        r = rng.below(n)
        s = (r + 1 + rng.below(n - 1)) % n
        rows[r][s] = rng.scalar(ring, bound, nonzero=True)
    return rows


def gen_matrix(spec, rng=None):
    """Nonscalar matrix of the requested shape, redrawn while scalar."""
    rng = rng or SplitMix64(spec.seed)
    for _ in range(MAX_RETRIES):
        A = Matrix(_draw(spec, rng), spec.ring)
        if not is_scalar(A):
            return A
    raise PreconditionError(
        'no nonscalar {} matrix of order {} after {} draws'.format(
            spec.shape, spec.n, MAX_RETRIES))


def gen_diagonal_spec(A, seed=0, bound=9, rng=None):
    """gamma_1..gamma_{n-1} random, gamma_n closing the trace."""
    rng = rng or SplitMix64(seed)
    ring = A.ring
    gamma = [rng.scalar(ring, bound) for _ in range(A.order - 1)]
    gamma.append(ring.sub(trace(A), ring.sum(gamma)))
    return tuple(gamma)


def gen_problem(spec):
    """Matrix and diagonal drawn from one stream seeded by ``spec.seed``."""
    rng = SplitMix64(spec.seed)
    A = gen_matrix(spec, rng)
    return A, gen_diagonal_spec(A, bound=spec.entry_bound, rng=rng)
