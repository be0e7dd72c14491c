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

import math
from dataclasses import dataclass

from diagsim.errors import PreconditionError


@dataclass(frozen=True)
class BezoutTriple:
    """m = gcd(a, b) > 0, p = a / m, q = b / m and p * s - q * r = 1."""

    m: int
    p: int
    q: int
    r: int
    s: int

    def to_dict(self):
        return {'m': self.m, 'p': self.p, 'q': self.q, 'r': self.r,
                's': self.s}


def gcd(a, b):
    if a == 0 and b == 0:
        raise PreconditionError('gcd(0, 0) is undefined')
    return math.gcd(a, b)


def extended_gcd(a, b):
    m = gcd(a, b)
    p, q = a // m, b // m
    if q == 0:
        # p is a unit here
        s, r = p, 0
    elif abs(q) == 1:
        s = 1
        r = (p - 1) // q
    else:
        s = pow(p, -1, abs(q))
        r = (p * s - 1) // q
    assert p * s - q * r == 1
    return BezoutTriple(m=m, p=p, q=q, r=r, s=s)
