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

"""Exact scalar rings.

Every ring works on plain Python values: ``int`` for the integers,
``fractions.Fraction`` for the rationals and the least nonnegative residue
(an ``int``) for GF(p). The ring object carries the operations, so matrices
never need to know which kind of scalar they hold.
"""

import math
import re
from fractions import Fraction

from diagsim.errors import NotInvertibleError, ParseError, PreconditionError

INTEGER_PATTERN = re.compile(r'^[+-]?\d+$')
RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/[+-]?\d+)?$')


def normalize(num, den):
    """Canonical rational num/den: positive denominator, lowest terms."""
    if den == 0:
        raise PreconditionError('zero denominator in {}/{}'.format(num, den))
    return Fraction(num, den)


def is_prime(p):
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


class Ring:

    tag = None
    is_field = True

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_zero(self, x):
        return x == 0

    def is_one(self, x):
        return x == 1

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def sum(self, values):
        total = self.zero
        for x in values:
            total = self.add(total, x)
        return total

    def power(self, x, e):
        result = self.one
        for _ in range(e):
            result = self.mul(result, x)
        return result

    def is_integral(self, x):
        return True

    def format(self, x):
        return str(x)

    def describe(self):
        return {'ring': self.tag}

    def __eq__(self, other):
        return isinstance(other, Ring) and self.describe() == other.describe()

    def __hash__(self):
        return hash(tuple(sorted(self.describe().items())))

    def __repr__(self):
        return self.label


class IntegerRing(Ring):
    """The ring Z: ring operations plus inversion of the units +1 and -1."""

    tag = 'integer'
    label = 'integer'
    is_field = False

    def convert(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise PreconditionError(
                    '{} is not an integer'.format(value))
            return value.numerator
        if isinstance(value, bool) or not isinstance(value, int):
            raise PreconditionError(
                'cannot read {!r} as an integer'.format(value))
        return value

    def inv(self, x):
        if x == 0:
            raise NotInvertibleError('zero has no inverse')
        if abs(x) != 1:
            raise NotInvertibleError(
                '{} is not a unit of the integers'.format(x))
        return x

    def parse(self, text):
        if not INTEGER_PATTERN.match(text.strip()):
            raise ParseError('{!r} is not an integer'.format(text))
        return int(text)


class RationalField(Ring):

    tag = 'rational'
    label = 'rational'

    def convert(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise PreconditionError(
                'cannot read {!r} as a rational'.format(value))
        return Fraction(value)

    def inv(self, x):
        if x == 0:
            raise NotInvertibleError('zero has no inverse')
        return 1 / x

    def is_integral(self, x):
        return x.denominator == 1

    def parse(self, text):
        text = text.strip()
        if not RATIONAL_PATTERN.match(text):
            raise ParseError('{!r} is not a rational number'.format(text))
        if '/' in text:
            num, den = text.split('/')
            if int(den) == 0:
                raise ParseError('{!r} has a zero denominator'.format(text))
            return normalize(int(num), int(den))
        return Fraction(int(text))


class PrimeField(Ring):
    """GF(p): residues 0 <= x < p, p checked prime by trial division."""

    tag = 'prime-field'

    def __init__(self, modulus):
        if isinstance(modulus, bool) or not isinstance(modulus, int) \
                or not is_prime(modulus):
            raise PreconditionError(
                'modulus {} is not prime'.format(modulus))
        self.modulus = modulus

    @property
    def label(self):
        return 'prime-field({})'.format(self.modulus)

    def convert(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.modulus,
                            value.denominator % self.modulus)
        if isinstance(value, bool) or not isinstance(value, int):
            raise PreconditionError(
                'cannot read {!r} as a residue'.format(value))
        return value % self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def inv(self, x):
        if x % self.modulus == 0:
            raise NotInvertibleError('zero has no inverse')
        return pow(x, -1, self.modulus)

    def power(self, x, e):
        return pow(x, e, self.modulus)

    def parse(self, text):
        if not INTEGER_PATTERN.match(text.strip()):
            raise ParseError('{!r} is not a residue'.format(text))
        return int(text) % self.modulus

    def describe(self):
        return {'ring': self.tag, 'modulus': self.modulus}


INTEGER = IntegerRing()
RATIONAL = RationalField()


def field_invert(x, ring):
    return ring.inv(x)


def get_ring(tag, modulus=None):
    """RingSpec lookup: the modulus is given iff the tag is prime-field."""
    if tag == 'prime-field':
        if modulus is None:
            raise PreconditionError('prime-field needs a modulus')
        return PrimeField(modulus)
    if modulus is not None:
        raise PreconditionError('only prime-field takes a modulus')
    if tag == 'integer':
        return INTEGER
    if tag == 'rational':
        return RATIONAL
    raise PreconditionError('unknown ring {!r}'.format(tag))
