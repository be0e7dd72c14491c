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

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from diagsim.errors import NotInvertibleError, ParseError, PreconditionError
from diagsim.ring import (INTEGER, RATIONAL, PrimeField, field_invert,
                          get_ring, is_prime, normalize)
from diagsim.test.utils import parse_test_case

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


class TestRational:

    normalize_cases = parse_test_case('data/normalize.txt')

    @pytest.mark.parametrize("given_text, expected", normalize_cases)
    def test_canonical_form(self, given_text, expected):
        assert RATIONAL.format(RATIONAL.parse(given_text)) == expected

    @pytest.mark.parametrize("text", ['1/0', 'abc', '1.5', '', '1/2/3'])
    def test_parse_error(self, text):
        with pytest.raises(ParseError):
            RATIONAL.parse(text)

    def test_normalize(self):
        assert normalize(6, -4) == Fraction(-3, 2)
        with pytest.raises(PreconditionError):
            normalize(1, 0)

    def test_inverse(self):
        assert field_invert(Fraction(-2, 3), RATIONAL) == Fraction(-3, 2)
        with pytest.raises(NotInvertibleError):
            field_invert(RATIONAL.zero, RATIONAL)

    @given(st.fractions(), st.fractions(), st.fractions())
    def test_field_laws(self, x, y, z):
        assert RATIONAL.add(x, y) == RATIONAL.add(y, x)
        assert RATIONAL.mul(x, RATIONAL.add(y, z)) == RATIONAL.add(
            RATIONAL.mul(x, y), RATIONAL.mul(x, z))
        assert RATIONAL.sub(RATIONAL.add(x, y), y) == x

    @given(st.fractions())
    def test_inverse_law(self, x):
        assume(x != 0)
        assert RATIONAL.mul(x, RATIONAL.inv(x)) == RATIONAL.one

    @given(st.fractions())
    def test_format_parse(self, x):
        assert RATIONAL.parse(RATIONAL.format(x)) == x


class TestInteger:

    def test_units(self):
        assert INTEGER.inv(1) == 1
        assert INTEGER.inv(-1) == -1

    @pytest.mark.parametrize("x", [0, 2, -3, 10])
    def test_non_units(self, x):
        with pytest.raises(NotInvertibleError):
            INTEGER.inv(x)

    def test_no_silent_promotion(self):
        with pytest.raises(PreconditionError):
            INTEGER.convert(Fraction(3, 2))
        assert INTEGER.convert(Fraction(4, 2)) == 2
        with pytest.raises(NotInvertibleError):
            INTEGER.div(3, 2)

    @pytest.mark.parametrize("text", ['1/2', '2.0', 'x'])
    def test_parse_error(self, text):
        with pytest.raises(ParseError):
            INTEGER.parse(text)

    @given(st.integers(), st.integers())
    def test_ring_laws(self, x, y):
        assert INTEGER.mul(x, y) == INTEGER.mul(y, x)
        assert INTEGER.add(x, INTEGER.neg(x)) == INTEGER.zero


class TestPrimeField:

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_fermat(self, p):
        field = PrimeField(p)
        for x in range(1, p):
            assert field.mul(x, field.inv(x)) == 1
            assert field.power(x, p - 1) == 1

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 15, 91])
    def test_non_prime_modulus(self, p):
        assert not is_prime(p)
        with pytest.raises(PreconditionError):
            PrimeField(p)

    @pytest.mark.parametrize("p", SMALL_PRIMES + [97, 7919])
    def test_prime_modulus(self, p):
        assert is_prime(p)

    def test_zero_has_no_inverse(self):
        with pytest.raises(NotInvertibleError):
            PrimeField(7).inv(0)

    def test_convert(self):
        field = PrimeField(7)
        assert field.convert(-1) == 6
        assert field.convert(Fraction(1, 2)) == 4
        assert field.parse('-3') == 4
        assert field.format(field.convert(10)) == '3'

    def test_equality(self):
        assert PrimeField(7) == PrimeField(7)
        assert PrimeField(7) != PrimeField(11)
        assert PrimeField(7).label == 'prime-field(7)'
        assert INTEGER != RATIONAL

    @given(st.sampled_from(SMALL_PRIMES), st.integers(), st.integers())
    def test_field_laws(self, p, x, y):
        field = PrimeField(p)
        x, y = field.convert(x), field.convert(y)
        assert field.add(x, y) == field.add(y, x)
        assert field.sub(field.add(x, y), y) == x
        assert 0 <= field.mul(x, y) < p


class TestGetRing:

    def test_lookup(self):
        assert get_ring('integer') == INTEGER
        assert get_ring('rational') == RATIONAL
        assert get_ring('prime-field', 5) == PrimeField(5)

    @pytest.mark.parametrize("tag, modulus", [('prime-field', None),
                                              ('rational', 7),
                                              ('real', None),
                                              ('prime-field', 6)])
    def test_invalid(self, tag, modulus):
        with pytest.raises(PreconditionError):
            get_ring(tag, modulus)
