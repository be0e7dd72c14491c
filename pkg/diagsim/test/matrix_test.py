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
from itertools import permutations

import pytest
import sympy

from diagsim.errors import PreconditionError, SingularMatrixError
from diagsim.generator import GenSpec, gen_matrix
from diagsim.matrix import (Matrix, block_diagonal, char_poly, common_ring,
                            conjugate, determinant, identity, invert, lift,
                            lower, multiply, permutation_matrix,
                            permutation_similarity, rank, trace)
from diagsim.ring import INTEGER, RATIONAL, PrimeField
from diagsim.test.utils import EXAMPLE_ROWS, parse_test_case, read_matrix

RINGS = [INTEGER, RATIONAL, PrimeField(2), PrimeField(3), PrimeField(5),
         PrimeField(7)]


def leibniz(A):
    ring = A.ring
    total = ring.zero
    for sigma in permutations(range(A.order)):
        inversions = sum(1 for i in range(len(sigma))
                         for j in range(i + 1, len(sigma))
                         if sigma[i] > sigma[j])
        term = ring.one
        for i, j in enumerate(sigma):
            term = ring.mul(term, A[i, j])
        total = ring.sub(total, term) if inversions % 2 else ring.add(
            total, term)
    return total


def leibniz_char_poly(A):
    """Coefficients of det(xI - A), lowest first, expanded over every
    permutation with each entry a polynomial in x."""
    ring, n = A.ring, A.order
    total = [ring.zero] * (n + 1)
    for sigma in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if sigma[i] > sigma[j])
        term = [ring.one]
        for i, j in enumerate(sigma):
            entry = [ring.neg(A[i, j])] + ([ring.one] if i == j else [])
            product = [ring.zero] * (len(term) + len(entry) - 1)
            for a, x in enumerate(term):
                for b, y in enumerate(entry):
                    product[a + b] = ring.add(product[a + b], ring.mul(x, y))
            term = product
        for k, c in enumerate(term):
            total[k] = ring.sub(total[k], c) if inversions % 2 \
                else ring.add(total[k], c)
    return tuple(total)


def invertible_matrix(ring, n, seed):
    for k in range(64):
        P = gen_matrix(GenSpec(ring, n, seed=1000 * seed + k))
        if not ring.is_zero(determinant(P)):
            return P
    raise AssertionError('no invertible matrix for seed {}'.format(seed))


def to_sympy(A):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                          for x in row] for row in lift(A).rows])


class TestMatrix:

    char_poly_cases = parse_test_case('data/char_poly.txt')
    invert_cases = parse_test_case('data/invert.txt')
    example = Matrix(EXAMPLE_ROWS, INTEGER)

    @pytest.mark.parametrize("rows, poly", char_poly_cases)
    def test_char_poly(self, rows, poly):
        assert str(char_poly(read_matrix(rows))) == poly

    @pytest.mark.parametrize("rows, inverse", invert_cases)
    def test_invert(self, rows, inverse):
        X = read_matrix(rows)
        assert invert(X) == read_matrix(inverse)
        assert multiply(X, invert(X)) == identity(X.order, RATIONAL)

    def test_singular(self):
        with pytest.raises(SingularMatrixError) as e:
            invert(read_matrix('1 2; 2 4'))
        assert e.value.column == 1
        assert 'column 2' in str(e.value)

    def test_integer_inverse(self):
        unimodular = read_matrix('2 1; 1 1', INTEGER)
        assert invert(unimodular).ring == INTEGER
        assert invert(read_matrix('2 0; 0 1', INTEGER)).ring == RATIONAL

    def test_prime_field_inverse(self):
        field = PrimeField(7)
        X = read_matrix('3 1; 4 2', field)
        assert multiply(X, invert(X)) == identity(2, field)
        assert determinant(X) == 2

    @pytest.mark.parametrize("seed", range(500))
    @pytest.mark.parametrize("ring", RINGS)
    def test_invert_random(self, ring, seed):
        X = lift(invertible_matrix(ring, 2 + seed % 5, seed))
        one = identity(X.order, X.ring)
        assert multiply(X, invert(X)) == one
        assert multiply(invert(X), X) == one

    @pytest.mark.parametrize("seed", range(50))
    @pytest.mark.parametrize("ring", RINGS)
    def test_similarity_invariants(self, ring, seed):
        n = 2 + seed % 5
        A = gen_matrix(GenSpec(ring, n, seed=seed))
        B = conjugate(A, invertible_matrix(ring, n, seed)).result
        assert trace(B) == trace(A)
        assert char_poly(B).coefficients == char_poly(A).coefficients

    @pytest.mark.parametrize("seed", range(20))
    def test_round_trip(self, seed):
        field = PrimeField(5)
        A = gen_matrix(GenSpec(field, 3, seed=seed))
        P = invertible_matrix(field, 3, seed)
        there = conjugate(A, P)
        back = conjugate(there.result, there.conjugator_inverse)
        assert back.result == A
        assert back.conjugator_inverse == P

    @pytest.mark.parametrize("seed", range(200))
    @pytest.mark.parametrize("ring", RINGS)
    def test_char_poly_against_leibniz(self, ring, seed):
        A = gen_matrix(GenSpec(ring, 2 + seed % 3, seed=seed))
        assert char_poly(A).coefficients == leibniz_char_poly(A)

    @pytest.mark.parametrize("seed", range(20))
    def test_determinant_against_sympy(self, seed):
        A = gen_matrix(GenSpec(RATIONAL, 2 + seed % 4, seed=seed))
        expected = to_sympy(A).det()
        assert determinant(A) == Fraction(str(expected))

    @pytest.mark.parametrize("seed", range(20))
    def test_char_poly_against_sympy(self, seed):
        A = gen_matrix(GenSpec(INTEGER, 2 + seed % 4, seed=seed))
        coefficients = to_sympy(A).charpoly().all_coeffs()
        expected = [Fraction(str(c)) for c in coefficients]
        assert list(reversed(char_poly(A).coefficients)) == expected

    @pytest.mark.parametrize("seed", range(10))
    def test_determinant_against_leibniz(self, seed):
        field = PrimeField(7)
        A = gen_matrix(GenSpec(field, 3 + seed % 2, seed=seed))
        assert determinant(A) == leibniz(A)

    def test_char_poly_facts(self):
        poly = char_poly(self.example)
        assert poly.degree == 5
        assert poly.coefficients[5] == 1
        assert poly.coefficients[4] == -trace(self.example)
        assert determinant(self.example) == leibniz(self.example)

    def test_conjugate(self):
        P = read_matrix('1 1; 0 1', INTEGER)
        A = read_matrix('1 2; 3 4', INTEGER)
        witness = conjugate(A, P)
        assert witness.result == read_matrix('4 2; 3 1', INTEGER)
        assert witness.conjugator_inverse == read_matrix('1 -1; 0 1', INTEGER)
        assert char_poly(witness.result) == char_poly(A)

    def test_permutation_similarity(self):
        sigma = [1, 2, 0, 3, 4]
        witness = permutation_similarity(self.example, sigma)
        assert witness.conjugator == permutation_matrix(sigma, INTEGER)
        assert witness == conjugate(self.example, witness.conjugator)
        assert witness.result[1, 2] == self.example[0, 1]

    def test_not_a_permutation(self):
        with pytest.raises(PreconditionError):
            permutation_matrix([0, 0, 1], INTEGER)

    def test_block_diagonal(self):
        Q = read_matrix('2 3; 4 5')
        assert block_diagonal(1, Q) == read_matrix('1 0 0; 0 2 3; 0 4 5')

    def test_submatrix_and_replace(self):
        A = read_matrix('1 2 3; 4 5 6; 7 8 9')
        assert A.submatrix(1) == read_matrix('5 6; 8 9')
        assert A.replace({(0, 0): 0})[0, 0] == 0
        assert A[0, 0] == 1

    def test_rank(self):
        assert rank([(1, 2, 3), (2, 4, 6)], RATIONAL) == 1
        assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)], INTEGER) == 2
        assert rank([(1, 1), (1, 0)], PrimeField(2)) == 2
        assert rank([(1, 1), (3, 3)], PrimeField(2)) == 1

    def test_lift_and_lower(self):
        half = read_matrix('1/2 0; 0 1')
        assert lower(half) == half
        assert lower(lift(self.example)) == self.example
        assert lift(self.example).ring == RATIONAL

    def test_ring_mismatch(self):
        with pytest.raises(PreconditionError):
            common_ring(self.example, identity(5, PrimeField(5)))
        with pytest.raises(PreconditionError):
            multiply(self.example, identity(5, RATIONAL))
        with pytest.raises(PreconditionError):
            multiply(self.example, identity(4, INTEGER))

    def test_not_square(self):
        with pytest.raises(PreconditionError):
            Matrix([[1, 2]], RATIONAL)
