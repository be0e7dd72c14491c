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

"""Dense exact square matrices.

Indices are 0-based throughout the Python API; documents and transcripts
print them 1-based. Matrices are immutable: every transform returns a new
matrix, and conjugations return a ``SimilarityWitness``.
"""

from dataclasses import dataclass

from diagsim.errors import PreconditionError, SingularMatrixError
from diagsim.ring import INTEGER, RATIONAL


class Matrix:

    __slots__ = ('ring', 'rows')

    def __init__(self, rows, ring):
        rows = tuple(tuple(ring.convert(x) for x in row) for row in rows)
        if len(rows) == 0:
            raise PreconditionError('matrix order must be at least 1')
        for row in rows:
            if len(row) != len(rows):
                raise PreconditionError('matrix is not square')
        self.ring = ring
        self.rows = rows

    @property
    def order(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.order))

    def submatrix(self, start):
        """Trailing principal block on indices start, ..., n - 1."""
        return Matrix([row[start:] for row in self.rows[start:]], self.ring)

    def replace(self, entries):
        """Copy with {(i, j): value} entries overwritten."""
        rows = [list(row) for row in self.rows]
        for (i, j), value in entries.items():
            rows[i][j] = value
        return Matrix(rows, self.ring)

    def to_strings(self):
        return [[self.ring.format(x) for x in row] for row in self.rows]

    def is_integral(self):
        return all(self.ring.is_integral(x) for row in self.rows for x in row)

    def __matmul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return 'Matrix({}, {})'.format(self.to_strings(), self.ring.label)


@dataclass(frozen=True)
class SimilarityWitness:
    """result = conjugator * A * conjugator_inverse for the source A."""

    conjugator: Matrix
    conjugator_inverse: Matrix
    result: Matrix

    def then(self, other):
        """Witness of applying self first, then other on self.result."""
        conjugator = multiply(*common_ring(other.conjugator, self.conjugator))
        inverse = multiply(
            *common_ring(self.conjugator_inverse, other.conjugator_inverse))
        return SimilarityWitness(conjugator, inverse, other.result)


@dataclass(frozen=True)
class CharPoly:
    """Coefficients c_0, ..., c_n of det(xI - A), lowest degree first."""

    coefficients: tuple
    ring: object

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if self.ring.is_zero(c):
                continue
            text = self.ring.format(c)
            sign = '-' if text.startswith('-') else '+'
            text = text.lstrip('-')
            if k > 0 and text == '1':
                text = ''
            if k == 1:
                text += 'x'
            elif k > 1:
                text += 'x^{}'.format(k)
            terms.append((sign, text))
        if not terms:
            return '0'
        head_sign, head = terms[0]
        out = ('-' if head_sign == '-' else '') + head
        for sign, text in terms[1:]:
            out += ' {} {}'.format(sign, text)
        return out


def identity(n, ring):
    return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                  ring)


def zeros(n, ring):
    return Matrix([[0] * n for _ in range(n)], ring)


def from_rows(rows, ring):
    return Matrix(rows, ring)


def parse_matrix(rows, ring):
    return Matrix([[ring.parse(x) for x in row] for row in rows], ring)


def lift(X):
    """Read an integer matrix over the rationals; other rings unchanged."""
    if X.ring == INTEGER:
        return Matrix(X.rows, RATIONAL)
    return X


def lower(X):
    """Read a rational matrix back over the integers when it is integral."""
    if X.ring == RATIONAL and X.is_integral():
        return Matrix(X.rows, INTEGER)
    return X


def common_ring(*matrices):
    rings = {X.ring for X in matrices}
    if len(rings) == 1:
        return matrices
    if rings <= {INTEGER, RATIONAL}:
        return tuple(lift(X) for X in matrices)
    raise PreconditionError('ring mismatch: {}'.format(
        ', '.join(sorted(r.label for r in rings))))


def _check_orders(*matrices):
    orders = {X.order for X in matrices}
    if len(orders) != 1:
        raise PreconditionError('order mismatch: {}'.format(
            ', '.join(str(n) for n in sorted(orders))))


def multiply(X, Y):
    _check_orders(X, Y)
    if X.ring != Y.ring:
        raise PreconditionError('ring mismatch: {} and {}'.format(
            X.ring.label, Y.ring.label))
    ring = X.ring
    columns = [Y.column(j) for j in range(Y.order)]
    rows = [[ring.sum(ring.mul(x, y) for x, y in zip(row, col))
             for col in columns] for row in X.rows]
    return Matrix(rows, ring)


def matrix_vector(A, v):
    ring = A.ring
    return tuple(ring.sum(ring.mul(x, y) for x, y in zip(row, v))
                 for row in A.rows)


def invert(X):
    """Gauss-Jordan inverse, pivoting on the first nonzero entry down each
    column. Integer input is inverted over the rationals and handed back
    as an integer matrix when the inverse is integral."""
    integer = X.ring == INTEGER
    X = lift(X)
    ring = X.ring
    n = X.order
    work = [list(row) + [ring.one if i == j else ring.zero for j in range(n)]
            for i, row in enumerate(X.rows)]
    for col in range(n):
        pivot = next(
            (i for i in range(col, n) if not ring.is_zero(work[i][col])),
            None)
        if pivot is None:
            raise SingularMatrixError(col)
        work[col], work[pivot] = work[pivot], work[col]
        scale = ring.inv(work[col][col])
        work[col] = [ring.mul(scale, x) for x in work[col]]
        for i in range(n):
            factor = work[i][col]
            if i == col or ring.is_zero(factor):
                continue
            work[i] = [ring.sub(x, ring.mul(factor, y))
                       for x, y in zip(work[i], work[col])]
    inverse = Matrix([row[n:] for row in work], ring)
    return lower(inverse) if integer else inverse


def conjugate(A, P):
    """Witness of P * A * P^-1. Mixed integer/rational input is computed
    over the rationals; the result is integer again when A is integer and
    the product is integral."""
    _check_orders(A, P)
    P_inv = invert(P)
    A_, P_, P_inv_ = common_ring(A, P, P_inv)
    B = multiply(multiply(P_, A_), P_inv_)
    if A.ring == INTEGER:
        B = lower(B)
    return SimilarityWitness(P, P_inv, B)


def identity_witness(A):
    one = identity(A.order, A.ring)
    return SimilarityWitness(one, one, A)


def permutation_matrix(sigma, ring):
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise PreconditionError(
            '{} is not a permutation of 0..{}'.format(list(sigma), n - 1))
    rows = [[0] * n for _ in range(n)]
    for i, image in enumerate(sigma):
        rows[image][i] = 1
    return Matrix(rows, ring)


def permutation_similarity(A, sigma):
    """Move entry (i, j) of A to (sigma[i], sigma[j])."""
    if len(sigma) != A.order:
        raise PreconditionError('permutation length {} != order {}'.format(
            len(sigma), A.order))
    P = permutation_matrix(sigma, A.ring)
    P_inv = Matrix([P.column(j) for j in range(A.order)], A.ring)
    rows = [[None] * A.order for _ in range(A.order)]
    for i in range(A.order):
        for j in range(A.order):
            rows[sigma[i]][sigma[j]] = A[i, j]
    return SimilarityWitness(P, P_inv, Matrix(rows, A.ring))


def trace(A):
    return A.ring.sum(A.diagonal())


def is_diagonal(A):
    return all(A.ring.is_zero(A[i, j]) for i in range(A.order)
               for j in range(A.order) if i != j)


def is_scalar(A):
    return is_diagonal(A) and len(set(A.diagonal())) == 1


def block_diagonal(k, Q):
    """diag(I_k, Q)."""
    n = k + Q.order
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(Q.order):
        for j in range(Q.order):
            rows[k + i][k + j] = Q[i, j]
    return Matrix(rows, Q.ring)


def char_poly(A):
    """Berkowitz: characteristic polynomial without any division, so it
    runs over the integers and in every characteristic."""
    ring = A.ring
    poly = [ring.one]
    for k in range(A.order):
        row = A.row(k)[:k]
        vector = A.column(k)[:k]
        toeplitz = [ring.one, ring.neg(A[k, k])]
        for _ in range(k):
            toeplitz.append(
                ring.neg(ring.sum(ring.mul(x, y)
                                  for x, y in zip(row, vector))))
            vector = tuple(
                ring.sum(ring.mul(A[i, j], vector[j]) for j in range(k))
                for i in range(k))
        poly = [
            ring.sum(ring.mul(toeplitz[i - j], poly[j])
                     for j in range(min(i, k) + 1))
            for i in range(k + 2)
        ]
    return CharPoly(tuple(reversed(poly)), ring)


def determinant(A):
    c0 = char_poly(A).coefficients[0]
    return c0 if A.order % 2 == 0 else A.ring.neg(c0)


def rank(vectors, ring):
    """Rank of a list of vectors over a field (integers read as rationals)."""
    if ring == INTEGER:
        ring = RATIONAL
    rows = [[ring.convert(x) for x in v] for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows))
                      if not ring.is_zero(rows[i][col])), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = ring.inv(rows[rank][col])
        for i in range(rank + 1, len(rows)):
            factor = ring.mul(rows[i][col], scale)
            if not ring.is_zero(factor):
                rows[i] = [ring.sub(x, ring.mul(factor, y))
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def from_columns(columns, ring):
    n = len(columns)
    return Matrix([[columns[j][i] for j in range(n)] for i in range(n)], ring)
