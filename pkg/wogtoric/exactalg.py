# The MIT License (MIT)
#
# Copyright (c) 2026 The wogtoric Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

import itertools
import logging
from fractions import Fraction

from .util import *


class NotSquare(ValueError):
    pass

class ZeroVector(ValueError):
    pass

class LengthMismatch(ValueError):
    pass


class IntMatrix:
    """Dense exact integer matrix.  Immutable once built."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(tuple(int(v) for v in row) for row in entries)

        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise LengthMismatch("Matrix entries do not have shape {}x{}".format(rows, cols))

        self._rows = rows
        self._cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(row) for row in rows]

        if cols is None:
            cols = len(rows[0]) if rows else 0

        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size):
        return cls(size, size, [[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return (self._rows, self._cols)

    @property
    def entries(self):
        return self._entries

    def __getitem__(self, key):
        row, col = key
        return self._entries[row][col]

    def row(self, idx):
        return self._entries[idx]

    def column(self, idx):
        return tuple(row[idx] for row in self._entries)

    def submatrix(self, row_idx, col_idx):
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return IntMatrix(len(row_idx), len(col_idx),
            [[self._entries[i][j] for j in col_idx] for i in row_idx])

    def apply(self, vector):
        if len(vector) != self._cols:
            raise LengthMismatch("Vector of length {} applied to matrix with {} columns".format(len(vector), self._cols))

        return tuple(dot(row, vector) for row in self._entries)

    def tolist(self):
        return [list(row) for row in self._entries]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._entries == other._entries and self.shape == other.shape

    def __hash__(self):
        return hash((self.shape, self._entries))

    def __repr__(self):
        return "IntMatrix({}x{}, {})".format(self._rows, self._cols, self.tolist())


def determinant(m):
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise NotSquare("Determinant of a {}x{} matrix".format(m.rows, m.cols))

    n = m.rows
    if n == 0:
        return 1

    a = m.tolist()
    sign = 1
    prev = 1

    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0

            a[k], a[swap] = a[swap], a[k]
            sign = -sign

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                ## Division is exact: every entry is a minor of the input
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev

        prev = a[k][k]

    return sign * a[n - 1][n - 1]

def rank(m):
    a = m.tolist()
    r = 0
    prev = 1

    for c in range(m.cols):
        if r == m.rows:
            break

        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue

        a[r], a[pivot] = a[pivot], a[r]

        for i in range(r + 1, m.rows):
            for j in range(c + 1, m.cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0

        prev = a[r][c]
        r += 1

    return r

def reduced_row_echelon(m):
    """Return (rref rows as Fractions, pivot columns), pivoting on the first nonzero entry."""
    a = [[Fraction(v) for v in row] for row in m.entries]
    pivots = []
    r = 0

    for c in range(m.cols):
        if r == m.rows:
            break

        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue

        a[r], a[pivot] = a[pivot], a[r]

        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]

        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]

        pivots.append(c)
        r += 1

    return a, pivots

def null_space_basis(m):
    a, pivots = reduced_row_echelon(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []

    ## One basis vector per free column, in column order
    for f in free:
        vector = [Fraction(0)] * m.cols
        vector[f] = Fraction(1)

        for r, p in enumerate(pivots):
            vector[p] = -a[r][f]

        basis.append(tuple(vector))

    return basis

def primitive_integer_vector(vector):
    values = as_fractions(vector)

    if is_zero(values):
        raise ZeroVector("Cannot scale the zero vector to a primitive vector")

    scale = lcm_of(denominators(values))
    ints = [int(v * scale) for v in values]

    g = gcd_of(ints)
    ints = [v // g for v in ints]

    if next(v for v in ints if v != 0) < 0:
        ints = [-v for v in ints]

    return tuple(ints)

def bounded_integer_kernel(m, bound):
    """All nonzero integer u with m*u == 0 and max|u_i| <= bound, sorted."""
    if bound < 1:
        raise ValueError("Kernel bound must be at least 1, got {}".format(bound))

    a, pivots = reduced_row_echelon(m)
    free = [c for c in range(m.cols) if c not in pivots]

    if not free:
        return []

    ## Pivot row r depends on the free variables with nonzero coefficients.
    ## It is checked as soon as its last dependency has been assigned.
    checks = {idx: [] for idx in range(len(free))}

    for r, p in enumerate(pivots):
        deps = [idx for idx, f in enumerate(free) if a[r][f] != 0]
        if deps:
            checks[deps[-1]].append(r)

    found = []
    values = [0] * len(free)

    def pivot_value(r):
        return -sum(a[r][f] * values[idx] for idx, f in enumerate(free))

    def assign(depth):
        if depth == len(free):
            if any(values):
                vector = [0] * m.cols
                for idx, f in enumerate(free):
                    vector[f] = values[idx]
                for r, p in enumerate(pivots):
                    vector[p] = int(pivot_value(r))
                found.append(tuple(vector))
            return

        for value in range(-bound, bound + 1):
            values[depth] = value

            ok = True
            for r in checks[depth]:
                v = pivot_value(r)
                if v.denominator != 1 or abs(v) > bound:
                    ok = False
                    break

            if ok:
                assign(depth + 1)

        values[depth] = 0

    assign(0)

    logging.debug("Bounded kernel search with bound {} found {} vectors".format(bound, len(found)))
    return sorted(found)

def _size_reduce(basis):
    ## Pairwise reduction; only applied when the squared norm strictly drops
    basis = [list(v) for v in basis]
    changed = True

    while changed:
        changed = False
        for i, j in itertools.permutations(range(len(basis)), 2):
            bj = basis[j]
            norm = dot(bj, bj)
            q = round(Fraction(dot(basis[i], bj), norm))

            if q == 0:
                continue

            reduced = [x - q * y for x, y in zip(basis[i], bj)]
            if dot(reduced, reduced) < dot(basis[i], basis[i]):
                basis[i] = reduced
                changed = True

    return [tuple(v) for v in basis]

def integer_kernel_basis(m):
    """Z-basis of ker(m) intersected with Z^cols, by unimodular column reduction."""
    cols = m.cols

    ## Rows of `work` are the columns of m, each augmented with a unit vector
    work = [list(m.column(j)) + [int(i == j) for i in range(cols)] for j in range(cols)]
    r = 0

    for c in range(m.rows):
        for i in range(r + 1, cols):
            if work[i][c] == 0:
                continue

            a, b = work[r][c], work[i][c]
            g, x, y = xgcd(a, b)
            top = [x * u + y * v for u, v in zip(work[r], work[i])]
            bottom = [(a // g) * v - (b // g) * u for u, v in zip(work[r], work[i])]
            work[r], work[i] = top, bottom

        if work[r][c] != 0:
            r += 1

        if r == cols:
            break

    basis = [tuple(row[m.rows:]) for row in work if is_zero(row[:m.rows])]

    if len(basis) > 1:
        basis = _size_reduce(basis)

    return basis
