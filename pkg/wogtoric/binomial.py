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

from .exactalg import IntMatrix, ZeroVector, LengthMismatch
from .util import *


class BinomialError(ValueError):
    pass

class NotInKernel(ValueError):
    def __init__(self, binomial):
        super().__init__("{} is not in the kernel of the incidence matrix".format(binomial))
        self.binomial = binomial


class IncidenceMatrix:

    def __init__(self, matrix, edge_of_column, vertex_of_row):
        self.matrix = matrix
        self.edge_of_column = tuple(edge_of_column)
        self.vertex_of_row = tuple(vertex_of_row)

    @property
    def edge_count(self):
        return self.matrix.cols

    def column_grades(self):
        ## Positive grading of the edge variables: column sums of A
        return tuple(sum(self.matrix.column(j)) for j in range(self.matrix.cols))

    def contains(self, vector):
        return is_zero(self.matrix.apply(vector))

    def __repr__(self):
        return "IncidenceMatrix({})".format(self.matrix.tolist())

def incidence_matrix(graph):
    rows = [[0] * graph.edge_count for _ in range(graph.vertex_count)]

    for eid in graph.edge_ids:
        for vertex, exp in graph.column(eid):
            rows[vertex - 1][eid - 1] = exp

    return IncidenceMatrix(
        IntMatrix(graph.vertex_count, graph.edge_count, rows),
        graph.edge_ids,
        graph.vertices)

def as_incidence(obj):
    if isinstance(obj, IncidenceMatrix):
        return obj
    return incidence_matrix(obj)

def phi_image(graph, edge_exponents):
    """Vertex exponent vector of phi applied to the edge monomial."""
    incidence = as_incidence(graph)

    if len(edge_exponents) != incidence.edge_count:
        raise LengthMismatch("Expected {} edge exponents, got {}".format(incidence.edge_count, len(edge_exponents)))

    return incidence.matrix.apply(edge_exponents)


def format_monomial(exponents):
    terms = ["e{}^{}".format(idx + 1, exp) for idx, exp in enumerate(exponents) if exp > 0]
    return " ".join(terms) if terms else "1"


class Binomial:
    """x^plus - x^minus with disjoint supports.

    The sign is normalised on construction so the smallest edge id of the
    support lies in `plus`.
    """

    __slots__ = ("_plus", "_minus")

    def __init__(self, plus, minus):
        plus = tuple(int(v) for v in plus)
        minus = tuple(int(v) for v in minus)

        if len(plus) != len(minus):
            raise BinomialError("Monomials of lengths {} and {}".format(len(plus), len(minus)))

        if any(v < 0 for v in plus + minus):
            raise BinomialError("Exponents must be nonnegative")

        if any(p and m for p, m in zip(plus, minus)):
            raise BinomialError("Monomials {} and {} share a variable".format(format_monomial(plus), format_monomial(minus)))

        if is_zero(plus) and is_zero(minus):
            raise BinomialError("Both monomials are 1")

        first = next(idx for idx in range(len(plus)) if plus[idx] or minus[idx])
        if minus[first]:
            plus, minus = minus, plus

        self._plus = plus
        self._minus = minus

    @classmethod
    def from_vector(cls, vector):
        if is_zero(vector):
            raise ZeroVector("The zero vector has no binomial")
        return cls(positive_part(vector), negative_part(vector))

    @property
    def plus(self):
        return self._plus

    @property
    def minus(self):
        return self._minus

    @property
    def length(self):
        return len(self._plus)

    @property
    def vector(self):
        return tuple(p - m for p, m in zip(self._plus, self._minus))

    @property
    def support(self):
        return support(self.vector)

    @property
    def degree(self):
        return max(sum(self._plus), sum(self._minus))

    def reembed(self, edge_ids, length):
        """Move local edge i to original id edge_ids[i-1] in a vector of `length`."""
        vector = [0] * length
        for idx, v in enumerate(self.vector):
            vector[edge_ids[idx] - 1] = v
        return Binomial.from_vector(vector)

    def __eq__(self, other):
        return isinstance(other, Binomial) and self._plus == other._plus and self._minus == other._minus

    def __hash__(self):
        return hash((self._plus, self._minus))

    def __str__(self):
        return "{} - {}".format(format_monomial(self._plus), format_monomial(self._minus))

    def __repr__(self):
        return "Binomial('{}')".format(self)

def kernel_vector_to_binomial(vector, incidence=None):
    binomial = Binomial.from_vector(vector)

    if incidence is not None and not as_incidence(incidence).contains(binomial.vector):
        raise NotInKernel(binomial)

    return binomial
