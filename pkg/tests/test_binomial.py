import pytest

from wogtoric import (
    WeightedOrientedGraph, IntMatrix, IncidenceMatrix, Binomial, BinomialError, NotInKernel, ZeroVector, LengthMismatch,
    incidence_matrix, phi_image, kernel_vector_to_binomial,
)
from builders import load, oriented_cycle

EIGHT_CYCLE_KERNEL = (1, -4, 16, -16, 8, -4, 2, -1)


class TestIncidenceMatrix:

    def test_single_edge(self):
        incidence = incidence_matrix(WeightedOrientedGraph(2, [1, 3], [(1, 2)]))
        assert incidence.matrix.tolist() == [[1], [3]]
        assert incidence.edge_of_column == (1,)
        assert incidence.vertex_of_row == (1, 2)

    def test_eight_cycle_column(self, eight_cycle_d1):
        m = incidence_matrix(eight_cycle_d1).matrix
        assert m.column(0) == (1, 4, 0, 0, 0, 0, 0, 0)
        assert m.column(3) == (0, 0, 0, 3, 1, 0, 0, 0)

    def test_unit_weights(self):
        m = incidence_matrix(oriented_cycle([True, False, True, False], [1, 1, 1, 1])).matrix
        for j in range(4):
            assert sorted(m.column(j)) == [0, 0, 1, 1]

    def test_monomial_graph(self):
        m = incidence_matrix(load("monomials.graph")).matrix
        assert m.column(0) == (2, 1, 0, 0)
        assert m.column(3) == (4, 0, 0, 1)

    def test_embedding(self, eight_cycle_d1):
        assert incidence_matrix(eight_cycle_d1.as_monomial_graph()).matrix == incidence_matrix(eight_cycle_d1).matrix


class TestPhi:

    def test_zero(self, eight_cycle_d1):
        assert phi_image(eight_cycle_d1, [0] * 8) == (0,) * 8

    def test_single_edge(self, eight_cycle_d1):
        assert phi_image(eight_cycle_d1, [1, 0, 0, 0, 0, 0, 0, 0]) == (1, 4, 0, 0, 0, 0, 0, 0)

    def test_generator_sides_agree(self, eight_cycle_d1):
        b = Binomial.from_vector(EIGHT_CYCLE_KERNEL)
        assert phi_image(eight_cycle_d1, b.plus) == phi_image(eight_cycle_d1, b.minus)

    def test_length(self, eight_cycle_d1):
        with pytest.raises(LengthMismatch):
            phi_image(eight_cycle_d1, [1, 2])


class TestBinomial:

    def test_two_edges(self):
        incidence = IncidenceMatrix(IntMatrix.from_rows([[1, 1], [1, 1]]), (1, 2), (1, 2))
        b = kernel_vector_to_binomial((1, -1), incidence)
        assert str(b) == "e1^1 - e2^1"

    def test_eight_cycle(self, eight_cycle_d1):
        b = kernel_vector_to_binomial(EIGHT_CYCLE_KERNEL, eight_cycle_d1)
        assert str(b) == "e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1"
        assert b.support == frozenset(range(1, 9))
        assert b.degree == 27

    def test_zero(self, eight_cycle_d1):
        with pytest.raises(ZeroVector):
            kernel_vector_to_binomial([0] * 8, eight_cycle_d1)

    def test_not_in_kernel(self, eight_cycle_d1):
        with pytest.raises(NotInKernel):
            kernel_vector_to_binomial([1, -1, 0, 0, 0, 0, 0, 0], eight_cycle_d1)

    def test_canonical_sign(self):
        assert Binomial((0, 1), (1, 0)) == Binomial((1, 0), (0, 1))
        assert Binomial((0, 1), (1, 0)).plus == (1, 0)
        assert Binomial.from_vector((-1, 4)) == Binomial.from_vector((1, -4))

    def test_overlapping_supports(self):
        with pytest.raises(BinomialError):
            Binomial((1, 1), (1, 0))

    def test_trivial(self):
        with pytest.raises(BinomialError):
            Binomial((0, 0), (0, 0))

    def test_reembed(self):
        b = Binomial.from_vector((2, -1))
        assert b.reembed((3, 5), 6).vector == (0, 0, 2, 0, -1, 0)
        assert b.reembed((5, 3), 6).vector == (0, 0, 1, 0, -2, 0)
