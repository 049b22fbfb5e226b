from fractions import Fraction

import pytest
import sympy

from wogtoric import (
    IntMatrix, NotSquare, ZeroVector,
    determinant, rank, null_space_basis, primitive_integer_vector, bounded_integer_kernel, integer_kernel_basis,
    incidence_matrix,
)
from builders import oriented_cycle, seeded

EIGHT_CYCLE_KERNEL = (1, -4, 16, -16, 8, -4, 2, -1)


def cofactor_determinant(rows):
    if not rows:
        return 1
    return sum((-1) ** j * rows[0][j] * cofactor_determinant([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(len(rows)))

def random_matrix(rng, rows, cols, low=-5, high=5):
    return IntMatrix.from_rows([[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)], cols)


class TestDeterminant:

    def test_identity(self):
        assert determinant(IntMatrix.identity(2)) == 1

    def test_two_by_two(self):
        assert determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_natural_triangle(self):
        graph = oriented_cycle([True, True, True], [2, 2, 2])
        assert determinant(incidence_matrix(graph).matrix) == 9

    def test_not_square(self):
        with pytest.raises(NotSquare):
            determinant(IntMatrix.from_rows([[1, 2, 3]]))

    def test_needs_row_swap(self):
        assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert determinant(IntMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1

    def test_against_cofactor_expansion(self):
        rng = seeded(1)
        for _ in range(300):
            n = rng.randint(1, 5)
            m = random_matrix(rng, n, n)
            assert determinant(m) == cofactor_determinant(m.tolist())

    def test_sparse_against_cofactor_expansion(self):
        rng = seeded(2)
        for _ in range(300):
            n = rng.randint(2, 5)
            m = IntMatrix.from_rows([[rng.choice([0, 0, 0, 1, -2, 3]) for _ in range(n)] for _ in range(n)])
            assert determinant(m) == cofactor_determinant(m.tolist())


class TestRank:

    def test_zero(self):
        assert rank(IntMatrix.zeros(3, 3)) == 0

    def test_identity(self):
        assert rank(IntMatrix.identity(4)) == 4

    def test_eight_cycle(self, eight_cycle_d1):
        assert rank(incidence_matrix(eight_cycle_d1).matrix) == 7

    def test_against_sympy(self):
        rng = seeded(4)
        for _ in range(200):
            m = IntMatrix.from_rows([[rng.choice([0, 0, 1, 2, -1]) for _ in range(5)] for _ in range(rng.randint(1, 6))])
            assert rank(m) == sympy.Matrix(m.tolist()).rank()


class TestNullSpace:

    def test_repeated_rows(self):
        assert null_space_basis(IntMatrix.from_rows([[1, 1], [1, 1]])) == [(Fraction(-1), Fraction(1))]

    def test_full_column_rank(self):
        assert null_space_basis(IntMatrix.identity(3)) == []

    def test_eight_cycle(self, eight_cycle_d1):
        basis = null_space_basis(incidence_matrix(eight_cycle_d1).matrix)
        assert len(basis) == 1
        assert primitive_integer_vector(basis[0]) == EIGHT_CYCLE_KERNEL

    def test_rank_nullity(self):
        rng = seeded(6)
        for _ in range(200):
            rows, cols = rng.randint(1, 5), rng.randint(1, 6)
            m = random_matrix(rng, rows, cols, -2, 2)
            basis = null_space_basis(m)
            assert rank(m) + len(basis) == cols
            for v in basis:
                assert all(x == 0 for x in m.apply(v))


class TestPrimitive:

    def test_fractions(self):
        assert primitive_integer_vector((Fraction(1, 2), Fraction(-1, 3))) == (3, -2)

    def test_common_factor(self):
        assert primitive_integer_vector((2, -2)) == (1, -1)

    def test_sign(self):
        assert primitive_integer_vector((-1, 4)) == (1, -4)

    def test_zero(self):
        with pytest.raises(ZeroVector):
            primitive_integer_vector((0, 0))

    def test_scale_invariant(self):
        rng = seeded(8)
        for _ in range(200):
            v = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(4)]
            if all(x == 0 for x in v):
                continue
            c = Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 7))
            assert primitive_integer_vector([c * x for x in v]) == primitive_integer_vector(v)


class TestBoundedKernel:

    def test_repeated_rows(self):
        found = bounded_integer_kernel(IntMatrix.from_rows([[1, 1], [1, 1]]), 2)
        assert found == [(-2, 2), (-1, 1), (1, -1), (2, -2)]

    def test_full_column_rank(self):
        assert bounded_integer_kernel(IntMatrix.identity(3), 5) == []

    def test_eight_cycle(self, eight_cycle_d1):
        found = bounded_integer_kernel(incidence_matrix(eight_cycle_d1).matrix, 16)
        assert found == sorted([EIGHT_CYCLE_KERNEL, tuple(-x for x in EIGHT_CYCLE_KERNEL)])

    def test_bound_below_entries(self, eight_cycle_d1):
        assert bounded_integer_kernel(incidence_matrix(eight_cycle_d1).matrix, 15) == []

    def test_closure(self):
        rng = seeded(9)
        for _ in range(60):
            m = random_matrix(rng, rng.randint(1, 3), rng.randint(2, 4), -2, 2)
            bound = rng.randint(1, 3)
            found = bounded_integer_kernel(m, bound)
            assert set(found) == set(tuple(-x for x in u) for u in found)
            for u in found:
                assert max(abs(x) for x in u) <= bound
                assert all(x == 0 for x in m.apply(u))

    def test_matches_brute_force(self):
        import itertools
        rng = seeded(10)
        for _ in range(30):
            m = random_matrix(rng, 2, 4, -2, 2)
            brute = sorted(u for u in itertools.product(range(-2, 3), repeat=4)
                           if any(u) and all(x == 0 for x in m.apply(u)))
            assert bounded_integer_kernel(m, 2) == brute


class TestIntegerKernelBasis:

    def test_dimension(self, three_cycles_d1):
        m = incidence_matrix(three_cycles_d1).matrix
        basis = integer_kernel_basis(m)
        assert len(basis) == 2
        for v in basis:
            assert all(x == 0 for x in m.apply(v))

    def test_lattice_is_saturated(self):
        ## ker of [2, 4] over Z is generated by (2, -1); the rational basis alone gives (-2, 1)
        basis = integer_kernel_basis(IntMatrix.from_rows([[2, 4]]))
        assert len(basis) == 1
        assert primitive_integer_vector(basis[0]) == (2, -1)

    def test_against_sympy_rank(self):
        rng = seeded(12)
        for _ in range(100):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(2, 6), -3, 3)
            basis = integer_kernel_basis(m)
            assert len(basis) == m.cols - sympy.Matrix(m.tolist()).rank()
            for v in basis:
                assert all(x == 0 for x in m.apply(v))
