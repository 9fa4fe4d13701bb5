from fractions import Fraction

from django.test import SimpleTestCase

from core.linalg import determinant, kernel, rank, solve


class DeterminantTestSuite(SimpleTestCase):
    def test_exact_rational_determinant(self):
        rows = [[Fraction(1, 2), 1], [Fraction(1, 3), Fraction(1, 4)]]
        self.assertEqual(determinant(rows), Fraction(1, 8) - Fraction(1, 3))

    def test_empty_matrix(self):
        self.assertEqual(determinant([]), 1)

    def test_singular_matrix(self):
        self.assertEqual(determinant([[1, 2], [2, 4]]), 0)


class KernelTestSuite(SimpleTestCase):
    def test_kernel_of_a_rank_one_matrix(self):
        rows = [[1, 2, 3], [2, 4, 6]]
        basis = kernel(rows)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            for row in rows:
                self.assertEqual(sum(a * b for a, b in zip(row, vector)), 0)

    def test_free_column_carries_one(self):
        self.assertEqual(kernel([[1, -1]]), [(Fraction(1), Fraction(1))])

    def test_invertible_matrix_has_no_kernel(self):
        self.assertEqual(kernel([[2, 1], [1, 1]]), [])


class SolveTestSuite(SimpleTestCase):
    def test_overdetermined_consistent_system(self):
        rows = [[1, 0], [0, 1], [1, 1]]
        self.assertEqual(solve(rows, [2, 3, 5]), (2, 3))

    def test_inconsistent_system(self):
        self.assertIsNone(solve([[1, 1], [1, 1]], [1, 2]))

    def test_rank(self):
        self.assertEqual(rank([[1, 2], [2, 4], [0, 1]]), 2)
        self.assertEqual(rank([]), 0)
