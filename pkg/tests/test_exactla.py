"""
Unit tests for exact rational linear algebra.
"""
import random
import unittest
from fractions import Fraction

import sympy

from arrangement_homotopy.exactla import (Echelon, QMat, column_space_basis, coset_representatives,
                                          kernel_basis, rank, rref, to_rat)


def random_matrices(count, rows=4, cols=5, seed=11):
    """Small rational matrices with many zeros, so ranks vary."""
    rng = random.Random(seed)
    return [QMat.from_rows([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.5 else 0
                             for _ in range(cols)] for _ in range(rows)], cols)
            for _ in range(count)]


class TestQMat(unittest.TestCase):
    """Test cases for the sparse matrix type."""

    def test_zeros_are_dropped(self):
        """Stored entries never include zeros."""
        m = QMat.from_rows([[0, 1], [2, 0]])
        self.assertEqual(m.entries, {(0, 1): Fraction(1), (1, 0): Fraction(2)})

    def test_out_of_range_entry(self):
        """Test rejecting an entry outside the matrix."""
        with self.assertRaises(ValueError):
            QMat(2, 2, {(2, 0): 1})

    def test_ragged_rows(self):
        """Test rejecting rows of different lengths."""
        with self.assertRaises(ValueError):
            QMat.from_rows([[1, 2], [3]])

    def test_apply_and_transpose(self):
        """Test applying and transposing a matrix."""
        m = QMat.from_rows([[1, 2, 0], [0, 1, -1]])
        self.assertEqual(m.apply([1, 1, 1]), (Fraction(3), Fraction(0)))
        self.assertEqual(m.transpose().to_rows(), [[1, 0], [2, 1], [0, -1]])

    def test_stack_requires_same_width(self):
        """Test stacking matrices of different widths."""
        with self.assertRaises(ValueError):
            QMat.zeros(1, 2).stack(QMat.zeros(1, 3))

    def test_to_rat_rejects_floats_and_bools(self):
        """Test converting values to fractions."""
        self.assertEqual(to_rat("-3/4"), Fraction(-3, 4))
        with self.assertRaises(TypeError):
            to_rat(0.5)
        with self.assertRaises(TypeError):
            to_rat(True)


class TestRowReduction(unittest.TestCase):
    """Test cases for rref, rank, kernels and images."""

    def setUp(self):
        """Set up a rank-2 matrix with a repeated row combination."""
        self.rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, Fraction(1, 2)]]
        self.matrix = QMat.from_rows(self.rows)

    def test_rref_is_reduced(self):
        """Test the reduced row echelon form."""
        reduced = rref(self.matrix)
        self.assertEqual(reduced.pivots, (0, 1))
        self.assertEqual(reduced.rank, 2)
        self.assertEqual(reduced.matrix.to_rows()[0], [1, 0, 5, 3])
        self.assertEqual(reduced.matrix.to_rows()[2], [0, 0, 0, 0])

    def test_rank_matches_sympy(self):
        """Rank agrees with an independent computation."""
        for rows in (self.rows, [[1, 1], [1, -1]], [[0, 0], [0, 0]], [[2, 4, 6]]):
            self.assertEqual(rank(QMat.from_rows(rows)), sympy.Matrix(rows).rank())

    def test_kernel_basis(self):
        """Test the kernel basis and its ordering."""
        kernel = kernel_basis(self.matrix)
        self.assertEqual(len(kernel), 2)
        for vector in kernel:
            self.assertFalse(any(self.matrix.apply(vector)))
        # one free column per vector, ordered by free column
        self.assertEqual([v[2] for v in kernel], [1, 0])
        self.assertEqual([v[3] for v in kernel], [0, 1])

    def test_kernel_of_zero_columns(self):
        """Test kernels of empty matrices."""
        self.assertEqual(kernel_basis(QMat.zeros(3, 0)), [])
        self.assertEqual(len(kernel_basis(QMat.zeros(0, 3))), 3)

    def test_column_space_basis(self):
        """Test the column space basis."""
        basis = column_space_basis(self.matrix)
        self.assertEqual(len(basis), 2)
        self.assertEqual(basis[0], {0: Fraction(1), 1: Fraction(2)})

    def test_rref_swaps_rows(self):
        """Test that a leading zero in the first row forces a row swap."""
        reduced = rref(QMat.from_rows([[0, 1, 1], [1, 0, 1]]))
        self.assertEqual(reduced.matrix.to_rows(), [[1, 0, 1], [0, 1, 1]])
        self.assertEqual(reduced.pivots, (0, 1))

    def test_rref_is_idempotent(self):
        """Test that reducing a reduced matrix changes nothing."""
        for m in [self.matrix] + random_matrices(40):
            once = rref(m)
            twice = rref(once.matrix)
            self.assertEqual(twice.matrix.to_rows(), once.matrix.to_rows())
            self.assertEqual(twice.pivots, once.pivots)

    def test_rank_plus_nullity(self):
        """Test rank(m) + dim ker(m) = number of columns."""
        for m in [self.matrix, QMat.zeros(2, 3), QMat.identity(4)] + random_matrices(60):
            kernel = kernel_basis(m)
            self.assertEqual(rank(m) + len(kernel), m.cols)
            for vector in kernel:
                self.assertFalse(any(m.apply(vector)))


class TestEchelon(unittest.TestCase):
    """Test cases for the labelled incremental echelon basis."""

    def test_insert_reports_dependence(self):
        """Test inserting dependent vectors."""
        echelon = Echelon()
        self.assertTrue(echelon.insert([1, 1, 0], "a"))
        self.assertTrue(echelon.insert([0, 1, 1], "b"))
        self.assertFalse(echelon.insert([1, 2, 1], "c"))
        self.assertEqual(echelon.rank, 2)

    def test_reduce_expresses_vector(self):
        """Test expressing a vector in the echelon basis."""
        echelon = Echelon()
        echelon.insert([1, 1, 0], "a")
        echelon.insert([0, 1, 1], "b")
        remainder, combination = echelon.reduce([2, 3, 1])
        self.assertEqual(remainder, {})
        self.assertEqual(combination, {"a": Fraction(2), "b": Fraction(1)})


class TestCosetRepresentatives(unittest.TestCase):
    """Test cases for quotient bases."""

    def test_quotient_of_plane_by_diagonal(self):
        """span{(1,0),(0,1)} / span{(1,1)} is one-dimensional."""
        chosen, projection = coset_representatives(2, [[1, 1]], [[1, 0], [0, 1]])
        self.assertEqual(chosen, [[1, 0]])
        self.assertEqual(projection.dimension, 1)
        self.assertEqual(projection([1, 1]), (Fraction(0),))
        self.assertEqual(projection([0, 1]), (Fraction(-1),))

    def test_subspace_outside_cycles(self):
        """Test rejecting a subspace outside the cycle span."""
        with self.assertRaises(ValueError):
            coset_representatives(2, [[1, 1]], [[1, 0]])

    def test_projection_rejects_non_cycle(self):
        """Test projecting a vector outside the cycle space."""
        _, projection = coset_representatives(3, [], [[1, 0, 0]])
        with self.assertRaises(ValueError):
            projection([0, 1, 0])
    def test_projection_is_linear(self):
        """Test that the projection respects sums and scalar multiples."""
        cycles = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
        _, projection = coset_representatives(4, [[1, 1, 0, 0], [0, 1, -1, 0]], cycles)
        rng = random.Random(7)
        for _ in range(30):
            u = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)] + [Fraction(0)]
            v = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)] + [Fraction(0)]
            a, b = Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3))
            combined = [a * x + b * y for x, y in zip(u, v)]
            expected = tuple(a * x + b * y for x, y in zip(projection(u), projection(v)))
            self.assertEqual(projection(combined), expected)



if __name__ == '__main__':
    unittest.main()
