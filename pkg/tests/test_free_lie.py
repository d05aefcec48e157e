"""
Unit tests for free graded Lie algebra ranks.
"""
import unittest
import warnings

from arrangement_homotopy.free_lie import free_lie_ranks, pbw_series, tensor_series, witt_number


class TestFreeLieRanks(unittest.TestCase):
    """Test cases for the PBW inversion and the Witt formula."""

    def test_two_even_generators_of_degree_two(self):
        """Test ranks on two generators of degree two."""
        ranks = free_lie_ranks((2, 2), 10)
        self.assertEqual(ranks.ranks, {2: 2, 4: 1, 6: 2, 8: 3, 10: 6})
        self.assertEqual(ranks.rank(3), 0)

    def test_generators_of_degrees_two_and_four(self):
        """Test ranks on generators of degrees two and four."""
        self.assertEqual(free_lie_ranks((2, 4), 10).ranks, {2: 1, 4: 1, 6: 1, 8: 1, 10: 2})

    def test_single_odd_generator(self):
        """An odd generator u has [u, u] != 0 and nothing beyond."""
        self.assertEqual(free_lie_ranks((3,), 6).ranks, {3: 1, 6: 1})
        self.assertEqual(free_lie_ranks((3,), 12).ranks, {3: 1, 6: 1})

    def test_table_lists_every_degree(self):
        """Test the table lists every degree."""
        table = free_lie_ranks((2, 2), 4).table()
        self.assertEqual(table, [(1, 0), (2, 2), (3, 0), (4, 1)])

    def test_degree_order_is_irrelevant(self):
        """Test that generator order does not matter."""
        self.assertEqual(free_lie_ranks((4, 2), 10).ranks, free_lie_ranks((2, 4), 10).ranks)

    def test_pbw_reproduces_tensor_series(self):
        """Test the PBW expansion against the tensor series."""
        ranks = free_lie_ranks((2, 3), 9)
        self.assertEqual(pbw_series(ranks.ranks, 9), tensor_series((2, 3), 9))

    def test_witt_numbers(self):
        """Test the classical Witt numbers."""
        self.assertEqual([witt_number(n, 2) for n in range(1, 7)], [2, 1, 2, 3, 6, 9])
        self.assertEqual(witt_number(1, 3), 3)
        with self.assertRaises(ValueError):
            witt_number(0, 2)

    def test_witt_numbers_raise_no_deprecation_warnings(self):
        """Test that the Witt formula runs without sympy deprecation warnings."""
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            free_lie_ranks((2, 2), 10)
            witt_number(6, 3)
        self.assertEqual([w for w in caught if issubclass(w.category, DeprecationWarning)], [])

    def test_bad_degrees(self):
        """Test rejecting invalid degrees."""
        for degrees in ((), (0, 2), (-1,)):
            with self.assertRaises(ValueError):
                free_lie_ranks(degrees, 5)
        with self.assertRaises(ValueError):
            free_lie_ranks((2,), -1)


if __name__ == '__main__':
    unittest.main()
