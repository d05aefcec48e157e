"""
Unit tests for subspaces, arrangements and normalization.
"""
import unittest
from fractions import Fraction

from arrangement_homotopy.arrangement import Arrangement, Subspace, intersect, normalize
from arrangement_homotopy.errors import HypothesisError


def plane(rows, name, ambient_dim=4):
    return Subspace.from_equations(rows, ambient_dim, name)


class TestSubspace(unittest.TestCase):
    """Test cases for the Subspace class."""

    def test_canonical_form(self):
        """Different equation sets for one subspace compare equal."""
        a = plane([[1, 0, 0, 0], [0, 1, 0, 0]], "a")
        b = plane([[1, 1, 0, 0], [2, -1, 0, 0], [3, 0, 0, 0]], "b")
        self.assertEqual(a, b)
        self.assertEqual(a.codim, 2)
        self.assertEqual(a.dimension, 2)
        self.assertEqual(b.canonical, ((1, 0, 0, 0), (0, 1, 0, 0)))

    def test_rational_coefficients(self):
        """Test building a subspace from rational coefficients."""
        s = Subspace.from_equations([["1/2", "-3/4"]], 2, "s")
        self.assertEqual(s.canonical, ((Fraction(1), Fraction(-3, 2)),))

    def test_wrong_row_length(self):
        """Test rejecting equations of the wrong length."""
        with self.assertRaises(ValueError):
            Subspace.from_equations([[1, 0, 0]], 4, "bad")

    def test_intersect_and_contains(self):
        """Test intersecting subspaces and testing containment."""
        a = plane([[1, 0, 0, 0], [0, 1, 0, 0]], "a")
        b = plane([[0, 0, 1, 0], [0, 0, 0, 1]], "b")
        origin = intersect(a, b)
        self.assertEqual(origin.codim, 4)
        self.assertTrue(a.contains(origin))
        self.assertFalse(origin.contains(a))
        self.assertTrue(Subspace.whole_space(4).contains(a))

    def test_intersect_dimension_mismatch(self):
        """Test intersecting subspaces of different ambient spaces."""
        with self.assertRaises(ValueError):
            plane([[1, 0, 0, 0]], "a").intersect(Subspace.whole_space(3))


class TestNormalize(unittest.TestCase):
    """Test cases for normalize()."""

    def setUp(self):
        """Set up two planes through the origin of C^4."""
        self.x1 = plane([[1, 0, 0, 0], [0, 1, 0, 0]], "x1")
        self.x2 = plane([[0, 0, 1, 0], [0, 0, 0, 1]], "x2")

    def test_clean_arrangement_unchanged(self):
        """Test normalizing an arrangement that needs no changes."""
        arr = Arrangement(4, (self.x1, self.x2))
        normalized, warnings = normalize(arr)
        self.assertEqual(normalized.names, ("x1", "x2"))
        self.assertEqual(warnings, ())

    def test_hyperplane_rejected(self):
        """Codimension-one atoms violate the standing hypothesis."""
        hyperplane = plane([[1, 0, 0, 0]], "h")
        with self.assertRaises(HypothesisError) as context:
            normalize(Arrangement(4, (self.x1, hyperplane)))
        self.assertIn("'h'", str(context.exception))

    def test_duplicate_dropped_keeping_first(self):
        """Test dropping a duplicate atom."""
        copy = plane([[2, 0, 0, 0], [0, 3, 0, 0]], "copy")
        normalized, warnings = normalize(Arrangement(4, (self.x1, copy, self.x2)))
        self.assertEqual(normalized.names, ("x1", "x2"))
        self.assertEqual(len(warnings), 1)
        self.assertIn("duplicates", warnings[0])

    def test_contained_atom_dropped(self):
        """Test dropping an atom contained in another."""
        line = plane([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], "line")
        normalized, warnings = normalize(Arrangement(4, (line, self.x1)))
        self.assertEqual(normalized.names, ("x1",))
        self.assertIn("contained in atom 'x1'", warnings[0])

    def test_unique_names_required(self):
        """Test rejecting repeated atom names."""
        with self.assertRaises(ValueError):
            Arrangement(4, (self.x1, self.x2.renamed("x1")))


if __name__ == '__main__':
    unittest.main()
