"""
Unit tests for the exterior algebra.
"""
import unittest
from fractions import Fraction

from arrangement_homotopy.exterior import (ExtElement, bracket, bracket_through, inversions, sort_word,
                                           verify_bracket_identity, word_name, words_of_length)


class TestWords(unittest.TestCase):
    """Test cases for word helpers."""

    def test_sort_word(self):
        """Test sorting a word with its sign."""
        self.assertEqual(sort_word((2, 0, 1)), (1, (0, 1, 2)))
        self.assertEqual(sort_word((1, 0)), (-1, (0, 1)))
        self.assertEqual(sort_word((1, 1)), (0, None))
        self.assertEqual(inversions((3, 2, 1)), 3)

    def test_words_of_length(self):
        """Test enumerating words of a given length."""
        self.assertEqual(list(words_of_length(3, 2)), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(word_name((0, 2)), "e1e3")
        self.assertEqual(word_name(()), "1")


class TestExtElement(unittest.TestCase):
    """Test cases for the ExtElement class."""

    def setUp(self):
        """Set up three generators."""
        self.e1, self.e2, self.e3 = (ExtElement.generator(i) for i in range(3))

    def test_anticommutativity(self):
        """Test anticommuting generators."""
        self.assertEqual(self.e1 * self.e2, -(self.e2 * self.e1))
        self.assertFalse(self.e1 * self.e1)

    def test_associativity(self):
        """Test associativity of the wedge product."""
        self.assertEqual((self.e1 * self.e2) * self.e3, self.e1 * (self.e2 * self.e3))

    def test_monomial_sign(self):
        """Test the sign of an unsorted monomial."""
        self.assertEqual(ExtElement.monomial((2, 0)).terms, {(0, 2): Fraction(-1)})

    def test_rendering(self):
        """Test rendering exterior elements."""
        element = ExtElement({(0, 1): 1, (0, 2): -1, (1, 2): 1})
        self.assertEqual(str(element), "e1e2 - e1e3 + e2e3")
        self.assertEqual(str(ExtElement({(0,): Fraction(1, 2), (): -2})), "-2 + 1/2*e1")
        self.assertEqual(str(ExtElement()), "0")

    def test_word_length(self):
        """Test word lengths of homogeneous elements."""
        self.assertEqual((self.e1 * self.e2).word_length, 2)
        self.assertIsNone(ExtElement().word_length)
        with self.assertRaises(ValueError):
            _ = (self.e1 + self.e1 * self.e2).word_length

    def test_linear_operations(self):
        """Test adding and scaling exterior elements."""
        total = self.e1 + self.e2 - self.e1
        self.assertEqual(total, self.e2)
        self.assertEqual(3 * self.e1, self.e1.scale(3))
        self.assertEqual(self.e1.scale(0), ExtElement())

    def test_relabel(self):
        """Test relabelling generators."""
        self.assertEqual((self.e1 * self.e2).relabel({0: 1, 1: 0}), -(self.e1 * self.e2))

    def test_dense_round_trip(self):
        """Test converting elements to and from dense coordinates."""
        words = list(words_of_length(3, 2))
        element = ExtElement({(0, 1): 2, (1, 2): -1})
        self.assertEqual(ExtElement.from_coordinates(words, element.dense(words)), element)


class TestBrackets(unittest.TestCase):
    """Test cases for the boundary operator and bracket identity."""

    def test_boundary_of_triple(self):
        """Test the boundary of a three-element word."""
        self.assertEqual(bracket((0, 1, 2)), ExtElement({(1, 2): -1, (0, 2): 1, (0, 1): -1}))

    def test_boundary_squares_to_zero(self):
        """Test that the boundary squares to zero."""
        for length in range(1, 5):
            for word in words_of_length(4, length):
                self.assertFalse(bracket(word).boundary(), word)

    def test_identity_for_pairs(self):
        """[e2, e3] telescopes through e1."""
        self.assertEqual(bracket_through(0, (1, 2)), bracket((1, 2)))
        self.assertTrue(verify_bracket_identity((1, 2)))

    def test_identity_for_longer_sets(self):
        """Test the bracket identity on longer index sets."""
        for indices in ((1, 2, 3), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4)):
            self.assertTrue(verify_bracket_identity(indices))

    def test_invalid_index_sets(self):
        """Test rejecting invalid bracket index sets."""
        for indices in ((1,), (2, 1), (0, 1)):
            with self.assertRaises(ValueError):
                verify_bracket_identity(indices)


if __name__ == '__main__':
    unittest.main()
