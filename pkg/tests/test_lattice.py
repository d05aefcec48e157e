"""
Unit tests for the intersection lattice.
"""
import unittest
from itertools import combinations, permutations

from arrangement_homotopy.arrangement import Arrangement, Subspace
from arrangement_homotopy.errors import ResourceLimitError
from arrangement_homotopy.lattice import (build_lattice, element_summary, is_geometric,
                                          is_independent, mask_members, rank_of_subset, subset_mask)

from .helpers import corpus_arrangement, corpus_lattice


def element_table(lattice):
    """Canonical forms with rank and codimension, independent of enumeration order."""
    return sorted((element.canonical, lattice.rank(i), lattice.codim(i)) for i, element in enumerate(lattice.elements))


class TestLatticeStructure(unittest.TestCase):
    """Test cases for build_lattice on the corpus."""

    def test_masks(self):
        """Test converting subsets to bitmasks."""
        self.assertEqual(subset_mask((0, 2)), 5)
        self.assertEqual(mask_members(5), (0, 2))
        self.assertEqual(mask_members(0), ())

    def test_three_planes_meeting_at_origin(self):
        """Test the lattice of three planes meeting at the origin."""
        lattice = corpus_lattice("case_b_three")
        self.assertEqual(len(lattice), 5)
        self.assertEqual(lattice.rank(lattice.top), 2)
        self.assertEqual(lattice.codim(lattice.top), 4)
        self.assertEqual(lattice.label(lattice.top), "x1∨x2∨x3")
        self.assertEqual(lattice.label(lattice.bottom), "C^4")
        # every pair of atoms already joins to the origin
        for a in range(3):
            for b in range(a + 1, 3):
                self.assertEqual(lattice.join_of((a, b)), lattice.top)

    def test_boolean_lattice(self):
        """Test the boolean lattice of three generic planes."""
        lattice = corpus_lattice("boolean_three")
        self.assertEqual(len(lattice), 8)
        self.assertEqual([lattice.rank(e) for e in range(8)], [0, 1, 1, 1, 2, 2, 2, 3])
        self.assertEqual([lattice.codim(e) for e in range(8)], [0, 2, 2, 2, 4, 4, 4, 6])

    def test_join_meet_and_order(self):
        """Test join, meet and the lattice order."""
        lattice = corpus_lattice("boolean_three")
        x1, x2 = lattice.atom_element(0), lattice.atom_element(1)
        x12 = lattice.join(x1, x2)
        self.assertEqual(lattice.atoms_below(x12), (0, 1))
        self.assertEqual(lattice.meet(x1, x2), lattice.bottom)
        self.assertEqual(lattice.meet(x12, lattice.top), x12)
        self.assertTrue(lattice.leq(x1, x12))
        self.assertFalse(lattice.leq(x12, x1))

    def test_covers(self):
        """Test the covering relations."""
        lattice = corpus_lattice("two_share_line")
        self.assertEqual(lattice.covers(), [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_atom_guard(self):
        """Test the limit on the number of atoms."""
        with self.assertRaises(ResourceLimitError):
            build_lattice(corpus_arrangement("boolean_three"), max_atoms=2)

    def test_element_summary(self):
        """Test the plain-data summary of an element."""
        lattice = corpus_lattice("case_b_three")
        summary = element_summary(lattice, lattice.top)
        self.assertEqual(summary["atoms"], ["x1", "x2", "x3"])
        self.assertEqual(summary["rank"], 2)
        self.assertEqual(summary["equations"][0], ["1", "0", "0", "0"])
        origin = Subspace.from_equations([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 4)
        self.assertEqual(lattice.elements[lattice.top], origin)

    def test_independence(self):
        """Test independent sets of atoms."""
        lattice = corpus_lattice("case_b_three")
        self.assertTrue(is_independent(lattice, (0, 1)))
        self.assertFalse(is_independent(lattice, (0, 1, 2)))
        self.assertEqual(rank_of_subset(lattice, (0, 1, 2)), 2)

    def test_independent_of_atom_order(self):
        """Test that every ordering of the atoms gives the same elements, ranks and codimensions."""
        for name in ("case_b_three", "two_share_line", "non_geometric"):
            arrangement = corpus_arrangement(name)
            reference = element_table(corpus_lattice(name))
            for order in permutations(arrangement.atoms):
                permuted = build_lattice(Arrangement(arrangement.ambient_dim, order))
                self.assertEqual(element_table(permuted), reference, (name, [a.name for a in order]))

    def test_codimension_is_subadditive(self):
        """Test codim of a join never exceeds the summed codimensions of its atoms."""
        for name in ("generic_two", "two_share_line", "case_b_three", "boolean_three", "non_geometric"):
            lattice = corpus_lattice(name)
            atom_codims = [lattice.codim(lattice.atom_element(i)) for i in range(lattice.n_atoms)]
            for size in range(1, lattice.n_atoms + 1):
                for sigma in combinations(range(lattice.n_atoms), size):
                    self.assertLessEqual(lattice.codim(lattice.join_of(sigma)),
                                         sum(atom_codims[i] for i in sigma), (name, sigma))


class TestGeometricCheck(unittest.TestCase):
    """Test cases for is_geometric."""

    def test_corpus_lattices_are_geometric(self):
        """Test that the corpus lattices are geometric."""
        for name in ("one_subspace", "generic_two", "two_share_line", "case_b_three", "boolean_three"):
            check = is_geometric(corpus_lattice(name))
            self.assertTrue(check, name)
            self.assertEqual(check.reason, "ok")

    def test_chain_of_planes_is_not_semimodular(self):
        """The first violation is the pair (x1, x3): their join has rank 3."""
        lattice = corpus_lattice("non_geometric")
        check = is_geometric(lattice)
        self.assertFalse(check)
        self.assertEqual(check.reason, "not semimodular")
        self.assertEqual(tuple(lattice.label(e) for e in check.witness), ("x1", "x3"))
        self.assertEqual(lattice.rank(lattice.join(*check.witness)), 3)
        self.assertIn("(x1, x3)", check.message)


if __name__ == '__main__':
    unittest.main()
