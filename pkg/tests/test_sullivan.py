"""
Unit tests for minimal models and growth certificates.
"""
import unittest
from fractions import Fraction

from arrangement_homotopy.cohomology import HyperbolicCase
from arrangement_homotopy.errors import HypothesisError, InvariantError, ResourceLimitError
from arrangement_homotopy.sullivan import (GradedAlgebraPresentation, certify_hyperbolic_growth,
                                           homotopy_ranks_of_arrangement, minimal_model, verify_minimal_model)
from arrangement_homotopy.witness import WitnessReport, build_case_a

from .helpers import corpus_phi, corpus_ring


class TestGradedAlgebraPresentation(unittest.TestCase):
    """Test cases for algebra inputs to the model builder."""

    def test_exterior(self):
        """Test the exterior algebra presentation."""
        algebra = GradedAlgebraPresentation.exterior((3, 5))
        self.assertEqual({k: algebra.dimension(k) for k in (0, 3, 5, 8)}, {0: 1, 3: 1, 5: 1, 8: 1})
        self.assertEqual(algebra.multiply(5, (1,), 3, (1,)), (Fraction(-1),))
        algebra.validate()

    def test_truncated_polynomial(self):
        """Test the truncated polynomial presentation."""
        algebra = GradedAlgebraPresentation.truncated_polynomial(2, 3)
        self.assertEqual(algebra.top_degree, 4)
        self.assertEqual(algebra.multiply(2, (1,), 2, (1,)), (Fraction(1),))
        self.assertEqual(algebra.multiply(2, (1,), 4, (1,)), ())

    def test_hypotheses(self):
        """Test rejecting invalid presentations."""
        with self.assertRaises(HypothesisError):
            GradedAlgebraPresentation({0: ("1",), 1: ("a",)})
        with self.assertRaises(HypothesisError):
            GradedAlgebraPresentation({3: ("a",)})
        with self.assertRaises(ValueError):
            GradedAlgebraPresentation.exterior((2,))

    def test_validate_rejects_non_commutative_table(self):
        """Test rejecting a product table that is not graded commutative."""
        algebra = GradedAlgebraPresentation({0: ("1",), 3: ("a", "b"), 6: ("ab",)},
                                            {(3, 0, 3, 1): (Fraction(1),)})
        with self.assertRaises(ValueError):
            algebra.validate()
        with self.assertRaises(ValueError):
            minimal_model(algebra, 6)


class TestMinimalModel(unittest.TestCase):
    """Test cases for degree-bounded minimal models."""

    def test_odd_sphere(self):
        """Test the minimal model of an odd sphere."""
        model = minimal_model(GradedAlgebraPresentation.exterior((3,)), 8)
        self.assertEqual(model.homotopy_ranks, {3: 1})

    def test_even_sphere(self):
        """S^4 has rational homotopy in degrees 4 and 7."""
        model = minimal_model(GradedAlgebraPresentation.truncated_polynomial(4, 2), 10)
        self.assertEqual(model.homotopy_ranks, {4: 1, 7: 1})
        name, degree, differential = model.generators[1]
        self.assertEqual((name, degree, differential), ("v7_1", 7, "v4_1^2"))

    def test_wedge_of_three_spheres(self):
        """Ranks follow the Witt numbers on two generators."""
        model = minimal_model(GradedAlgebraPresentation.wedge_of_spheres((3, 3)), 11)
        self.assertEqual(model.homotopy_ranks, {3: 2, 5: 1, 7: 2, 9: 3, 11: 6})
        self.assertEqual(model.loop_ranks, {2: 2, 4: 1, 6: 2, 8: 3, 10: 6})

    def test_product_of_spheres(self):
        """Test the minimal model of a product of spheres."""
        model = minimal_model(GradedAlgebraPresentation.exterior((3, 5)), 10)
        self.assertEqual(model.homotopy_ranks, {3: 1, 5: 1})

    def test_two_axes_in_three_space(self):
        """Test homotopy ranks of two axes in three-space."""
        ring = corpus_ring("two_share_line")
        model = homotopy_ranks_of_arrangement(ring, 7)
        self.assertEqual(model.homotopy_ranks, {3: 2, 4: 1, 5: 1, 6: 2, 7: 3})

    def test_three_planes(self):
        """Test homotopy ranks of three planes in four-space."""
        ring = corpus_ring("case_b_three")
        model = homotopy_ranks_of_arrangement(ring, 9)
        self.assertEqual(model.homotopy_ranks, {3: 3, 5: 1, 7: 2, 9: 3})

    def test_generator_cap(self):
        """Test the generator cap."""
        with self.assertRaises(ResourceLimitError):
            minimal_model(GradedAlgebraPresentation.wedge_of_spheres((3, 3)), 11, generator_cap=3)

    def test_degree_bound(self):
        """Test rejecting a degree bound below two."""
        with self.assertRaises(ValueError):
            minimal_model(GradedAlgebraPresentation.exterior((3,)), 1)

    def test_verification_catches_linear_terms(self):
        """Test that verification rejects linear differentials."""
        model = minimal_model(GradedAlgebraPresentation.wedge_of_spheres((3, 3)), 5)
        model.differentials[2] = {((0, 1),): Fraction(1)}
        with self.assertRaises(InvariantError):
            verify_minimal_model(model)


class TestGrowthCertificate(unittest.TestCase):
    """Test cases for certify_hyperbolic_growth."""

    def setUp(self):
        """Set up the case A report for two coordinate axes in C^3."""
        self.report = build_case_a(corpus_ring("two_share_line"), corpus_phi("two_share_line")).report

    def test_case_a_lower_bound(self):
        """Test the case A free Lie lower bound."""
        ranks = homotopy_ranks_of_arrangement(corpus_ring("two_share_line"), 8).homotopy_ranks
        certificate = certify_hyperbolic_growth(self.report, ranks, 8)
        self.assertTrue(certificate.certified)
        self.assertEqual(certificate.rows[0], (1, 0, 0))
        self.assertEqual(certificate.rows[1], (2, 1, 2))

    def test_case_a_violation(self):
        """Test a violated case A lower bound."""
        with self.assertRaises(InvariantError):
            certify_hyperbolic_growth(self.report, {3: 2}, 6)

    def test_case_b_window(self):
        """Test the case B growth window."""
        report = WitnessReport(HyperbolicCase.B, ("x1", "x2", "x3"))
        ranks = {3: 3, 5: 1, 7: 2, 9: 3}
        certificate = certify_hyperbolic_growth(report, ranks, 10)
        self.assertTrue(certificate.certified)
        self.assertEqual(certificate.rows, ((2, 5, 4), (5, 10, 6)))

    def test_case_b_inconclusive(self):
        """Test an inconclusive case B window."""
        report = WitnessReport(HyperbolicCase.B, ("x1", "x2", "x3"))
        certificate = certify_hyperbolic_growth(report, {3: 5}, 6)
        self.assertEqual(certificate.status, "inconclusive")
        self.assertFalse(certificate.certified)

    def test_elliptic_has_no_certificate(self):
        """Test that elliptic input has no certificate."""
        with self.assertRaises(ValueError):
            certify_hyperbolic_growth(None, {3: 1}, 6)


if __name__ == '__main__':
    unittest.main()
