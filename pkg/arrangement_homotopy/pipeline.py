"""
ArrangementAnalyzer runs the full analysis of one arrangement.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Union

from .arrangement import Arrangement, normalize
from .cohomology import (Classification, CohomologyRing, LemmaCheck, PhiAnalysis, analyze_phi,
                         check_exterior_iso, check_lemma_diff, classify, compute_cohomology)
from .config import Settings
from .dga import RelativeAtomicAlgebra
from .errors import InvariantError, NonGeometricLatticeError
from .lattice import GeometricCheck, IntersectionLattice, build_lattice, is_geometric
from .sullivan import GrowthCertificate, MinimalModelFragment, certify_hyperbolic_growth, homotopy_ranks_of_arrangement
from .witness import CaseAWitness, CaseBWitness, build_case_a, build_case_b

logger = logging.getLogger(__name__)


@dataclass
class AnalysisResult:
    """Everything computed for one arrangement."""
    arrangement: Arrangement
    warnings: List[str]
    lattice: IntersectionLattice
    geometric: GeometricCheck
    algebra: RelativeAtomicAlgebra
    cohomology: CohomologyRing
    phi: PhiAnalysis
    lemma: LemmaCheck
    classification: Classification
    max_degree: int
    model: MinimalModelFragment
    witness: Optional[Union[CaseAWitness, CaseBWitness]] = None
    certificate: Optional[GrowthCertificate] = None
    exterior_iso: Optional[bool] = None


class ArrangementAnalyzer:
    """
    Decides rational ellipticity or hyperbolicity of an arrangement complement
    and gathers the supporting evidence.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()

    def analyze(self, arrangement: Arrangement, max_degree: Optional[int] = None) -> AnalysisResult:
        """
        Run normalize → lattice → cohomology → φ → classification → witness →
        minimal model → certificate.

        Args:
            arrangement (Arrangement): raw arrangement as read from a file
            max_degree (Optional[int]): degree bound N, defaults to the configured one

        Returns:
            AnalysisResult: all intermediate objects

        Raises:
            HypothesisError: If the arrangement violates a standing hypothesis
            InvariantError: If an internal consistency check fails
        """
        max_degree = max_degree if max_degree is not None else self.settings.max_degree
        if max_degree < 2:
            raise ValueError(f"Degree bound must be at least 2, got {max_degree}")

        normalized, warnings = normalize(arrangement)
        lattice = build_lattice(normalized, self.settings.max_atoms)
        geometric = is_geometric(lattice)
        if not geometric:
            pair = tuple(lattice.label(e) for e in geometric.witness)
            raise NonGeometricLatticeError(f"Intersection lattice is {geometric.reason}: {geometric.message}", pair)

        algebra = RelativeAtomicAlgebra(lattice)
        ring = compute_cohomology(algebra)
        phi = analyze_phi(ring)
        lemma = check_lemma_diff(ring, phi)
        if not lemma:
            raise InvariantError(f"Low-size subsets fail the cycle and independence check: {lemma.message}")
        classification = classify(ring, phi)

        witness = None
        exterior_iso = None
        if classification.is_elliptic:
            exterior_iso = check_exterior_iso(ring, classification)
        elif phi.has_monomial_witness:
            witness = build_case_a(ring, phi)
        else:
            witness = build_case_b(ring, phi)

        model = homotopy_ranks_of_arrangement(ring, max_degree, self.settings.generator_cap)
        certificate = None
        if witness is not None:
            certificate = certify_hyperbolic_growth(witness.report, model.homotopy_ranks, max_degree)
            if not certificate.certified:
                warnings = tuple(warnings) + (f"Growth certificate inconclusive: {certificate.message}",)
        else:
            expected = dict(sorted(Counter(d for d in classification.sphere_dimensions if d <= max_degree).items()))
            if model.homotopy_ranks != expected:
                raise InvariantError(f"Elliptic model has generators {model.homotopy_ranks}, expected {expected}")

        logger.info(f"Analysis complete: {classification.describe()}")
        return AnalysisResult(
            arrangement=normalized,
            warnings=list(warnings),
            lattice=lattice,
            geometric=geometric,
            algebra=algebra,
            cohomology=ring,
            phi=phi,
            lemma=lemma,
            classification=classification,
            max_degree=max_degree,
            model=model,
            witness=witness,
            certificate=certificate,
            exterior_iso=exterior_iso,
        )
