"""
Test package for the arrangement homotopy toolkit.
This package contains test modules for the exact linear algebra, the
intersection lattice, the relative atomic algebra, the classification
pipeline and the reporting layer.
"""

from .test_arrangement import TestSubspace, TestNormalize
from .test_arrangement_file import TestRationals, TestArrangementFile
from .test_cli import TestCli
from .test_cohomology import TestCohomologyRing, TestPhiAnalysis, TestClassification
from .test_config import TestSettings
from .test_dga import TestCochain, TestRelativeAtomicAlgebra
from .test_documentation_generator import TestLatticeDiagram, TestDocumentationGenerator
from .test_exactla import TestQMat, TestRowReduction, TestEchelon, TestCosetRepresentatives
from .test_exterior import TestWords, TestExtElement, TestBrackets
from .test_free_lie import TestFreeLieRanks
from .test_graded_poly import TestGradedPolynomialRing
from .test_invariants import TestAlgebraIdentities, TestCohomologyIdentities
from .test_lattice import TestLatticeStructure, TestGeometricCheck
from .test_pipeline import TestArrangementAnalyzer
from .test_report import TestBuildReport, TestSerialization
from .test_report_exporter import TestReportExporter
from .test_selftest import TestSelfTest
from .test_sullivan import TestGradedAlgebraPresentation, TestMinimalModel, TestGrowthCertificate
from .test_witness import TestTruncatedExterior, TestCaseA, TestCaseB, TestCaseBFourPlanes

__all__ = [
    'TestSubspace', 'TestNormalize', 'TestRationals', 'TestArrangementFile', 'TestCli',
    'TestCohomologyRing', 'TestPhiAnalysis', 'TestClassification', 'TestSettings',
    'TestCochain', 'TestRelativeAtomicAlgebra', 'TestLatticeDiagram', 'TestDocumentationGenerator',
    'TestQMat', 'TestRowReduction', 'TestEchelon', 'TestCosetRepresentatives',
    'TestWords', 'TestExtElement', 'TestBrackets', 'TestFreeLieRanks', 'TestGradedPolynomialRing',
    'TestAlgebraIdentities', 'TestCohomologyIdentities', 'TestLatticeStructure', 'TestGeometricCheck',
    'TestArrangementAnalyzer', 'TestBuildReport', 'TestSerialization', 'TestReportExporter',
    'TestSelfTest', 'TestGradedAlgebraPresentation', 'TestMinimalModel', 'TestGrowthCertificate',
    'TestTruncatedExterior', 'TestCaseA', 'TestCaseB', 'TestCaseBFourPlanes',
]
