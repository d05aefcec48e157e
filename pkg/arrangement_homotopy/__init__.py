"""
Rational homotopy of complements of complex subspace arrangements.
This package decides whether a complement is rationally elliptic or
hyperbolic and computes the supporting algebraic evidence exactly.
"""
from .arrangement import Arrangement, Subspace, normalize
from .arrangement_file import dump_arrangement, load_arrangement, loads_arrangement
from .cohomology import Classification, CohomologyRing, HyperbolicCase, Verdict
from .config import Settings
from .dga import RelativeAtomicAlgebra
from .errors import (ArrangementError, ArrangementParseError, ConfigurationError, HypothesisError,
                     InvariantError, NonGeometricLatticeError, ResourceLimitError)
from .free_lie import free_lie_ranks
from .lattice import IntersectionLattice, build_lattice, is_geometric
from .pipeline import AnalysisResult, ArrangementAnalyzer
from .sullivan import GradedAlgebraPresentation, minimal_model

__all__ = [
    'Arrangement', 'Subspace', 'normalize',
    'dump_arrangement', 'load_arrangement', 'loads_arrangement',
    'Classification', 'CohomologyRing', 'HyperbolicCase', 'Verdict',
    'Settings', 'RelativeAtomicAlgebra',
    'ArrangementError', 'ArrangementParseError', 'ConfigurationError', 'HypothesisError',
    'InvariantError', 'NonGeometricLatticeError', 'ResourceLimitError',
    'free_lie_ranks', 'IntersectionLattice', 'build_lattice', 'is_geometric',
    'AnalysisResult', 'ArrangementAnalyzer', 'GradedAlgebraPresentation', 'minimal_model',
]
