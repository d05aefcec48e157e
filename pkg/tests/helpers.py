"""
Shared fixtures: corpus arrangements and the objects built from them.
"""
from functools import lru_cache
from pathlib import Path

from arrangement_homotopy.arrangement import normalize
from arrangement_homotopy.arrangement_file import load_arrangement
from arrangement_homotopy.cohomology import analyze_phi, compute_cohomology
from arrangement_homotopy.dga import RelativeAtomicAlgebra
from arrangement_homotopy.lattice import build_lattice

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"
FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


def corpus_path(name: str) -> Path:
    """Bundled corpus file, falling back to the test-only fixtures."""
    path = CORPUS_DIR / f"{name}.json"
    return path if path.exists() else FIXTURES_DIR / f"{name}.json"


def corpus_arrangement(name: str):
    return normalize(load_arrangement(corpus_path(name))).arrangement


@lru_cache(maxsize=None)
def corpus_lattice(name: str):
    return build_lattice(corpus_arrangement(name))


@lru_cache(maxsize=None)
def corpus_algebra(name: str) -> RelativeAtomicAlgebra:
    return RelativeAtomicAlgebra(corpus_lattice(name))


@lru_cache(maxsize=None)
def corpus_ring(name: str):
    return compute_cohomology(corpus_algebra(name))


@lru_cache(maxsize=None)
def corpus_phi(name: str):
    return analyze_phi(corpus_ring(name))
