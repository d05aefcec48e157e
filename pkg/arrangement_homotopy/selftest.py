"""
Self-test runner: exact identity checks over the bundled corpus.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Union

import pandas as pd

from .arrangement import normalize
from .arrangement_file import load_arrangement
from .cohomology import analyze_phi, check_exterior_iso, check_lemma_diff, classify, compute_cohomology
from .config import Settings
from .dga import RelativeAtomicAlgebra
from .errors import ArrangementError
from .invariants import (check_associativity, check_d_squared, check_degree_shift, check_graded_commutativity,
                         check_independent_generation, check_leibniz, check_low_degrees, check_phi_multiplicative)
from .lattice import IntersectionLattice, build_lattice, is_geometric
from .sullivan import GradedAlgebraPresentation, homotopy_ranks_of_arrangement, minimal_model
from .witness import build_case_a, build_case_b

logger = logging.getLogger(__name__)

AlgebraFactory = Callable[[IntersectionLattice], RelativeAtomicAlgebra]

WEDGE_OF_THREE_SPHERES = {3: 2, 5: 1, 7: 2, 9: 3, 11: 6}


@dataclass
class CheckResult:
    source: str
    check: str
    passed: bool
    detail: str = ""


@dataclass
class SelfTestSummary:
    max_degree: int
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def record(self, source: str, check: str, passed: bool, detail: str = "") -> bool:
        self.results.append(CheckResult(source, check, passed, detail))
        if not passed:
            logger.error(f"{source}: {check} failed: {detail}")
        return passed

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"source": r.source, "check": r.check, "result": "pass" if r.passed else "FAIL", "detail": r.detail}
             for r in self.results],
            columns=["source", "check", "result", "detail"],
        )

    def to_text(self) -> str:
        status = "all checks passed" if self.passed else f"{len(self.failures)} check(s) failed"
        return f"{self.to_frame().to_string(index=False)}\n\nSelf-test through degree {self.max_degree}: {status}\n"


def _check_file(path: Path, max_degree: int, factory: AlgebraFactory, settings: Settings,
                summary: SelfTestSummary) -> None:
    source = path.stem
    normalized, _ = normalize(load_arrangement(path))
    lattice = build_lattice(normalized, settings.max_atoms)
    geometric = is_geometric(lattice)
    if not geometric:
        summary.record(source, "lattice hypothesis", True, f"rejected as expected: {geometric.message}")
        return
    algebra = factory(lattice)

    def label(found) -> str:
        if found and isinstance(found[0], tuple):
            return ", ".join(algebra.label(s) for s in found)
        return algebra.label(found)

    bad = check_d_squared(algebra)
    if not summary.record(source, "d^2 = 0", bad is None, "" if bad is None else f"d^2 {label(bad)} != 0"):
        return
    for name, check in (("degree shift", check_degree_shift), ("Leibniz", check_leibniz),
                        ("graded commutativity", check_graded_commutativity), ("associativity", check_associativity)):
        bad = check(algebra)
        summary.record(source, name, bad is None, "" if bad is None else f"fails on {label(bad)}")

    ring = compute_cohomology(algebra)
    bad_degree = check_low_degrees(ring)
    summary.record(source, "H^0 = Q, H^1 = H^2 = 0", bad_degree is None,
                   "" if bad_degree is None else f"degree {bad_degree}")
    bad_degree = check_independent_generation(ring)
    summary.record(source, "independent sets generate", bad_degree is None,
                   "" if bad_degree is None else f"degree {bad_degree}")
    bad_words = check_phi_multiplicative(ring)
    summary.record(source, "phi multiplicative", bad_words is None,
                   "" if bad_words is None else " * ".join(algebra.monomial_label(w) for w in bad_words))

    phi = analyze_phi(ring)
    lemma = check_lemma_diff(ring, phi)
    summary.record(source, "small subsets are independent cycles", bool(lemma), lemma.message)
    classification = classify(ring, phi)
    try:
        if classification.is_elliptic:
            check_exterior_iso(ring, classification)
            summary.record(source, "exterior isomorphism", True, classification.describe())
        else:
            builder = build_case_a if phi.has_monomial_witness else build_case_b
            builder(ring, phi)
            summary.record(source, "witness retraction", True, classification.describe())
        model = homotopy_ranks_of_arrangement(ring, max_degree, settings.generator_cap)
        summary.record(source, "minimal model quasi-isomorphism", True, f"ranks {model.homotopy_ranks}")
    except ArrangementError as e:
        summary.record(source, "witness and model", False, str(e))


def run_selftest(corpus_dir: Union[str, Path], max_degree: int,
                 algebra_factory: Optional[AlgebraFactory] = None,
                 settings: Optional[Settings] = None) -> SelfTestSummary:
    """
    Run every identity check over the *.json files in a corpus directory.

    Args:
        corpus_dir: directory of arrangement files
        max_degree (int): degree bound for minimal models
        algebra_factory: builds the algebra from a lattice; defaults to
            RelativeAtomicAlgebra (tests substitute a broken subclass)
        settings (Settings): size guards (atom count, generator cap); defaults
            to Settings()

    Returns:
        SelfTestSummary: one row per check
    """
    factory = algebra_factory or RelativeAtomicAlgebra
    settings = settings or Settings()
    summary = SelfTestSummary(max_degree)
    paths = sorted(Path(corpus_dir).glob("*.json"))
    if not paths:
        summary.record(str(corpus_dir), "corpus present", False, "no arrangement files found")
    for path in paths:
        logger.info(f"Self-test on {path.name}")
        try:
            _check_file(path, max_degree, factory, settings, summary)
        except ArrangementError as e:
            summary.record(path.stem, "analysis", False, str(e))

    bound = min(max_degree, 11)
    try:
        ranks = minimal_model(GradedAlgebraPresentation.wedge_of_spheres((3, 3)), bound,
                              settings.generator_cap).homotopy_ranks
        expected = {k: v for k, v in WEDGE_OF_THREE_SPHERES.items() if k <= bound}
        summary.record("S3 v S3", "Witt numbers", ranks == expected, f"ranks {ranks}")
    except ArrangementError as e:
        summary.record("S3 v S3", "Witt numbers", False, str(e))
    return summary
