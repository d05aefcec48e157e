"""
Cohomology of (D_A, d), the map φ: Λ(e_1..e_n) → H*, the invariant r and
the elliptic/hyperbolic classification.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import sympy

from .dga import Cochain, RelativeAtomicAlgebra, SubsetGen
from .errors import InvariantError
from .exactla import CosetProjection, QMat, Vector, column_space_basis, coset_representatives, kernel_basis
from .exterior import ExtElement, Word, words_of_length
from .lattice import is_independent

logger = logging.getLogger(__name__)

ClassCoords = Dict[int, Vector]


class DegreeCohomology(NamedTuple):
    """H^k with the data needed to compute in it."""
    degree: int
    cycles: Tuple[Vector, ...]
    boundaries: Tuple[Dict[int, Fraction], ...]
    representatives: Tuple[Vector, ...]
    projection: CosetProjection


class CohomologyRing:
    """
    H*(D_A, d) with a deterministic basis in every degree.

    Classes are handled as coordinate tuples against the chosen basis of
    their degree; products are computed on representative cycles and
    projected back.
    """

    def __init__(self, algebra: RelativeAtomicAlgebra):
        self.algebra = algebra
        self.components: Dict[int, DegreeCohomology] = {}
        for k in algebra.degrees:
            self.components[k] = self._compute_degree(k)
        self.betti: Dict[int, int] = {k: len(c.representatives)
                                      for k, c in self.components.items() if c.representatives}
        self.atom_classes: Tuple[Tuple[int, Vector], ...] = tuple(
            self.class_of(algebra.generator((i,))) for i in range(algebra.n))
        logger.info(f"Betti numbers: {self.betti}")

    def _compute_degree(self, k: int) -> DegreeCohomology:
        dim = self.algebra.dimension(k)
        cycles = kernel_basis(self.algebra.differential_matrix(k))
        incoming = self.algebra.differential_matrix(k - 1)
        boundaries = column_space_basis(incoming) if incoming.cols else []
        try:
            chosen, projection = coset_representatives(dim, boundaries, cycles)
        except ValueError as e:
            raise InvariantError(f"Boundaries in degree {k} are not cycles: {e}")
        logger.debug(f"Degree {k}: {dim} cochains, {len(cycles)} cycles, {len(boundaries)} boundaries")
        return DegreeCohomology(k, tuple(cycles), tuple(boundaries), tuple(chosen), projection)

    @property
    def top_degree(self) -> int:
        return max(self.betti)

    def dimension(self, k: int) -> int:
        return self.betti.get(k, 0)

    def class_of(self, c: Cochain) -> Tuple[int, Vector]:
        """
        Coordinates of the class of a cycle.

        Raises:
            ValueError: If the cochain is not a cycle
        """
        component = self.components.get(c.degree)
        if component is None:
            if c:
                raise ValueError(f"No cochains in degree {c.degree}")
            return c.degree, ()
        return c.degree, component.projection(self.algebra.to_vector(c))

    def representative(self, degree: int, coordinates: Sequence) -> Cochain:
        """A cycle representing the class with the given coordinates."""
        component = self.components.get(degree)
        total = self.algebra.zero(degree)
        if component is None:
            return total
        for value, rep in zip(coordinates, component.representatives):
            if value:
                total = total + self.algebra.from_vector(degree, rep).scale(value)
        return total

    def basis_class(self, degree: int, index: int) -> Vector:
        dim = self.dimension(degree)
        return tuple(Fraction(1 if i == index else 0) for i in range(dim))

    def multiply(self, p: int, u: Sequence, q: int, v: Sequence) -> Vector:
        """Product of a class in H^p and a class in H^q, as coordinates in H^{p+q}."""
        product = self.algebra.product(self.representative(p, u), self.representative(q, v))
        return self.class_of(product)[1] if (p + q) in self.components else ()

    def product_on_classes(self) -> Dict[Tuple[Tuple[int, int], Tuple[int, int]], Vector]:
        """Nonzero products of positive-degree basis classes, keyed by ((p, i), (q, j))."""
        table = {}
        degrees = [k for k in sorted(self.betti) if k > 0]
        for p in degrees:
            for q in degrees:
                if p + q not in self.betti:
                    continue
                for i in range(self.betti[p]):
                    for j in range(self.betti[q]):
                        coords = self.multiply(p, self.basis_class(p, i), q, self.basis_class(q, j))
                        if any(coords):
                            table[((p, i), (q, j))] = coords
        return table

    def class_label(self, degree: int, index: int) -> str:
        """Label of a basis class by the cochain representing it."""
        rep = self.algebra.from_vector(degree, self.components[degree].representatives[index])
        return "[" + rep.to_string(self.algebra.atom_names) + "]"

    def monomial_degree(self, word: Word) -> int:
        """Cohomological degree Σ (2·codim(x_i) − 1) of e_word."""
        return sum(self.algebra.degree((i,)) for i in word)

    def phi_monomial(self, word: Sequence[int]) -> Tuple[int, Vector]:
        """φ(e_{i1}...e_{is}) = [{x_i1}]·...·[{x_is}] as (degree, coordinates)."""
        product = self.algebra.generator(())
        for i in word:
            product = self.algebra.product(product, self.algebra.generator((i,)))
        degree = sum(self.algebra.degree((i,)) for i in word)
        if not product:
            return degree, tuple(Fraction(0) for _ in range(self.dimension(degree)))
        return self.class_of(product)

    def phi(self, e: ExtElement) -> ClassCoords:
        """
        φ extended linearly.

        Returns:
            Dict[int, Vector]: coordinates of the image in each cohomological degree
        """
        images: Dict[int, List[Fraction]] = {}
        for word, value in e.terms.items():
            degree, coords = self.phi_monomial(word)
            target = images.setdefault(degree, [Fraction(0)] * len(coords))
            for i, c in enumerate(coords):
                target[i] += value * c
        return {k: tuple(v) for k, v in images.items()}


def compute_cohomology(algebra: RelativeAtomicAlgebra) -> CohomologyRing:
    return CohomologyRing(algebra)


@dataclass(frozen=True)
class PhiAnalysis:
    """
    Kernel of φ, word length by word length.

    Attributes:
        n (int): atom count
        kernel_by_wordlength (Dict[int, Tuple[ExtElement, ...]]): kernel bases
        r (Optional[int]): smallest word length with nonzero kernel, None if φ is injective
        monomial_witness (Optional[Word]): first monomial of length r in the kernel
    """
    n: int
    kernel_by_wordlength: Dict[int, Tuple[ExtElement, ...]] = field(default_factory=dict)
    r: Optional[int] = None
    monomial_witness: Optional[Word] = None

    __hash__ = None

    @property
    def is_injective(self) -> bool:
        return self.r is None

    @property
    def has_monomial_witness(self) -> bool:
        return self.monomial_witness is not None


def analyze_phi(ring: CohomologyRing) -> PhiAnalysis:
    """
    Compute ker φ ∩ Λ^s for every s and the invariant r.

    Products of atom classes are ±[σ] or 0 and d preserves |σ| up to one,
    so φ maps different word lengths into independent pieces and the
    kernel splits by word length.
    """
    n = ring.algebra.n
    kernels: Dict[int, Tuple[ExtElement, ...]] = {}
    r = None
    witness = None
    for s in range(1, n + 1):
        words = list(words_of_length(n, s))
        images = [ring.phi_monomial(w) for w in words]
        offsets: Dict[int, int] = {}
        rows = 0
        for degree in sorted({d for d, _ in images}):
            offsets[degree] = rows
            rows += ring.dimension(degree)
        entries = {}
        for col, (degree, coords) in enumerate(images):
            for i, value in enumerate(coords):
                if value:
                    entries[(offsets[degree] + i, col)] = value
        kernel = kernel_basis(QMat(rows, len(words), entries))
        kernels[s] = tuple(ExtElement.from_coordinates(words, v) for v in kernel)
        if kernel and r is None:
            r = s
            witness = next((w for w, (_, coords) in zip(words, images) if not any(coords)), None)
        logger.debug(f"Word length {s}: {len(words)} monomials, kernel dimension {len(kernel)}")
    logger.info(f"Kernel of phi: r = {r}, monomial witness = {witness}")
    return PhiAnalysis(n, kernels, r, witness)


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of :func:`check_lemma_diff`; ``violation`` is the first failing subset."""
    passed: bool
    checked: int
    violation: Optional[SubsetGen] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed


def check_lemma_diff(ring: CohomologyRing, analysis: PhiAnalysis) -> LemmaCheck:
    """
    Every σ with |σ| <= r is a cycle whose join has rank |σ|.

    Vacuous when φ is injective.
    """
    if analysis.r is None:
        return LemmaCheck(True, 0, None, "phi is injective; nothing to check")
    algebra = ring.algebra
    checked = 0
    for size in range(1, analysis.r + 1):
        for sigma in words_of_length(algebra.n, size):
            checked += 1
            if algebra.differential_of_subset(sigma):
                return LemmaCheck(False, checked, sigma, f"d{algebra.label(sigma)} is not zero")
            if not is_independent(algebra.lattice, sigma):
                return LemmaCheck(False, checked, sigma, f"{algebra.label(sigma)} is not independent")
    return LemmaCheck(True, checked, None, f"all {checked} subsets of size <= {analysis.r} pass")


class Verdict(Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


class HyperbolicCase(Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Classification:
    """
    Rational homotopy type of the complement.

    Attributes:
        verdict (Verdict): elliptic or hyperbolic
        sphere_dimensions (Tuple[int, ...]): odd sphere dimensions when elliptic
        case (Optional[HyperbolicCase]): which witness applies when hyperbolic
        r (Optional[int]): the invariant r
        witness (Optional[Word]): monomial witness for case A
    """
    verdict: Verdict
    sphere_dimensions: Tuple[int, ...] = ()
    case: Optional[HyperbolicCase] = None
    r: Optional[int] = None
    witness: Optional[Word] = None

    @property
    def is_elliptic(self) -> bool:
        return self.verdict is Verdict.ELLIPTIC

    def describe(self) -> str:
        if self.is_elliptic:
            return "Elliptic, product of spheres " + "x".join(f"S^{d}" for d in self.sphere_dimensions)
        text = f"Hyperbolic, case {self.case.value}, r = {self.r}"
        if self.witness is not None:
            text += f", witness {ExtElement.monomial(self.witness)}"
        return text


def classify(ring: CohomologyRing, analysis: PhiAnalysis) -> Classification:
    """Elliptic iff ker φ = 0; otherwise case A with a monomial witness, case B without."""
    if analysis.is_injective:
        spheres = tuple(sorted(ring.algebra.degree((i,)) for i in range(ring.algebra.n)))
        result = Classification(Verdict.ELLIPTIC, sphere_dimensions=spheres)
    elif analysis.has_monomial_witness:
        result = Classification(Verdict.HYPERBOLIC, case=HyperbolicCase.A, r=analysis.r,
                                witness=analysis.monomial_witness)
    else:
        result = Classification(Verdict.HYPERBOLIC, case=HyperbolicCase.B, r=analysis.r)
    logger.info(f"Classification: {result.describe()}")
    return result


def poincare_coefficients(sphere_dimensions: Sequence[int]) -> Dict[int, int]:
    """Nonzero coefficients of Π (1 + t^d)."""
    t = sympy.Symbol("t")
    polynomial = sympy.Poly(sympy.prod([1 + t ** d for d in sphere_dimensions]), t)
    return {int(monom[0]): int(coeff) for monom, coeff in polynomial.terms() if coeff}


def check_exterior_iso(ring: CohomologyRing, classification: Classification) -> bool:
    """
    Confirm H* is the free graded-commutative algebra on the atom classes.

    Raises:
        ValueError: If the verdict is not elliptic
        InvariantError: If the Betti numbers or independent products disagree
    """
    if not classification.is_elliptic:
        raise ValueError("The exterior algebra check applies to elliptic verdicts only")
    expected = poincare_coefficients(classification.sphere_dimensions)
    if expected != ring.betti:
        raise InvariantError(f"Betti numbers {ring.betti} differ from the product of spheres {expected}")
    lattice = ring.algebra.lattice
    for s in range(1, ring.algebra.n + 1):
        for word in words_of_length(ring.algebra.n, s):
            if is_independent(lattice, word) and not any(ring.phi_monomial(word)[1]):
                raise InvariantError(f"Product {ExtElement.monomial(word)} of independent classes vanishes")
    return True
