"""
Degree-bounded Sullivan minimal models of formal spaces.

The input is a finite-dimensional graded-commutative algebra H (the
cohomology of a formal space, zero differential). The model (ΛV, d) is built
degree by degree together with an algebra map φ: ΛV → H, and dim V^k is the
rank of π_k ⊗ Q.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cohomology import CohomologyRing, HyperbolicCase
from .errors import HypothesisError, InvariantError, ResourceLimitError
from .exactla import (Echelon, QMat, Vector, column_space_basis, coset_representatives,
                      kernel_basis, rank)
from .exterior import sort_word, words_of_length
from .free_lie import free_lie_ranks
from .graded_poly import GradedPolynomialRing, Monomial, Polynomial
from .witness import WitnessReport

logger = logging.getLogger(__name__)

DEFAULT_GENERATOR_CAP = 5000

ProductKey = Tuple[int, int, int, int]


@dataclass
class GradedAlgebraPresentation:
    """
    Finite-dimensional graded-commutative algebra with a unit in degree 0.

    Attributes:
        labels (Dict[int, Tuple[str, ...]]): basis labels by degree; degree 0 holds the unit
        products (Dict[ProductKey, Vector]): (p, i, q, j) -> coordinates of
            basis_p[i]·basis_q[j] in degree p+q, positive degrees only, zero products omitted
    """
    labels: Dict[int, Tuple[str, ...]]
    products: Dict[ProductKey, Vector] = field(default_factory=dict)

    def __post_init__(self):
        """Check shape, connectivity and simple connectivity."""
        self.labels = {k: tuple(v) for k, v in self.labels.items() if v}
        if len(self.labels.get(0, ())) != 1:
            raise HypothesisError("The algebra must be connected (one-dimensional in degree 0)")
        if self.labels.get(1):
            raise HypothesisError("The algebra must be simply connected (zero in degree 1)")
        if any(k < 0 for k in self.labels):
            raise HypothesisError("Negative degrees are not allowed")
        for (p, i, q, j), coords in self.products.items():
            if p <= 0 or q <= 0:
                raise ValueError("Structure constants are only given for positive degrees")
            if i >= self.dimension(p) or j >= self.dimension(q) or len(coords) != self.dimension(p + q):
                raise ValueError(f"Structure constant {(p, i, q, j)} does not fit the basis")

    def dimension(self, k: int) -> int:
        return len(self.labels.get(k, ()))

    @property
    def top_degree(self) -> int:
        return max(self.labels)

    def basis_vector(self, k: int, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dimension(k)))

    def unit(self) -> Vector:
        return (Fraction(1),)

    def multiply(self, p: int, u: Sequence, q: int, v: Sequence) -> Vector:
        """Product of coordinate vectors u in degree p and v in degree q."""
        dim = self.dimension(p + q)
        if p == 0:
            return tuple(Fraction(u[0]) * x for x in v) if dim else ()
        if q == 0:
            return tuple(x * Fraction(v[0]) for x in u) if dim else ()
        out = [Fraction(0)] * dim
        if not dim:
            return ()
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                coords = self.products.get((p, i, q, j))
                if coords:
                    for t, c in enumerate(coords):
                        out[t] += a * b * c
        return tuple(out)

    def validate(self) -> None:
        """
        Check graded commutativity and associativity on basis elements.

        Raises:
            ValueError: On the first failing basis pair or triple
        """
        degrees = [k for k in sorted(self.labels) if k > 0]
        for p, q in cartesian(degrees, degrees):
            for i, j in cartesian(range(self.dimension(p)), range(self.dimension(q))):
                left = self.multiply(p, self.basis_vector(p, i), q, self.basis_vector(q, j))
                right = self.multiply(q, self.basis_vector(q, j), p, self.basis_vector(p, i))
                sign = -1 if (p * q) % 2 else 1
                if tuple(sign * x for x in right) != left:
                    raise ValueError(f"Not graded commutative on ({p},{i}), ({q},{j})")
        for p, q, s in cartesian(degrees, degrees, degrees):
            if p + q + s > self.top_degree:
                continue
            for i, j, k in cartesian(range(self.dimension(p)), range(self.dimension(q)), range(self.dimension(s))):
                x, y, z = self.basis_vector(p, i), self.basis_vector(q, j), self.basis_vector(s, k)
                left = self.multiply(p + q, self.multiply(p, x, q, y), s, z)
                right = self.multiply(p, x, q + s, self.multiply(q, y, s, z))
                if left != right:
                    raise ValueError(f"Not associative on ({p},{i}), ({q},{j}), ({s},{k})")

    @classmethod
    def from_cohomology(cls, ring: CohomologyRing) -> "GradedAlgebraPresentation":
        """H*(D_A) with its class basis and product table."""
        labels = {k: tuple(ring.class_label(k, i) for i in range(n)) for k, n in ring.betti.items()}
        products = {(p, i, q, j): coords for ((p, i), (q, j)), coords in ring.product_on_classes().items()}
        return cls(labels, products)

    @classmethod
    def exterior(cls, degrees: Sequence[int]) -> "GradedAlgebraPresentation":
        """Free graded-commutative algebra on odd classes of the given degrees."""
        if any(d % 2 == 0 or d < 3 for d in degrees):
            raise ValueError(f"Exterior generators need odd degrees >= 3, got {tuple(degrees)}")
        n = len(degrees)
        words = [w for s in range(n + 1) for w in words_of_length(n, s)]
        by_degree: Dict[int, List[Tuple[int, ...]]] = {}
        for w in words:
            by_degree.setdefault(sum(degrees[i] for i in w), []).append(w)
        position = {w: (k, i) for k, ws in by_degree.items() for i, w in enumerate(ws)}
        products = {}
        for u in words:
            for v in words:
                if not u or not v:
                    continue
                sign, union = sort_word(u + v)
                if not sign:
                    continue
                (p, i), (q, j), (k, t) = position[u], position[v], position[union]
                coords = [Fraction(0)] * len(by_degree[k])
                coords[t] = Fraction(sign)
                products[(p, i, q, j)] = tuple(coords)
        labels = {k: tuple("".join(f"x{i + 1}" for i in w) or "1" for w in ws) for k, ws in by_degree.items()}
        return cls(labels, products)

    @classmethod
    def wedge_of_spheres(cls, degrees: Sequence[int]) -> "GradedAlgebraPresentation":
        """Cohomology of a wedge of spheres: one class per sphere, all products zero."""
        if any(d < 2 for d in degrees):
            raise ValueError(f"Sphere dimensions must be at least 2, got {tuple(degrees)}")
        labels: Dict[int, List[str]] = {0: ["1"]}
        for n, d in enumerate(degrees):
            labels.setdefault(d, []).append(f"s{n + 1}")
        return cls({k: tuple(v) for k, v in labels.items()})

    @classmethod
    def truncated_polynomial(cls, degree: int, height: int) -> "GradedAlgebraPresentation":
        """Q[x]/(x^height) with x of even degree."""
        if degree < 2 or degree % 2:
            raise ValueError("A truncated polynomial generator needs an even degree >= 2")
        if height < 2:
            raise ValueError("Height must be at least 2")
        labels = {i * degree: ("1" if i == 0 else ("x" if i == 1 else f"x^{i}"),) for i in range(height)}
        products = {(i * degree, 0, j * degree, 0): (Fraction(1),)
                    for i in range(1, height) for j in range(1, height) if i + j < height}
        return cls(labels, products)


@dataclass
class MinimalModelFragment:
    """
    (ΛV, d) through degree N with the evaluation map φ to H.

    Attributes:
        ring (GradedPolynomialRing): generators and their degrees
        differentials (List[Polynomial]): d of each generator
        images (List[Vector]): φ of each generator in H
        degree_bound (int): N
    """
    ring: GradedPolynomialRing
    differentials: List[Polynomial]
    images: List[Vector]
    degree_bound: int
    target: GradedAlgebraPresentation
    _phi_cache: Dict[Monomial, Vector] = field(default_factory=dict, repr=False)

    @property
    def homotopy_ranks(self) -> Dict[int, int]:
        ranks: Dict[int, int] = {}
        for d in self.ring.gen_degs:
            if d <= self.degree_bound:
                ranks[d] = ranks.get(d, 0) + 1
        return dict(sorted(ranks.items()))

    @property
    def loop_ranks(self) -> Dict[int, int]:
        """rank π_k(ΩM) = rank π_{k+1}(M)."""
        return {k - 1: v for k, v in self.homotopy_ranks.items()}

    @property
    def generators(self) -> List[Tuple[str, int, str]]:
        """(name, degree, differential) per generator."""
        return [(name, deg, self.ring.str_poly(diff))
                for name, deg, diff in zip(self.ring.gen_names, self.ring.gen_degs, self.differentials)]

    def add_generator(self, degree: int, differential: Polynomial, image: Vector) -> int:
        count = sum(1 for d in self.ring.gen_degs if d == degree) + 1
        index = self.ring.add_gen(f"v{degree}_{count}", degree)
        self.differentials.append(differential)
        self.images.append(tuple(image))
        return index

    def d(self, p: Mapping[Monomial, Fraction]) -> Polynomial:
        return self.ring.differential(p, self.differentials)

    def phi_monomial(self, mon: Monomial) -> Vector:
        if mon not in self._phi_cache:
            value, degree = self.target.unit(), 0
            for g in [g for g, e in mon for _ in range(e)]:
                gd = self.ring.gen_degs[g]
                value = self.target.multiply(degree, value, gd, self.images[g])
                degree += gd
                if not any(value):
                    value = tuple(Fraction(0) for _ in range(self.target.dimension(self.ring.deg_mon(mon))))
                    break
            self._phi_cache[mon] = value
        return self._phi_cache[mon]

    def phi(self, p: Mapping[Monomial, Fraction], degree: int) -> Vector:
        out = [Fraction(0)] * self.target.dimension(degree)
        for mon, value in p.items():
            for i, c in enumerate(self.phi_monomial(mon)):
                out[i] += value * c
        return tuple(out)

    def d_matrix(self, k: int) -> QMat:
        """Matrix of d: (ΛV)^k → (ΛV)^{k+1} in the sorted monomial bases."""
        source = self.ring.monomials_in_degree(k)
        target = {m: i for i, m in enumerate(self.ring.monomials_in_degree(k + 1))}
        entries = {}
        for col, mon in enumerate(source):
            for image, value in self.d({mon: Fraction(1)}).items():
                entries[(target[image], col)] = value
        return QMat(len(target), len(source), entries)

    def phi_matrix(self, k: int) -> QMat:
        source = self.ring.monomials_in_degree(k)
        entries = {}
        for col, mon in enumerate(source):
            for row, value in enumerate(self.phi_monomial(mon)):
                if value:
                    entries[(row, col)] = value
        return QMat(self.target.dimension(k), len(source), entries)

    def polynomial(self, k: int, vector: Sequence) -> Polynomial:
        basis = self.ring.monomials_in_degree(k)
        return {basis[i]: Fraction(v) for i, v in enumerate(vector) if v}


def minimal_model(algebra: GradedAlgebraPresentation, max_degree: int,
                  generator_cap: int = DEFAULT_GENERATOR_CAP, verify: bool = True) -> MinimalModelFragment:
    """
    Build the minimal model of (H, 0) through degree N.

    In each degree i, closed generators first make H^i(ΛV) → H^i onto, then
    degree-i generators with prescribed differentials kill the kernel of
    H^{i+1}(ΛV) → H^{i+1}.

    Args:
        algebra (GradedAlgebraPresentation): connected, simply connected H
        max_degree (int): N, at least 2
        generator_cap (int): maximum number of generators
        verify (bool): run :func:`verify_minimal_model` on the result

    Raises:
        ValueError: If N < 2
        ResourceLimitError: If the generator cap is exceeded
        InvariantError: If verification fails
    """
    if max_degree < 2:
        raise ValueError(f"Degree bound must be at least 2, got {max_degree}")
    algebra.validate()
    model = MinimalModelFragment(GradedPolynomialRing(), [], [], max_degree, algebra)

    def check_cap(extra: int) -> None:
        if model.ring.num_gens + extra > generator_cap:
            raise ResourceLimitError(
                f"Minimal model needs more than {generator_cap} generators through degree {max_degree}")

    for i in range(2, max_degree + 1):
        dim_h = algebra.dimension(i)
        if dim_h:
            cycles = kernel_basis(model.d_matrix(i))
            phi_i = model.phi_matrix(i)
            echelon = Echelon()
            for n, cycle in enumerate(cycles):
                echelon.insert(phi_i.apply(cycle), ("image", n))
            new = [j for j in range(dim_h) if echelon.insert(algebra.basis_vector(i, j), ("class", j))]
            check_cap(len(new))
            for j in new:
                model.add_generator(i, {}, algebra.basis_vector(i, j))

        d_next = model.d_matrix(i + 1)
        kernel = kernel_basis(d_next.stack(model.phi_matrix(i + 1)))
        boundaries = column_space_basis(model.d_matrix(i))
        try:
            killers, _ = coset_representatives(d_next.cols, boundaries, kernel)
        except ValueError as e:
            raise InvariantError(f"Boundaries in degree {i + 1} escape the kernel of phi: {e}")
        check_cap(len(killers))
        zero = tuple(Fraction(0) for _ in range(dim_h))
        for vector in killers:
            model.add_generator(i, model.polynomial(i + 1, vector), zero)
        logger.debug(f"Degree {i}: {model.homotopy_ranks.get(i, 0)} generators")

    logger.info(f"Minimal model through degree {max_degree}: ranks {model.homotopy_ranks}")
    if verify:
        verify_minimal_model(model)
    return model


def verify_minimal_model(model: MinimalModelFragment) -> None:
    """
    Re-check a model by exact rank computations.

    Raises:
        InvariantError: If minimality, d² = 0, φ∘d = 0, the cohomology
            isomorphism through N or injectivity in degree N+1 fails
    """
    ring, algebra, top = model.ring, model.target, model.degree_bound
    for g, diff in enumerate(model.differentials):
        name = ring.gen_names[g]
        if any(ring.word_length(mon) < 2 for mon in diff):
            raise InvariantError(f"d{name} has a linear term")
        if model.d(diff):
            raise InvariantError(f"d(d{name}) is not zero")
        if any(model.phi(diff, ring.gen_degs[g] + 1)):
            raise InvariantError(f"phi(d{name}) is not zero")
    for k in range(2, top + 1):
        cycles = kernel_basis(model.d_matrix(k))
        boundary_rank = rank(model.d_matrix(k - 1))
        if len(cycles) - boundary_rank != algebra.dimension(k):
            raise InvariantError(f"H^{k} of the model has dimension {len(cycles) - boundary_rank}, "
                                 f"expected {algebra.dimension(k)}")
        images = [model.phi_matrix(k).apply(c) for c in cycles]
        if algebra.dimension(k) and rank(QMat.from_rows(images, algebra.dimension(k))) != algebra.dimension(k):
            raise InvariantError(f"H^{k} of the model does not map onto H^{k}")
    d_next = model.d_matrix(top + 1)
    kernel = kernel_basis(d_next.stack(model.phi_matrix(top + 1)))
    if len(kernel) != rank(model.d_matrix(top)):
        raise InvariantError(f"H^{top + 1} of the model does not inject into H^{top + 1}")


def homotopy_ranks_of_arrangement(ring: CohomologyRing, max_degree: int,
                                  generator_cap: int = DEFAULT_GENERATOR_CAP) -> MinimalModelFragment:
    """Minimal model of H*(D_A), which computes rank π_k(M(A)) ⊗ Q by formality."""
    presentation = GradedAlgebraPresentation.from_cohomology(ring)
    return minimal_model(presentation, max_degree, generator_cap)


@dataclass(frozen=True)
class GrowthCertificate:
    """
    Comparison of homotopy ranks against a hyperbolicity lower bound.

    Attributes:
        case (HyperbolicCase): which witness produced the bound
        status (str): "certified" or "inconclusive"
        max_degree (int): N
        rows (Tuple[Tuple[int, int, int], ...]): (loop degree k, lower bound, actual rank of π_{k+1})
            for case A; (window start, window end, rank sum) for case B
        message (str): summary line
    """
    case: HyperbolicCase
    status: str
    max_degree: int
    rows: Tuple[Tuple[int, int, int], ...]
    message: str

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def certify_hyperbolic_growth(report: Optional[WitnessReport], ranks: Mapping[int, int],
                              max_degree: int) -> GrowthCertificate:
    """
    Case A: rank π_{k+1} >= free Lie rank on the witness loop degrees, k < N.
    Case B: Σ_{k in [N//2, N]} rank π_k exceeds Σ_{k in [2, N//2]} rank π_k.

    Raises:
        ValueError: If there is no witness report (elliptic input)
        InvariantError: If a case A lower bound is violated
    """
    if report is None:
        raise ValueError("Growth certificates apply to hyperbolic arrangements only")
    if report.case is HyperbolicCase.A:
        a, b = report.loop_degrees
        bounds = free_lie_ranks((a, b), max_degree - 1)
        rows = []
        for k in range(1, max_degree):
            actual = ranks.get(k + 1, 0)
            rows.append((k, bounds.rank(k), actual))
            if actual < bounds.rank(k):
                raise InvariantError(f"rank pi_{k + 1} = {actual} is below the free Lie bound {bounds.rank(k)}")
        message = f"free Lie lower bound on loop degrees ({a}, {b}) holds through degree {max_degree - 1}"
        return GrowthCertificate(HyperbolicCase.A, "certified", max_degree, tuple(rows), message)

    middle = max_degree // 2
    low = sum(ranks.get(k, 0) for k in range(2, middle + 1))
    high = sum(ranks.get(k, 0) for k in range(middle, max_degree + 1))
    rows = ((2, middle, low), (middle, max_degree, high))
    if high > low:
        message = f"ranks in [{middle}, {max_degree}] sum to {high} > {low} in [2, {middle}]"
        return GrowthCertificate(HyperbolicCase.B, "certified", max_degree, rows, message)
    message = (f"ranks in [{middle}, {max_degree}] sum to {high}, not above {low} in [2, {middle}]; "
               f"raise the degree bound")
    logger.warning(f"Growth window inconclusive: {message}")
    return GrowthCertificate(HyperbolicCase.B, "inconclusive", max_degree, rows, message)
