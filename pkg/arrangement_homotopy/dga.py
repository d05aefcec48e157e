"""
The relative atomic differential graded algebra (D_A, d).

The basis is every subset σ of atoms, graded by deg(σ) = 2·codim(∨σ) − |σ|.
The differential drops an atom when that keeps the join, and the product of
two disjoint subsets is their union when codimensions add up.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exactla import QMat, to_rat
from .exterior import inversions, word_name
from .lattice import IntersectionLattice, subset_mask

logger = logging.getLogger(__name__)

SubsetGen = Tuple[int, ...]


def subset_name(sigma: SubsetGen, names: Optional[Sequence[str]] = None) -> str:
    """'{x1,x2}' style label using atom names when given."""
    if names is None:
        return "{" + ",".join(f"x{i + 1}" for i in sigma) + "}"
    return "{" + ",".join(names[i] for i in sigma) + "}"


@dataclass(frozen=True)
class Cochain:
    """
    Homogeneous element of D_A.

    Attributes:
        degree (int): common degree of every term
        terms (Dict[SubsetGen, Fraction]): nonzero coefficients by subset
    """
    degree: int
    terms: Dict[SubsetGen, Fraction] = field(default_factory=dict)

    __hash__ = None

    def __post_init__(self):
        cleaned = {}
        for sigma, value in self.terms.items():
            value = to_rat(value)
            if value:
                cleaned[tuple(sigma)] = value
        object.__setattr__(self, "terms", cleaned)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_degree(self, other: "Cochain") -> None:
        if other.degree != self.degree:
            raise ValueError(f"Cannot add cochains of degrees {self.degree} and {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_degree(other)
        merged = dict(self.terms)
        for sigma, value in other.terms.items():
            merged[sigma] = merged.get(sigma, Fraction(0)) + value
        return Cochain(self.degree, merged)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {s: -v for s, v in self.terms.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, factor) -> "Cochain":
        factor = to_rat(factor)
        return Cochain(self.degree, {s: factor * v for s, v in self.terms.items()})

    def coefficient(self, sigma: SubsetGen) -> Fraction:
        return self.terms.get(tuple(sigma), Fraction(0))

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for sigma in sorted(self.terms):
            value = self.terms[sigma]
            coefficient = "" if abs(value) == 1 else f"{abs(value)}*"
            pieces.append(("-" if value < 0 else "+", coefficient + subset_name(sigma, names)))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return text + "".join(f" {sign} {body}" for sign, body in pieces[1:])

    def __str__(self) -> str:
        return self.to_string()


class RelativeAtomicAlgebra:
    """
    (D_A, d) for an arrangement with a built intersection lattice.

    The linear order on atoms is the lattice's atom order, i.e. the input
    order after normalization.
    """

    def __init__(self, lattice: IntersectionLattice):
        self.lattice = lattice
        self.n = lattice.n_atoms
        self._degree_of: Dict[SubsetGen, int] = {}
        by_degree: Dict[int, List[SubsetGen]] = {}
        for size in range(self.n + 1):
            for sigma in combinations(range(self.n), size):
                degree = self.degree(sigma)
                self._degree_of[sigma] = degree
                by_degree.setdefault(degree, []).append(sigma)
        self._basis = {k: tuple(sorted(v)) for k, v in by_degree.items()}
        self._position = {k: {s: i for i, s in enumerate(v)} for k, v in self._basis.items()}
        logger.debug(f"Relative atomic algebra on {self.n} atoms: dimensions "
                     f"{ {k: len(v) for k, v in sorted(self._basis.items())} }")

    @property
    def atom_names(self) -> Tuple[str, ...]:
        return self.lattice.arrangement.names

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Degrees carrying at least one basis element, ascending."""
        return tuple(sorted(self._basis))

    def codim(self, sigma: SubsetGen) -> int:
        return self.lattice.codim_of[self.lattice.subset_join[subset_mask(sigma)]]

    def join(self, sigma: SubsetGen) -> int:
        return self.lattice.subset_join[subset_mask(sigma)]

    def degree(self, sigma: SubsetGen) -> int:
        """deg(σ) = 2·codim(∨σ) − |σ|."""
        return 2 * self.codim(sigma) - len(sigma)

    def basis_in_degree(self, k: int) -> Tuple[SubsetGen, ...]:
        """All subsets of degree k in lexicographic order."""
        return self._basis.get(k, ())

    def dimension(self, k: int) -> int:
        return len(self._basis.get(k, ()))

    def index_in_degree(self, sigma: SubsetGen) -> int:
        sigma = tuple(sigma)
        return self._position[self._degree_of[sigma]][sigma]

    def generator(self, sigma: Sequence[int]) -> Cochain:
        """The basis cochain of one subset."""
        sigma = tuple(sorted(sigma))
        if len(set(sigma)) != len(sigma) or any(not 0 <= i < self.n for i in sigma):
            raise ValueError(f"Not a subset of the {self.n} atoms: {sigma}")
        return Cochain(self._degree_of[sigma], {sigma: 1})

    def cochain(self, terms: Mapping[Sequence[int], object], degree: Optional[int] = None) -> Cochain:
        """
        Build a cochain from subset coefficients.

        Raises:
            ValueError: If the terms mix degrees, or the cochain is zero and
                no degree was given
        """
        normalized = {tuple(sorted(s)): to_rat(v) for s, v in terms.items() if to_rat(v)}
        degrees = {self._degree_of[s] for s in normalized}
        if len(degrees) > 1:
            raise ValueError(f"Cochain terms mix degrees {sorted(degrees)}")
        if degrees:
            found = degrees.pop()
            if degree is not None and degree != found:
                raise ValueError(f"Terms have degree {found}, expected {degree}")
            degree = found
        if degree is None:
            raise ValueError("A zero cochain needs an explicit degree")
        return Cochain(degree, normalized)

    def zero(self, degree: int) -> Cochain:
        return Cochain(degree, {})

    def face_sign(self, position: int) -> int:
        """Sign of dropping the atom at a 1-based position."""
        return -1 if position % 2 else 1

    def differential_of_subset(self, sigma: SubsetGen) -> Cochain:
        sigma = tuple(sigma)
        top = self.join(sigma)
        terms: Dict[SubsetGen, Fraction] = {}
        for j in range(len(sigma)):
            face = sigma[:j] + sigma[j + 1:]
            if self.join(face) == top:
                terms[face] = Fraction(self.face_sign(j + 1))
        return Cochain(self._degree_of[sigma] + 1, terms)

    def differential(self, c: Cochain) -> Cochain:
        """Linear extension of d; raises the degree by one."""
        result = self.zero(c.degree + 1)
        for sigma, value in c.terms.items():
            result = result + self.differential_of_subset(sigma).scale(value)
        return result

    def product_of_subsets(self, sigma: SubsetGen, tau: SubsetGen) -> Tuple[int, SubsetGen]:
        """
        σ·τ as (sign, union); sign 0 when the product vanishes.
        """
        if set(sigma) & set(tau):
            return 0, ()
        union = tuple(sorted(sigma + tau))
        if self.codim(sigma) + self.codim(tau) != self.codim(union):
            return 0, ()
        return (-1 if inversions(tuple(sigma) + tuple(tau)) % 2 else 1), union

    def product(self, a: Cochain, b: Cochain) -> Cochain:
        """Bilinear extension of the subset product."""
        terms: Dict[SubsetGen, Fraction] = {}
        for sigma, x in a.terms.items():
            for tau, y in b.terms.items():
                sign, union = self.product_of_subsets(sigma, tau)
                if sign:
                    terms[union] = terms.get(union, Fraction(0)) + sign * x * y
        return Cochain(a.degree + b.degree, terms)

    def to_vector(self, c: Cochain) -> Tuple[Fraction, ...]:
        """Dense coordinates in basis_in_degree(c.degree)."""
        basis = self.basis_in_degree(c.degree)
        return tuple(c.coefficient(s) for s in basis)

    def from_vector(self, degree: int, vector: Sequence) -> Cochain:
        basis = self.basis_in_degree(degree)
        if isinstance(vector, Mapping):
            items = vector.items()
        else:
            items = enumerate(vector)
        return Cochain(degree, {basis[i]: v for i, v in items})

    def differential_matrix(self, k: int) -> QMat:
        """Matrix of d: C^k → C^{k+1} in the lexicographic bases."""
        source = self.basis_in_degree(k)
        target_position = self._position.get(k + 1, {})
        entries = {}
        for col, sigma in enumerate(source):
            for face, value in self.differential_of_subset(sigma).terms.items():
                entries[(target_position[face], col)] = value
        return QMat(len(target_position), len(source), entries)

    def label(self, sigma: SubsetGen) -> str:
        return subset_name(sigma, self.atom_names)

    def monomial_label(self, word: Sequence[int]) -> str:
        return word_name(tuple(word))
