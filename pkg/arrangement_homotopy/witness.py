"""
Witness algebras for hyperbolic arrangements.

Case A uses Λ(e_W)/(e_W) for a monomial e_W in the kernel of φ; case B uses
the exterior algebra on the atoms below a rank-r element X, truncated above
word length r and divided by the brackets. In both cases a cochain-level map
ψ out of D_A retracts the map ρ into cohomology.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import CohomologyRing, HyperbolicCase, PhiAnalysis
from .dga import Cochain, RelativeAtomicAlgebra, SubsetGen
from .errors import InvariantError
from .exactla import QMat, coset_representatives, rank
from .exterior import ExtElement, Word, bracket, verify_bracket_identity as exterior_bracket_identity, words_of_length

logger = logging.getLogger(__name__)


class TruncatedExterior:
    """
    Λ(e_0, ..., e_{g-1}) modulo an ideal generated by relations that are
    homogeneous in word length.

    The quotient basis in each word length is the lexicographically first set
    of words independent modulo the ideal.
    """

    def __init__(self, names: Sequence[str], degrees: Sequence[int], relations: Sequence[ExtElement]):
        if len(names) != len(degrees):
            raise ValueError("Every generator needs a degree")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.relations = tuple(r for r in relations if r)
        for relation in self.relations:
            if len(relation.word_lengths) != 1:
                raise ValueError(f"Relation {relation} mixes word lengths")
        self.size = len(self.names)
        self._basis: Dict[int, Tuple[Word, ...]] = {}
        self._projections = {}
        self._ideal_rank: Dict[int, int] = {}
        for s in range(self.size + 1):
            self._build_length(s)

    def _build_length(self, s: int) -> None:
        words = list(words_of_length(self.size, s))
        ideal = []
        for relation in self.relations:
            length = relation.word_length
            if length > s:
                continue
            for cofactor in words_of_length(self.size, s - length):
                spanned = relation.wedge(ExtElement.monomial(cofactor))
                if spanned:
                    ideal.append(spanned.dense(words))
        standard = [tuple(Fraction(1 if i == j else 0) for i in range(len(words))) for j in range(len(words))]
        chosen, projection = coset_representatives(len(words), ideal, standard)
        self._basis[s] = tuple(words[v.index(1)] for v in chosen)
        self._projections[s] = (words, projection)
        self._ideal_rank[s] = len(words) - len(chosen)

    def basis(self, s: int) -> Tuple[Word, ...]:
        """Quotient basis words of word length s."""
        return self._basis.get(s, ())

    def dimension(self, s: int) -> int:
        return len(self.basis(s))

    def ideal_dimension(self, s: int) -> int:
        return self._ideal_rank.get(s, 0)

    def degree(self, word: Word) -> int:
        return sum(self.degrees[i] for i in word)

    def normal_form(self, e: ExtElement) -> ExtElement:
        """Unique representative in the span of the quotient basis words."""
        result = ExtElement()
        for s in e.word_lengths:
            if s > self.size:
                continue
            words, projection = self._projections[s]
            part = ExtElement({w: v for w, v in e.terms.items() if len(w) == s})
            coords = projection(part.dense(words))
            result = result + ExtElement.from_coordinates(self._basis[s], coords)
        return result

    def is_zero(self, e: ExtElement) -> bool:
        return not self.normal_form(e)

    def multiply(self, a: ExtElement, b: ExtElement) -> ExtElement:
        return self.normal_form(a.wedge(b))

    def hilbert_table(self) -> Dict[Tuple[int, int], int]:
        """dim of the quotient by (word length, degree)."""
        table: Dict[Tuple[int, int], int] = {}
        for s, words in self._basis.items():
            for w in words:
                key = (s, self.degree(w))
                table[key] = table.get(key, 0) + 1
        return table

    def word_label(self, word: Word) -> str:
        return "".join(self.names[i] for i in word) or "1"


@dataclass
class WitnessReport:
    """
    Summary of a witness construction.

    Attributes:
        case (HyperbolicCase): A or B
        atoms (Tuple[str, ...]): atoms spanning the witness algebra
        retraction_verified (bool): the retraction identity held
        loop_degrees (Optional[Tuple[int, int]]): free Lie generator degrees (case A)
        join_label (Optional[str]): the element X (case B)
        hilbert (Dict[Tuple[int, int], int]): witness algebra dimensions by (word length, degree)
        checks (Dict[str, str]): name -> outcome of each verified identity
    """
    case: HyperbolicCase
    atoms: Tuple[str, ...]
    retraction_verified: bool = False
    loop_degrees: Optional[Tuple[int, int]] = None
    join_label: Optional[str] = None
    hilbert: Dict[Tuple[int, int], int] = field(default_factory=dict)
    checks: Dict[str, str] = field(default_factory=dict)


class CochainRetraction:
    """
    ψ: D_A → witness algebra, σ ↦ class of e_σ when σ lies in the witness
    atoms (relabelled locally), 0 otherwise.
    """

    def __init__(self, algebra: RelativeAtomicAlgebra, target: TruncatedExterior, atoms: Sequence[int]):
        self.algebra = algebra
        self.target = target
        self.atoms = tuple(atoms)
        self.local = {atom: i for i, atom in enumerate(self.atoms)}

    def on_subset(self, sigma: SubsetGen) -> ExtElement:
        if any(i not in self.local for i in sigma):
            return ExtElement()
        return self.target.normal_form(ExtElement.monomial([self.local[i] for i in sigma]))

    def __call__(self, c: Cochain) -> ExtElement:
        total = ExtElement()
        for sigma, value in c.terms.items():
            total = total + self.on_subset(sigma).scale(value)
        return total

    def on_class(self, ring: CohomologyRing, degree: int, coordinates: Sequence) -> ExtElement:
        """H*ψ applied to a class given by coordinates."""
        return self(ring.representative(degree, coordinates))


def _subsets_up_to(atoms: Sequence[int], largest: int):
    for size in range(min(largest, len(atoms)) + 1):
        yield from combinations(atoms, size)


def _check_chain_map(psi: CochainRetraction, largest: int) -> Optional[SubsetGen]:
    """First τ with ψ(dτ) ≠ 0 among subsets whose faces can meet the witness atoms."""
    algebra = psi.algebra
    outside = [i for i in range(algebra.n) if i not in psi.local]
    for base in _subsets_up_to(psi.atoms, largest):
        candidates = [base] + [tuple(sorted(base + (y,))) for y in outside]
        for tau in candidates:
            if psi(algebra.differential_of_subset(tau)):
                return tau
    return None


def _check_multiplicative(psi: CochainRetraction, largest: int) -> Optional[Tuple[SubsetGen, SubsetGen]]:
    algebra = psi.algebra
    subsets = list(_subsets_up_to(psi.atoms, largest))
    for sigma in subsets:
        for tau in subsets:
            if len(sigma) + len(tau) > largest + 1:
                continue
            left = psi(algebra.product(algebra.generator(sigma), algebra.generator(tau)))
            right = psi.target.multiply(psi.on_subset(sigma), psi.on_subset(tau))
            if left != right:
                return sigma, tau
    return None


def _rho(ring: CohomologyRing, atoms: Sequence[int], word: Word) -> Tuple[int, Tuple[Fraction, ...]]:
    """ρ on a basis word: e_{j1}...e_{js} ↦ [{x_j1}]...[{x_js}]."""
    return ring.phi_monomial([atoms[i] for i in word])


def _check_retraction(ring: CohomologyRing, target: TruncatedExterior,
                      psi: CochainRetraction) -> Optional[Word]:
    for s in range(target.size + 1):
        for word in target.basis(s):
            degree, coords = _rho(ring, psi.atoms, word)
            if psi.on_class(ring, degree, coords) != ExtElement.monomial(word):
                return word
    return None


@dataclass
class CaseAWitness:
    algebra: TruncatedExterior
    psi: CochainRetraction
    report: WitnessReport

    def rho(self, ring: CohomologyRing, word: Word):
        return _rho(ring, self.psi.atoms, word)


def build_case_a(ring: CohomologyRing, analysis: PhiAnalysis) -> CaseAWitness:
    """
    Witness algebra A4 = Λ(e_W)/(e_W) for the monomial witness W.

    Raises:
        ValueError: If there is no monomial witness
        InvariantError: If ψ fails to be a multiplicative chain map or
            H*ψ does not retract ρ
    """
    if analysis.monomial_witness is None:
        raise ValueError("Case A needs a monomial in the kernel of phi")
    algebra = ring.algebra
    witness = analysis.monomial_witness
    r = len(witness)
    names = tuple(f"e{i + 1}" for i in witness)
    degrees = tuple(algebra.degree((i,)) for i in witness)
    a4 = TruncatedExterior(names, degrees, [ExtElement.monomial(range(r))])
    psi = CochainRetraction(algebra, a4, witness)
    report = WitnessReport(HyperbolicCase.A, tuple(algebra.atom_names[i] for i in witness))

    bad_pair = _check_multiplicative(psi, r)
    if bad_pair is not None:
        raise InvariantError(f"psi is not multiplicative on {algebra.label(bad_pair[0])}, {algebra.label(bad_pair[1])}")
    report.checks["psi multiplicative"] = "ok"
    bad = _check_chain_map(psi, r)
    if bad is not None:
        raise InvariantError(f"psi(d{algebra.label(bad)}) is not zero")
    report.checks["psi chain map"] = "ok"
    bad_word = _check_retraction(ring, a4, psi)
    if bad_word is not None:
        raise InvariantError(f"H*psi does not retract rho on {a4.word_label(bad_word)}")
    report.checks["H*psi o rho = id"] = "ok"
    report.retraction_verified = True

    a = degrees[1] - 1 if r > 1 else degrees[0] - 1
    b = sum(degrees) - 2
    report.loop_degrees = (a, b)
    report.hilbert = a4.hilbert_table()
    logger.info(f"Case A witness on {names}: retraction verified, free Lie loop degrees {(a, b)}")
    return CaseAWitness(a4, psi, report)


@dataclass
class CaseBWitness:
    """
    Attributes:
        algebra (TruncatedExterior): A5
        psi (CochainRetraction): ψ from D_A
        subset (SubsetGen): the first (r+1)-subset with nonzero differential
        join (int): lattice index of X
        r (int): the invariant r
    """
    algebra: TruncatedExterior
    psi: CochainRetraction
    report: WitnessReport
    subset: SubsetGen
    join: int
    r: int

    @property
    def m(self) -> int:
        return self.algebra.size

    def rho_bar(self, ring: CohomologyRing, word: Word):
        return _rho(ring, self.psi.atoms, word)


def build_case_b(ring: CohomologyRing, analysis: PhiAnalysis) -> CaseBWitness:
    """
    Witness algebra A5 over the atoms B below X.

    Raises:
        ValueError: If φ is injective
        InvariantError: If no (r+1)-subset has a nonzero differential, rank(X)
            differs from r, or any dimension, injectivity or retraction check fails
    """
    if analysis.r is None:
        raise ValueError("Case B needs a nonzero kernel of phi")
    algebra = ring.algebra
    lattice = algebra.lattice
    r = analysis.r
    subset = next((s for s in words_of_length(algebra.n, r + 1) if algebra.differential_of_subset(s)), None)
    if subset is None:
        raise InvariantError(f"No subset of size {r + 1} has a nonzero differential")
    join = algebra.join(subset)
    if lattice.rank_of[join] != r:
        raise InvariantError(f"Join {lattice.label(join)} has rank {lattice.rank_of[join]}, expected {r}")
    atoms = lattice.atoms_below(join)
    m = len(atoms)
    if r + 1 > m:
        raise InvariantError(f"Only {m} atoms below {lattice.label(join)} for brackets of length {r + 1}")

    names = tuple(f"e{i + 1}" for i in atoms)
    degrees = tuple(algebra.degree((i,)) for i in atoms)
    brackets = [bracket(w) for w in words_of_length(m, r + 1)]
    monomials = [ExtElement.monomial(w) for w in words_of_length(m, r + 1)]
    a5 = TruncatedExterior(names, degrees, monomials + brackets)
    psi = CochainRetraction(algebra, a5, atoms)
    report = WitnessReport(HyperbolicCase.B, tuple(algebra.atom_names[i] for i in atoms),
                           join_label=lattice.label(join))

    for s in range(m + 1):
        expected = comb(m, s) if s < r else (comb(m - 1, r - 1) if s == r else 0)
        if a5.dimension(s) != expected:
            raise InvariantError(f"dim A5 in word length {s} is {a5.dimension(s)}, expected {expected}")
    leading = tuple(w for w in words_of_length(m, r) if w[0] == 0)
    if a5.basis(r) != leading:
        raise InvariantError(f"A5 basis in word length {r} is not the words starting with {names[0]}")
    bracket_rank = rank(QMat.from_rows([b.dense(list(words_of_length(m, r))) for b in brackets]))
    if bracket_rank != comb(m - 1, r):
        raise InvariantError(f"Brackets span {bracket_rank} dimensions, expected {comb(m - 1, r)}")
    report.checks["A5 dimensions"] = f"ok, dim A5^{r} = {comb(m - 1, r - 1)}"
    report.checks["bracket span"] = f"ok, dim = {bracket_rank}"

    for relation in monomials + brackets:
        if any(any(coords) for coords in ring.phi(relation.relabel(dict(enumerate(atoms)))).values()):
            raise InvariantError(f"rho_bar does not vanish on relation {relation}")
    by_degree: Dict[int, List[Tuple[Fraction, ...]]] = {}
    for s in range(m + 1):
        for word in a5.basis(s):
            degree, coords = _rho(ring, atoms, word)
            by_degree.setdefault(degree, []).append(coords)
    for degree, images in by_degree.items():
        if rank(QMat.from_columns(images, ring.dimension(degree))) != len(images):
            raise InvariantError(f"rho_bar is not injective in degree {degree}")
    report.checks["rho_bar injective"] = "ok"

    bad_pair = _check_multiplicative(psi, r)
    if bad_pair is not None:
        raise InvariantError(f"psi is not multiplicative on {algebra.label(bad_pair[0])}, {algebra.label(bad_pair[1])}")
    report.checks["psi multiplicative"] = "ok"
    bad = _check_chain_map(psi, r + 1)
    if bad is not None:
        raise InvariantError(f"psi(d{algebra.label(bad)}) is not zero")
    report.checks["psi chain map"] = "ok"
    bad_word = _check_retraction(ring, a5, psi)
    if bad_word is not None:
        raise InvariantError(f"psi o rho_bar is not the identity on {a5.word_label(bad_word)}")
    report.checks["psi o rho_bar = id"] = "ok"
    report.retraction_verified = True

    witness = CaseBWitness(a5, psi, report, subset, join, r)
    failures = [w for w in combinations(range(1, m), r + 1) if not verify_bracket_identity(witness, w)]
    if failures:
        raise InvariantError(f"Bracket identity fails on {failures[0]}")
    report.checks["bracket identity"] = f"ok on {comb(m - 1, r + 1)} index sets"
    report.hilbert = a5.hilbert_table()
    logger.info(f"Case B witness: X = {lattice.label(join)}, m = {m}, r = {r}, retraction verified")
    return witness


def verify_bracket_identity(witness: CaseBWitness, indices: Sequence[int]) -> bool:
    """
    Check the expansion of [e_{i1},...,e_{i_{r+1}}] through brackets starting
    with the first generator, for local indices 0 < i1 < ... < i_{r+1} < m.

    Raises:
        ValueError: If the index set has the wrong length or range
    """
    indices = tuple(indices)
    if len(indices) != witness.r + 1:
        raise ValueError(f"Expected {witness.r + 1} indices, got {len(indices)}")
    if not all(0 < i < witness.m for i in indices):
        raise ValueError(f"Indices must lie in 1..{witness.m - 1}")
    return exterior_bracket_identity(indices, first=0)
