"""
Exact identity checks on the relative atomic algebra and its cohomology.

Each check returns None when the identity holds and the first offending
basis element (or tuple of them) otherwise. The self-test runner and the
unit tests share these functions.
"""
from itertools import combinations
from typing import List, Optional, Tuple

from .cohomology import CohomologyRing
from .dga import RelativeAtomicAlgebra, SubsetGen
from .exactla import QMat, rank
from .exterior import ExtElement, Word, words_of_length
from .lattice import is_independent


def all_subsets(algebra: RelativeAtomicAlgebra) -> List[SubsetGen]:
    return [s for size in range(algebra.n + 1) for s in combinations(range(algebra.n), size)]


def check_d_squared(algebra: RelativeAtomicAlgebra) -> Optional[SubsetGen]:
    for sigma in all_subsets(algebra):
        if algebra.differential(algebra.differential_of_subset(sigma)):
            return sigma
    return None


def check_degree_shift(algebra: RelativeAtomicAlgebra) -> Optional[SubsetGen]:
    """Every face appearing in dσ has degree deg(σ) + 1."""
    for sigma in all_subsets(algebra):
        target = algebra.degree(sigma) + 1
        if any(algebra.degree(face) != target for face in algebra.differential_of_subset(sigma).terms):
            return sigma
    return None


def check_leibniz(algebra: RelativeAtomicAlgebra) -> Optional[Tuple[SubsetGen, SubsetGen]]:
    """d(a·b) = da·b + (-1)^{deg a} a·db on all basis pairs."""
    subsets = all_subsets(algebra)
    for sigma in subsets:
        a = algebra.generator(sigma)
        da = algebra.differential(a)
        for tau in subsets:
            b = algebra.generator(tau)
            left = algebra.differential(algebra.product(a, b))
            right = algebra.product(da, b)
            second = algebra.product(a, algebra.differential(b))
            right = right + (second if a.degree % 2 == 0 else -second)
            if left.terms != right.terms:
                return sigma, tau
    return None


def check_graded_commutativity(algebra: RelativeAtomicAlgebra) -> Optional[Tuple[SubsetGen, SubsetGen]]:
    subsets = all_subsets(algebra)
    for sigma in subsets:
        a = algebra.generator(sigma)
        for tau in subsets:
            b = algebra.generator(tau)
            ab = algebra.product(a, b)
            ba = algebra.product(b, a)
            if (a.degree * b.degree) % 2:
                ba = -ba
            if ab.terms != ba.terms:
                return sigma, tau
    return None


def check_associativity(algebra: RelativeAtomicAlgebra) -> Optional[Tuple[SubsetGen, SubsetGen, SubsetGen]]:
    subsets = all_subsets(algebra)
    for sigma in subsets:
        a = algebra.generator(sigma)
        for tau in subsets:
            if set(sigma) & set(tau):
                continue
            b = algebra.generator(tau)
            ab = algebra.product(a, b)
            for rho in subsets:
                if (set(sigma) | set(tau)) & set(rho):
                    continue
                c = algebra.generator(rho)
                if algebra.product(ab, c).terms != algebra.product(a, algebra.product(b, c)).terms:
                    return sigma, tau, rho
    return None


def check_low_degrees(ring: CohomologyRing) -> Optional[int]:
    """H^0 is one-dimensional and H^1 = H^2 = 0."""
    if ring.dimension(0) != 1:
        return 0
    for k in (1, 2):
        if ring.dimension(k):
            return k
    return None


def check_independent_generation(ring: CohomologyRing) -> Optional[int]:
    """Classes of independent subsets span H^k in every degree; returns the first degree where they do not."""
    algebra = ring.algebra
    by_degree = {}
    for sigma in all_subsets(algebra):
        if not is_independent(algebra.lattice, sigma):
            continue
        if algebra.differential_of_subset(sigma):
            continue
        degree, coords = ring.class_of(algebra.generator(sigma))
        by_degree.setdefault(degree, []).append(coords)
    for k, dim in sorted(ring.betti.items()):
        spanned = by_degree.get(k, [])
        if not spanned or rank(QMat.from_rows(spanned, dim)) != dim:
            return k
    return None


def check_phi_multiplicative(ring: CohomologyRing) -> Optional[Tuple[Word, Word]]:
    """φ(e_u ∧ e_v) = φ(e_u)·φ(e_v) for all pairs of words."""
    n = ring.algebra.n
    words = [w for s in range(n + 1) for w in words_of_length(n, s)]
    for u in words:
        pu, cu = ring.phi_monomial(u)
        for v in words:
            pv, cv = ring.phi_monomial(v)
            product = ExtElement.monomial(u).wedge(ExtElement.monomial(v))
            image = ring.phi(product).get(pu + pv)
            expected = ring.multiply(pu, cu, pv, cv)
            if image is None:
                image = tuple(0 for _ in expected)
            if tuple(image) != tuple(expected):
                return u, v
    return None
