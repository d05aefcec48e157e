"""
Free graded-commutative algebras Λ(v_1, ..., v_k) over the rationals.

A monomial is a tuple of (generator index, exponent) pairs sorted by index;
odd generators appear with exponent 1 only. Polynomials are dicts
monomial -> Fraction without zero values.
"""
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exactla import to_rat

Monomial = Tuple[Tuple[int, int], ...]
Polynomial = Dict[Monomial, Fraction]

UNIT: Monomial = ()


def add_into(target: Polynomial, source: Mapping[Monomial, Fraction], factor=1) -> None:
    """In place: target += factor * source."""
    factor = to_rat(factor)
    for mon, value in source.items():
        updated = target.get(mon, Fraction(0)) + factor * value
        if updated:
            target[mon] = updated
        else:
            target.pop(mon, None)


class GradedPolynomialRing:
    """
    Generators are added one at a time; each has a name and a positive degree.
    """

    def __init__(self):
        self.gen_names: List[str] = []
        self.gen_degs: List[int] = []
        self._basis_cache: Dict[Tuple[int, int], Tuple[Monomial, ...]] = {}

    def add_gen(self, name: str, deg: int) -> int:
        """Add a new generator and return its index."""
        if deg < 1:
            raise ValueError(f"Generator '{name}' needs a positive degree, got {deg}")
        self.gen_names.append(name)
        self.gen_degs.append(deg)
        self._basis_cache.clear()
        return len(self.gen_names) - 1

    @property
    def num_gens(self) -> int:
        return len(self.gen_names)

    def is_odd(self, index: int) -> bool:
        return self.gen_degs[index] % 2 == 1

    def gen(self, index: int) -> Polynomial:
        return {((index, 1),): Fraction(1)}

    def deg_mon(self, mon: Monomial) -> int:
        return sum(self.gen_degs[g] * e for g, e in mon)

    def word_length(self, mon: Monomial) -> int:
        return sum(e for _, e in mon)

    def mul_mons(self, mon1: Monomial, mon2: Monomial) -> Tuple[int, Optional[Monomial]]:
        """
        Product of two normal monomials as (sign, monomial); (0, None) if it vanishes.

        The sign counts odd generators of ``mon2`` that move past larger odd
        generators of ``mon1``.
        """
        exponents: Dict[int, int] = dict(mon1)
        swaps = 0
        for g, e in mon2:
            if self.is_odd(g):
                if g in exponents:
                    return 0, None
                swaps += sum(1 for h, _ in mon1 if h > g and self.is_odd(h))
            exponents[g] = exponents.get(g, 0) + e
        return (-1 if swaps % 2 else 1), tuple(sorted(exponents.items()))

    def multiply(self, p: Mapping[Monomial, Fraction], q: Mapping[Monomial, Fraction]) -> Polynomial:
        result: Polynomial = {}
        for m1, a in p.items():
            for m2, b in q.items():
                sign, mon = self.mul_mons(m1, m2)
                if sign:
                    add_into(result, {mon: a * b}, sign)
        return result

    def monomials_in_degree(self, degree: int) -> Tuple[Monomial, ...]:
        """All normal monomials of a given degree, sorted."""
        key = (degree, self.num_gens)
        if key not in self._basis_cache:
            found = sorted(self._monomials(degree, 0))
            self._basis_cache[key] = tuple(found)
        return self._basis_cache[key]

    def _monomials(self, degree: int, start: int) -> Iterator[Monomial]:
        if degree == 0:
            yield UNIT
            return
        for g in range(start, self.num_gens):
            d = self.gen_degs[g]
            top = 1 if self.is_odd(g) else degree // d
            for e in range(1, top + 1):
                rest = degree - e * d
                if rest < 0:
                    break
                for tail in self._monomials(rest, g + 1):
                    yield ((g, e),) + tail

    def differential(self, p: Mapping[Monomial, Fraction],
                     gen_diffs: Sequence[Mapping[Monomial, Fraction]]) -> Polynomial:
        """
        Extend generator differentials to polynomials by the graded Leibniz rule.

        Args:
            p (Mapping): polynomial to differentiate
            gen_diffs (Sequence[Mapping]): d of each generator, indexed like the generators
        """
        result: Polynomial = {}
        for mon, value in p.items():
            prefix_degree = 0
            for position, (g, e) in enumerate(mon):
                dg = gen_diffs[g]
                if dg:
                    before = mon[:position]
                    after = mon[position + 1:]
                    left = {before + (((g, e - 1),) if e > 1 else ()): Fraction(e)}
                    term = self.multiply(self.multiply(left, dg), {after: Fraction(1)})
                    sign = -1 if prefix_degree % 2 else 1
                    add_into(result, term, sign * value)
                prefix_degree += self.gen_degs[g] * e
        return result

    def str_mon(self, mon: Monomial) -> str:
        if not mon:
            return "1"
        return "".join(self.gen_names[g] if e == 1 else f"{self.gen_names[g]}^{e}" for g, e in mon)

    def str_poly(self, p: Mapping[Monomial, Fraction]) -> str:
        if not p:
            return "0"
        pieces = []
        for mon in sorted(p):
            value = p[mon]
            coefficient = "" if abs(value) == 1 and mon else f"{abs(value)}"
            body = coefficient + ("*" if coefficient and mon else "") + (self.str_mon(mon) if mon else "")
            pieces.append(("-" if value < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return text + "".join(f" {s} {b}" for s, b in pieces[1:])
