"""
Exterior algebra Λ(e_1, ..., e_n) over the rationals.

Words are strictly increasing tuples of 0-based generator indices; rendering
uses 1-based names (``e1e2 - e1e3``).
"""
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .exactla import to_rat

Word = Tuple[int, ...]


def inversions(sequence: Sequence[int]) -> int:
    """Number of out-of-order pairs in a sequence."""
    return sum(1 for i in range(len(sequence)) for j in range(i + 1, len(sequence))
               if sequence[i] > sequence[j])


def sort_word(sequence: Sequence[int]) -> Tuple[int, Optional[Word]]:
    """
    Sort a product of generators into a word.

    Returns:
        Tuple[int, Optional[Word]]: sign and sorted word, or (0, None) when a
        generator repeats
    """
    if len(set(sequence)) != len(sequence):
        return 0, None
    sign = -1 if inversions(sequence) % 2 else 1
    return sign, tuple(sorted(sequence))


def words_of_length(n: int, length: int) -> Iterator[Word]:
    """All words of a given length over n generators, in lexicographic order."""
    return combinations(range(n), length)


def word_name(word: Word, prefix: str = "e") -> str:
    if not word:
        return "1"
    return "".join(f"{prefix}{i + 1}" for i in word)


class ExtElement:
    """
    An element of Λ(e_1, ..., e_n) with exact coefficients.

    Elements are immutable values; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None):
        cleaned: Dict[Word, Fraction] = {}
        for word, value in (terms or {}).items():
            sign, normal = sort_word(tuple(word))
            value = to_rat(value)
            if not sign or not value:
                continue
            updated = cleaned.get(normal, Fraction(0)) + sign * value
            if updated:
                cleaned[normal] = updated
            else:
                cleaned.pop(normal, None)
        self._terms = cleaned

    @classmethod
    def one(cls) -> "ExtElement":
        return cls({(): 1})

    @classmethod
    def generator(cls, index: int) -> "ExtElement":
        return cls({(index,): 1})

    @classmethod
    def monomial(cls, indices: Sequence[int]) -> "ExtElement":
        """e_{i1} ∧ ... ∧ e_{is} in the given order (sorted with sign)."""
        return cls({tuple(indices): 1})

    @property
    def terms(self) -> Dict[Word, Fraction]:
        return dict(self._terms)

    @property
    def word_lengths(self) -> Tuple[int, ...]:
        return tuple(sorted({len(word) for word in self._terms}))

    @property
    def word_length(self) -> Optional[int]:
        """Exterior degree of a homogeneous element; None for zero."""
        lengths = self.word_lengths
        if not lengths:
            return None
        if len(lengths) > 1:
            raise ValueError(f"Element mixes word lengths {lengths}")
        return lengths[0]

    def coefficient(self, word: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def support(self) -> Tuple[Word, ...]:
        return tuple(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ExtElement") -> "ExtElement":
        merged = dict(self._terms)
        for word, value in other._terms.items():
            merged[word] = merged.get(word, Fraction(0)) + value
        return ExtElement(merged)

    def __neg__(self) -> "ExtElement":
        return ExtElement({w: -v for w, v in self._terms.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, factor) -> "ExtElement":
        factor = to_rat(factor)
        return ExtElement({w: factor * v for w, v in self._terms.items()})

    def __rmul__(self, factor) -> "ExtElement":
        return self.scale(factor)

    def wedge(self, other: "ExtElement") -> "ExtElement":
        product: Dict[Word, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                sign, word = sort_word(u + v)
                if not sign:
                    continue
                product[word] = product.get(word, Fraction(0)) + sign * a * b
        return ExtElement(product)

    __mul__ = wedge

    def boundary(self) -> "ExtElement":
        """∂(e_{i1}...e_{is}) = Σ_j (-1)^j e_{i1}...ê_{ij}...e_{is}, j counted from 1."""
        result: Dict[Word, Fraction] = {}
        for word, value in self._terms.items():
            for j in range(len(word)):
                face = word[:j] + word[j + 1:]
                sign = -1 if (j + 1) % 2 else 1
                result[face] = result.get(face, Fraction(0)) + sign * value
        return ExtElement(result)

    def relabel(self, mapping: Mapping[int, int]) -> "ExtElement":
        """Rename generators; the result is re-sorted with signs."""
        return ExtElement({tuple(mapping[i] for i in w): v for w, v in self._terms.items()})

    def dense(self, words: Sequence[Word]) -> Tuple[Fraction, ...]:
        """Coordinates against an explicit word basis (missing words are dropped)."""
        return tuple(self.coefficient(w) for w in words)

    @classmethod
    def from_coordinates(cls, words: Sequence[Word], coordinates: Iterable) -> "ExtElement":
        return cls({w: c for w, c in zip(words, coordinates)})

    def to_string(self, prefix: str = "e") -> str:
        if not self._terms:
            return "0"
        parts = []
        for word in sorted(self._terms, key=lambda w: (len(w), w)):
            value = self._terms[word]
            magnitude = abs(value)
            name = word_name(word, prefix)
            if magnitude == 1:
                body = name
            elif not word:
                body = str(magnitude)
            else:
                body = f"{magnitude}*{name}"
            sign = "-" if value < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"ExtElement({self.to_string()})"


def bracket(indices: Sequence[int]) -> ExtElement:
    """[e_{i1}, ..., e_{is}] = ∂(e_{i1}...e_{is})."""
    return ExtElement.monomial(indices).boundary()


def bracket_through(first: int, indices: Sequence[int]) -> ExtElement:
    """Σ_j (-1)^{j+1} [e_first, e_{i1}, ..., ê_{ij}, ..., e_{is}], j counted from 1."""
    total = ExtElement()
    for j in range(len(indices)):
        rest = tuple(indices[:j]) + tuple(indices[j + 1:])
        term = bracket((first,) + rest)
        total = total + term if j % 2 == 0 else total - term
    return total


def verify_bracket_identity(indices: Sequence[int], first: int = 0) -> bool:
    """
    Check [e_{i1},...,e_{is}] = Σ_j (-1)^{j+1} [e_first, e_{i1},...,ê_{ij},...,e_{is}].

    Raises:
        ValueError: If the indices are not strictly increasing, contain
            ``first`` or number fewer than two
    """
    indices = tuple(indices)
    if len(indices) < 2:
        raise ValueError("The bracket identity needs at least two indices")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"Indices must be strictly increasing, got {indices}")
    if first in indices:
        raise ValueError(f"Index {first} is reserved for the leading generator")
    return bracket(indices) == bracket_through(first, indices)
