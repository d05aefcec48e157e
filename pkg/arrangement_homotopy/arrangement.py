"""
Subspaces and central subspace arrangements with rational defining equations.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .errors import HypothesisError
from .exactla import QMat, rref, to_rat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subspace:
    """
    A linear subspace of C^l cut out by rational linear forms.

    Two subspaces compare equal exactly when their canonical forms (the
    nonzero rows of the rref of their equations) agree; the name is a label.

    Attributes:
        ambient_dim (int): l
        canonical (Tuple[Tuple[Fraction, ...], ...]): nonzero rref rows
        name (str): display name, not part of identity
    """
    ambient_dim: int
    canonical: Tuple[Tuple[Fraction, ...], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_equations(cls, rows: Sequence[Sequence], ambient_dim: int, name: str = "") -> "Subspace":
        """
        Build a subspace from equation rows.

        Args:
            rows (Sequence[Sequence]): each row is a linear form on C^l
            ambient_dim (int): l
            name (str): display name

        Raises:
            ValueError: If a row has the wrong length
        """
        if ambient_dim < 1:
            raise ValueError("Ambient dimension must be positive")
        for i, row in enumerate(rows):
            if len(row) != ambient_dim:
                raise ValueError(
                    f"Equation {i} of '{name or 'subspace'}' has {len(row)} coefficients, expected {ambient_dim}")
        matrix = QMat.from_rows([[to_rat(v) for v in row] for row in rows], ambient_dim)
        return cls._from_matrix(matrix, ambient_dim, name)

    @classmethod
    def _from_matrix(cls, matrix: QMat, ambient_dim: int, name: str = "") -> "Subspace":
        reduced = rref(matrix)
        canonical = tuple(tuple(row) for row in reduced.matrix.to_rows()[:reduced.rank])
        return cls(ambient_dim, canonical, name)

    @classmethod
    def whole_space(cls, ambient_dim: int) -> "Subspace":
        """C^l itself (no equations); the bottom of every intersection lattice."""
        return cls(ambient_dim, (), f"C^{ambient_dim}")

    @property
    def codim(self) -> int:
        return len(self.canonical)

    @property
    def dimension(self) -> int:
        return self.ambient_dim - self.codim

    @property
    def equations(self) -> QMat:
        return QMat.from_rows(self.canonical, self.ambient_dim)

    def renamed(self, name: str) -> "Subspace":
        return Subspace(self.ambient_dim, self.canonical, name)

    def intersect(self, other: "Subspace") -> "Subspace":
        """
        Intersection, obtained by stacking the equation sets.

        Raises:
            ValueError: If the ambient dimensions differ
        """
        if other.ambient_dim != self.ambient_dim:
            raise ValueError(
                f"Cannot intersect subspaces of C^{self.ambient_dim} and C^{other.ambient_dim}")
        return Subspace._from_matrix(self.equations.stack(other.equations), self.ambient_dim)

    def contains(self, other: "Subspace") -> bool:
        """True if ``other`` is a subset of this subspace."""
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("Ambient dimension mismatch")
        return self.intersect(other).codim == other.codim

    def __str__(self) -> str:
        return self.name or f"<codim {self.codim} subspace of C^{self.ambient_dim}>"


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Module-level form of :meth:`Subspace.intersect`."""
    return a.intersect(b)


@dataclass(frozen=True)
class Arrangement:
    """
    Central subspace arrangement; the atom order is the linear order used by
    the relative atomic algebra.

    Attributes:
        ambient_dim (int): l
        atoms (Tuple[Subspace, ...]): named subspaces in input order
        description (str): free text carried from the input file
    """
    ambient_dim: int
    atoms: Tuple[Subspace, ...]
    description: str = ""

    def __post_init__(self):
        """Check ambient dimensions and names."""
        if self.ambient_dim < 1:
            raise ValueError("Ambient dimension must be positive")
        if not self.atoms:
            raise ValueError("An arrangement needs at least one subspace")
        names = [atom.name for atom in self.atoms]
        for atom in self.atoms:
            if atom.ambient_dim != self.ambient_dim:
                raise ValueError(f"Atom '{atom.name}' lives in C^{atom.ambient_dim}, not C^{self.ambient_dim}")
            if not atom.name:
                raise ValueError("Every atom needs a name")
        if len(set(names)) != len(names):
            raise ValueError(f"Atom names must be unique, got {names}")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(atom.name for atom in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)


class NormalizedArrangement(NamedTuple):
    arrangement: Arrangement
    warnings: Tuple[str, ...]


def normalize(arr: Arrangement) -> NormalizedArrangement:
    """
    Enforce the standing hypotheses on a raw arrangement.

    Atoms contained in another atom (duplicates included) do not change the
    complement and are dropped with a warning; survivors keep input order.

    Args:
        arr (Arrangement): raw arrangement

    Returns:
        NormalizedArrangement: the cleaned arrangement and the warnings

    Raises:
        HypothesisError: If an atom has codimension 0 or 1
    """
    for atom in arr.atoms:
        if atom.codim <= 1:
            raise HypothesisError(
                f"Atom '{atom.name}' has codimension {atom.codim}; every subspace needs codim >= 2")

    warnings: List[str] = []
    survivors: List[Subspace] = []
    for i, atom in enumerate(arr.atoms):
        container = None
        for j, other in enumerate(arr.atoms):
            if i == j or not other.contains(atom):
                continue
            # equal subspaces: keep the first occurrence
            if other == atom and j > i:
                continue
            container = other
            break
        if container is None:
            survivors.append(atom)
            continue
        if container == atom:
            message = f"Atom '{atom.name}' duplicates atom '{container.name}'; dropped"
        else:
            message = f"Atom '{atom.name}' is contained in atom '{container.name}'; dropped"
        logger.warning(message)
        warnings.append(message)

    normalized = Arrangement(arr.ambient_dim, tuple(survivors), arr.description)
    return NormalizedArrangement(normalized, tuple(warnings))
