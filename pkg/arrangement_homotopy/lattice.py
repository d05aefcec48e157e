"""
Intersection lattice L(A) of a central subspace arrangement.

Elements are ordered by reverse inclusion, so the join of two elements is
their intersection and the bottom is C^l. Every element is stored together
with the bitmask of atoms lying above it as subspaces (the atoms "below" it
in the lattice order); joins and meets reduce to operations on those masks.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .arrangement import Arrangement, Subspace
from .errors import InvariantError, ResourceLimitError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ATOMS = 24


def subset_mask(subset: Iterable[int]) -> int:
    mask = 0
    for index in subset:
        mask |= 1 << index
    return mask


def mask_members(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class IntersectionLattice:
    """
    Closure of the atoms under intersection, with rank and codimension.

    Attributes:
        arrangement (Arrangement): the (normalized) arrangement
        elements (Tuple[Subspace, ...]): distinct intersections, bottom first,
            ordered by (rank, codim, atoms below)
        atom_masks (Tuple[int, ...]): per element, the atoms below it
        rank_of (Tuple[int, ...]): per element, longest chain height above bottom
        codim_of (Tuple[int, ...]): per element, codimension as a subspace
        min_generators (Tuple[int, ...]): per element, fewest atoms joining to it
        subset_join (Dict[int, int]): atom bitmask -> element index of its join
    """
    arrangement: Arrangement
    elements: Tuple[Subspace, ...]
    atom_masks: Tuple[int, ...]
    rank_of: Tuple[int, ...]
    codim_of: Tuple[int, ...]
    min_generators: Tuple[int, ...]
    subset_join: Dict[int, int]

    __hash__ = None

    @property
    def n_atoms(self) -> int:
        return len(self.arrangement.atoms)

    @property
    def bottom(self) -> int:
        return self.subset_join[0]

    @property
    def top(self) -> int:
        return self.subset_join[(1 << self.n_atoms) - 1]

    def __len__(self) -> int:
        return len(self.elements)

    def join(self, a: int, b: int) -> int:
        return self.subset_join[self.atom_masks[a] | self.atom_masks[b]]

    def meet(self, a: int, b: int) -> int:
        return self.subset_join[self.atom_masks[a] & self.atom_masks[b]]

    def leq(self, a: int, b: int) -> bool:
        """a <= b in the lattice order, i.e. b is contained in a as subspaces."""
        return self.atom_masks[a] & ~self.atom_masks[b] == 0

    def join_of(self, atoms: Iterable[int]) -> int:
        """Element index of the join of a set of atom indices."""
        return self.subset_join[subset_mask(atoms)]

    def atom_element(self, atom: int) -> int:
        return self.subset_join[1 << atom]

    def atoms_below(self, element: int) -> Tuple[int, ...]:
        return mask_members(self.atom_masks[element])

    def rank(self, element: int) -> int:
        return self.rank_of[element]

    def codim(self, element: int) -> int:
        return self.codim_of[element]

    def label(self, element: int) -> str:
        """Display label: atom name, joined atom names, or C^l for the bottom."""
        atoms = self.atoms_below(element)
        if not atoms:
            return f"C^{self.arrangement.ambient_dim}"
        names = self.arrangement.names
        return "∨".join(names[i] for i in atoms)

    def covers(self) -> List[Tuple[int, int]]:
        """Covering pairs (a, b): a < b with no element strictly between."""
        pairs = []
        for b in range(len(self.elements)):
            for a in range(len(self.elements)):
                if a != b and self.leq(a, b) and self.rank_of[b] == self.rank_of[a] + 1:
                    pairs.append((a, b))
        return pairs


def build_lattice(arr: Arrangement, max_atoms: int = DEFAULT_MAX_ATOMS) -> IntersectionLattice:
    """
    Enumerate all joins of atom subsets.

    Args:
        arr (Arrangement): normalized arrangement
        max_atoms (int): guard on the 2^n subset enumeration

    Returns:
        IntersectionLattice: complete lattice with join table, rank and codim

    Raises:
        ResourceLimitError: If the arrangement has more than ``max_atoms`` atoms
    """
    n = len(arr.atoms)
    if n > max_atoms:
        raise ResourceLimitError(f"Arrangement has {n} atoms; the lattice closure is limited to {max_atoms}")

    bottom = Subspace.whole_space(arr.ambient_dim)
    found: List[Subspace] = [bottom]
    index_of: Dict[Subspace, int] = {bottom: 0}
    raw_join: Dict[int, int] = {0: 0}
    min_size: Dict[int, int] = {0: 0}
    memo: Dict[Tuple[int, int], int] = {}

    # each mask extends the mask without its lowest atom
    for mask in range(1, 1 << n):
        low = mask & -mask
        atom = low.bit_length() - 1
        previous = raw_join[mask ^ low]
        key = (previous, atom)
        if key not in memo:
            candidate = found[previous].intersect(arr.atoms[atom])
            if candidate not in index_of:
                index_of[candidate] = len(found)
                found.append(candidate)
            memo[key] = index_of[candidate]
        element = memo[key]
        raw_join[mask] = element
        size = bin(mask).count("1")
        if size < min_size.get(element, n + 1):
            min_size[element] = size

    masks = [subset_mask(k for k, atom in enumerate(arr.atoms) if atom.contains(element))
             for element in found]

    # longest chain from the bottom, processing by number of atoms below
    order = sorted(range(len(found)), key=lambda e: bin(masks[e]).count("1"))
    chain_rank: Dict[int, int] = {}
    for e in order:
        below = [f for f in chain_rank if f != e and masks[f] & ~masks[e] == 0]
        chain_rank[e] = max((chain_rank[f] + 1 for f in below), default=0)

    final = sorted(range(len(found)),
                   key=lambda e: (chain_rank[e], found[e].codim, mask_members(masks[e])))
    position = {old: new for new, old in enumerate(final)}
    elements = tuple(found[old].renamed("") for old in final)
    lattice = IntersectionLattice(
        arrangement=arr,
        elements=elements,
        atom_masks=tuple(masks[old] for old in final),
        rank_of=tuple(chain_rank[old] for old in final),
        codim_of=tuple(found[old].codim for old in final),
        min_generators=tuple(min_size[old] for old in final),
        subset_join={mask: position[e] for mask, e in raw_join.items()},
    )
    logger.info(f"Built intersection lattice: {len(elements)} elements, "
                f"top rank {lattice.rank_of[lattice.top]}, top codim {lattice.codim_of[lattice.top]}")
    return lattice


@dataclass(frozen=True)
class GeometricCheck:
    """
    Outcome of :func:`is_geometric`.

    Attributes:
        is_geometric (bool): verdict
        reason (str): "ok", "not atomistic" or "not semimodular"
        witness (Tuple[int, ...]): offending element(s) as lattice indices
        message (str): human readable diagnostic
    """
    is_geometric: bool
    reason: str
    witness: Tuple[int, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.is_geometric


def is_geometric(lat: IntersectionLattice) -> GeometricCheck:
    """
    Test atomisticity and semimodularity, returning the first violation.

    On geometric lattices the chain rank is also cross-checked against the
    minimal number of atoms joining to each element.

    Raises:
        InvariantError: If the rank cross-check fails on a geometric lattice
    """
    for e in range(len(lat)):
        if lat.subset_join[lat.atom_masks[e]] != e:
            return GeometricCheck(False, "not atomistic", (e,),
                                  f"Element {lat.label(e)} is not the join of the atoms below it")

    size = len(lat)
    for a in range(size):
        for b in range(a + 1, size):
            join, meet = lat.join(a, b), lat.meet(a, b)
            lhs = lat.rank_of[join] + lat.rank_of[meet]
            rhs = lat.rank_of[a] + lat.rank_of[b]
            if lhs > rhs:
                message = (f"Pair ({lat.label(a)}, {lat.label(b)}) violates semimodularity: "
                           f"rank(join)={lat.rank_of[join]} + rank(meet)={lat.rank_of[meet]} "
                           f"> rank={lat.rank_of[a]} + rank={lat.rank_of[b]}")
                return GeometricCheck(False, "not semimodular", (a, b), message)

    for e in range(size):
        if lat.rank_of[e] != lat.min_generators[e]:
            raise InvariantError(
                f"Chain rank {lat.rank_of[e]} of {lat.label(e)} differs from its minimal atom count "
                f"{lat.min_generators[e]} on a geometric lattice")
    return GeometricCheck(True, "ok", (), "lattice is geometric")


def rank_of_subset(lat: IntersectionLattice, atoms: Iterable[int]) -> int:
    return lat.rank_of[lat.join_of(atoms)]


def is_independent(lat: IntersectionLattice, atoms: Tuple[int, ...]) -> bool:
    """rk(join of atoms) == number of atoms."""
    return rank_of_subset(lat, atoms) == len(atoms)


def element_summary(lat: IntersectionLattice, element: int) -> Dict[str, object]:
    """Plain-data description of one element for reports."""
    return {
        "label": lat.label(element),
        "atoms": [lat.arrangement.names[i] for i in lat.atoms_below(element)],
        "rank": lat.rank_of[element],
        "codim": lat.codim_of[element],
        "equations": [[str(v) for v in row] for row in lat.elements[element].canonical],
    }
