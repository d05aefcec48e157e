"""
Exact rational linear algebra used by every other module.

Scalars are ``fractions.Fraction`` (always reduced, zero is 0/1). Matrices are
sparse maps (row, col) -> Fraction with no stored zeros. Pivoting is
deterministic: columns are scanned left to right and the first row holding a
nonzero entry in the current column becomes the pivot row.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, NamedTuple, Sequence, Tuple, Union

Rat = Fraction
Vector = Tuple[Fraction, ...]
SparseVector = Dict[int, Fraction]
AnyVector = Union[Sequence, Mapping[int, object]]


def to_rat(value) -> Fraction:
    """Convert an int, Fraction or rational string such as '-3/4' to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational number")


def sparse(vector: AnyVector) -> SparseVector:
    """Return the sparse form {index: value} of a dense or sparse vector."""
    if isinstance(vector, Mapping):
        items = vector.items()
    else:
        items = enumerate(vector)
    return {int(i): to_rat(v) for i, v in items if v != 0}


def dense(vector: Mapping[int, Fraction], length: int) -> Vector:
    """Return the dense tuple of a sparse vector."""
    return tuple(vector.get(i, Fraction(0)) for i in range(length))


def add_scaled(target: SparseVector, source: Mapping[int, Fraction], factor: Fraction) -> None:
    """In place: target += factor * source, dropping entries that cancel."""
    if factor == 0:
        return
    for index, value in source.items():
        updated = target.get(index, Fraction(0)) + factor * value
        if updated:
            target[index] = updated
        else:
            target.pop(index, None)


@dataclass(frozen=True, eq=True)
class QMat:
    """
    Sparse rational matrix.

    Attributes:
        rows (int): number of rows
        cols (int): number of columns
        entries (Dict[Tuple[int, int], Fraction]): nonzero entries only
    """
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Validate shape and indices, drop zeros and coerce values."""
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative")
        cleaned = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"Entry index ({r}, {c}) out of range for {self.rows}x{self.cols} matrix")
            value = to_rat(value)
            if value:
                cleaned[(r, c)] = value
        object.__setattr__(self, "entries", cleaned)

    __hash__ = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "QMat":
        """Build a matrix from dense rows."""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"Row {r} has length {len(row)}, expected {cols}")
            for c, value in enumerate(row):
                if value != 0:
                    entries[(r, c)] = value
        return cls(len(rows), cols, entries)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Fraction]], cols: int) -> "QMat":
        """Build a matrix from sparse rows."""
        entries = {(r, c): v for r, row in enumerate(rows) for c, v in row.items()}
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[AnyVector], rows: int) -> "QMat":
        """Build a matrix whose c-th column is ``columns[c]``."""
        entries = {}
        for c, column in enumerate(columns):
            for r, value in sparse(column).items():
                entries[(r, c)] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMat":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def entry(self, row: int, col: int) -> Fraction:
        return self.entries.get((row, col), Fraction(0))

    def sparse_rows(self) -> List[SparseVector]:
        """Rows as sparse dictionaries."""
        result: List[SparseVector] = [dict() for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            result[r][c] = value
        return result

    def to_rows(self) -> List[List[Fraction]]:
        """Rows as dense lists."""
        return [list(dense(row, self.cols)) for row in self.sparse_rows()]

    def transpose(self) -> "QMat":
        return QMat(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def stack(self, other: "QMat") -> "QMat":
        """Vertical concatenation [self; other]."""
        if other.cols != self.cols:
            raise ValueError(f"Cannot stack a {other.cols}-column matrix under a {self.cols}-column matrix")
        entries = dict(self.entries)
        entries.update({(r + self.rows, c): v for (r, c), v in other.entries.items()})
        return QMat(self.rows + other.rows, self.cols, entries)

    def apply(self, vector: AnyVector) -> Vector:
        """Matrix-vector product m.v as a dense tuple."""
        vec = sparse(vector)
        out = [Fraction(0)] * self.rows
        for (r, c), value in self.entries.items():
            if c in vec:
                out[r] += value * vec[c]
        return tuple(out)


class RowReduction(NamedTuple):
    """Result of :func:`rref`."""
    matrix: QMat
    pivots: Tuple[int, ...]
    rank: int


def _reduce_rows(rows: List[SparseVector], cols: int) -> Tuple[List[SparseVector], List[int]]:
    pivots: List[int] = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == len(rows):
            break
        found = next((r for r in range(pivot_row, len(rows)) if col in rows[r]), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inverse = 1 / rows[pivot_row][col]
        normalized = {c: v * inverse for c, v in rows[pivot_row].items()}
        rows[pivot_row] = normalized
        for r in range(len(rows)):
            if r != pivot_row and col in rows[r]:
                add_scaled(rows[r], normalized, -rows[r][col])
        pivots.append(col)
        pivot_row += 1
    return rows, pivots


def rref(m: QMat) -> RowReduction:
    """
    Reduced row-echelon form of a matrix.

    Args:
        m (QMat): input matrix

    Returns:
        RowReduction: the unique reduced matrix, its strictly increasing pivot
        columns and the rank
    """
    rows, pivots = _reduce_rows(m.sparse_rows(), m.cols)
    return RowReduction(QMat.from_sparse_rows(rows, m.cols), tuple(pivots), len(pivots))


def rank(m: QMat) -> int:
    return rref(m).rank


def sparse_kernel_basis(m: QMat) -> List[SparseVector]:
    """Right null space basis in sparse form; see :func:`kernel_basis`."""
    rows, pivots = _reduce_rows(m.sparse_rows(), m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = {f: {f: Fraction(1)} for f in free}
    for row, pivot in zip(rows, pivots):
        for c, value in row.items():
            if c != pivot:
                basis[c][pivot] = -value
    return [basis[f] for f in free]


def kernel_basis(m: QMat) -> List[Vector]:
    """
    Basis of the right null space {v : m.v = 0}.

    Each vector carries a 1 in one free column of the rref and zeros in the
    other free columns; vectors are ordered by that free column.
    """
    return [dense(v, m.cols) for v in sparse_kernel_basis(m)]


def column_space_basis(m: QMat) -> List[SparseVector]:
    """Canonical basis of the column space: nonzero rows of rref(m^T)."""
    reduced = rref(m.transpose())
    return [row for row in reduced.matrix.sparse_rows()[:reduced.rank]]


class Echelon:
    """
    Incrementally built echelon basis that remembers how each row was formed.

    Every inserted vector gets a label; reducing a vector returns the
    remainder and the coefficients expressing the reduced part through the
    labelled vectors.
    """

    def __init__(self):
        self._rows: Dict[int, Tuple[SparseVector, Dict[Hashable, Fraction]]] = {}
        self._order: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: AnyVector) -> Tuple[SparseVector, Dict[Hashable, Fraction]]:
        """Return (remainder, coefficients) with vector = remainder + sum(coefficients * labelled)."""
        remainder = sparse(vector)
        combination: Dict[Hashable, Fraction] = {}
        for pivot in self._order:
            factor = remainder.get(pivot)
            if not factor:
                continue
            row, row_combination = self._rows[pivot]
            add_scaled(remainder, row, -factor)
            for label, value in row_combination.items():
                updated = combination.get(label, Fraction(0)) + factor * value
                if updated:
                    combination[label] = updated
                else:
                    combination.pop(label, None)
        return remainder, combination

    def insert(self, vector: AnyVector, label: Hashable) -> bool:
        """Add a vector; returns False (and stores nothing) if it is already in the span."""
        remainder, combination = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder)
        scale = 1 / remainder[pivot]
        row = {c: v * scale for c, v in remainder.items()}
        row_combination = {k: -v * scale for k, v in combination.items()}
        row_combination[label] = row_combination.get(label, Fraction(0)) + scale
        self._rows[pivot] = (row, row_combination)
        self._order.append(pivot)
        self._order.sort()
        return True

    def contains(self, vector: AnyVector) -> bool:
        remainder, _ = self.reduce(vector)
        return not remainder


class CosetProjection:
    """
    Linear map from the cycle space to coordinates in a quotient basis.

    Calling it on a vector outside the cycle span raises ValueError.
    """

    def __init__(self, echelon: Echelon, quotient_labels: Sequence[Hashable]):
        self._echelon = echelon
        self._labels = tuple(quotient_labels)

    @property
    def dimension(self) -> int:
        return len(self._labels)

    def __call__(self, vector: AnyVector) -> Vector:
        remainder, combination = self._echelon.reduce(vector)
        if remainder:
            raise ValueError("Vector does not lie in the cycle space")
        return tuple(combination.get(label, Fraction(0)) for label in self._labels)


def coset_representatives(space_dim: int, subspace_basis: Sequence[AnyVector],
                          cycle_basis: Sequence[AnyVector]) -> Tuple[List[AnyVector], CosetProjection]:
    """
    Choose representatives for span(cycles) / span(subspace).

    Args:
        space_dim (int): dimension of the ambient space
        subspace_basis (Sequence): spanning vectors of the subspace (e.g. boundaries)
        cycle_basis (Sequence): spanning vectors of the cycle space

    Returns:
        Tuple[List, CosetProjection]: the cycle vectors picked by pivoting, in
        input order, and the projection onto coordinates in that basis

    Raises:
        ValueError: If the subspace is not contained in the cycle span
    """
    for vector in list(subspace_basis) + list(cycle_basis):
        if sparse(vector) and max(sparse(vector)) >= space_dim:
            raise ValueError(f"Vector index out of range for dimension {space_dim}")

    cycles = Echelon()
    for i, vector in enumerate(cycle_basis):
        cycles.insert(vector, i)
    for vector in subspace_basis:
        if not cycles.contains(vector):
            raise ValueError("Subspace is not contained in the span of the cycle basis")

    echelon = Echelon()
    for i, vector in enumerate(subspace_basis):
        echelon.insert(vector, ("subspace", i))
    chosen: List[AnyVector] = []
    labels: List[Hashable] = []
    for i, vector in enumerate(cycle_basis):
        label = ("quotient", i)
        if echelon.insert(vector, label):
            chosen.append(vector)
            labels.append(label)
    return chosen, CosetProjection(echelon, labels)

