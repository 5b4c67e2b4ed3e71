"""Exact linear algebra over a :class:`~hodgelocus.field.FieldSpec`.

Everything here is deterministic: the reduced row echelon form is unique,
and subspaces are always stored by their RREF basis, so two equal subspaces
compare equal entry by entry.
"""

from __future__ import annotations

import numpy as np

from . import _modp, _rational
from .errors import MembershipError, UsageError
from .field import FieldSpec
from .poly import GradedBasis


class ExactMatrix:
    """A rectangular matrix with entries in an exact field."""

    __slots__ = ("field", "data")

    def __init__(self, data, field: FieldSpec):
        arr = data if isinstance(data, np.ndarray) else np.array(data, dtype=object)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise UsageError("ExactMatrix needs a two-dimensional array")
        self.field = field
        self.data = field.asarray(arr)

    @property
    def shape(self):
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(self.data.T.copy(), self.field)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if other.field != self.field:
            raise UsageError("matrices over different fields")
        return ExactMatrix(self.field.matmul(self.data, other.data), self.field)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    def __hash__(self):
        return hash((self.field, self.shape, tuple(self.data.reshape(-1).tolist())))

    def tolist(self):
        return [[self.field.signed(x) for x in row] for row in self.data]

    def __repr__(self):
        return f"ExactMatrix({self.tolist()}, field={self.field})"


def _as_array(m, field: FieldSpec | None):
    if isinstance(m, ExactMatrix):
        return m.data, m.field
    if field is None:
        raise UsageError("a field is required for a plain array")
    arr = field.asarray(m)
    return arr, field


def rref_rows(data: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Nonzero rows of the RREF and the pivot columns (array level)."""
    if data.ndim != 2:
        raise UsageError("expected a matrix")
    if data.shape[0] == 0 or data.shape[1] == 0:
        return field.zeros((0, data.shape[1])), []
    if field.is_rational:
        return _rational.rref_rational(data)
    return _modp.rref_mod(data, field.p)


def rref(m, field: FieldSpec | None = None) -> tuple[int, ExactMatrix]:
    """Canonical reduced row echelon form.

    Returns ``(rank, R)`` where ``R`` has the shape of ``m``: the nonzero
    rows in pivot order followed by zero rows.
    """
    data, field = _as_array(m, field)
    rows, piv = rref_rows(data, field)
    out = field.zeros(data.shape)
    out[: len(piv)] = rows
    return len(piv), ExactMatrix(out, field)


def rank(m, field: FieldSpec | None = None) -> int:
    data, field = _as_array(m, field)
    return len(rref_rows(data, field)[1])


def _kernel_rows(rows: np.ndarray, piv: list[int], ncols: int, field: FieldSpec) -> np.ndarray:
    free = [j for j in range(ncols) if j not in set(piv)]
    ker = field.zeros((len(free), ncols))
    for t, j in enumerate(free):
        ker[t, j] = field.one
        if piv:
            col = rows[:, j]
            ker[t, piv] = -col if field.is_rational else np.mod(-col, field.p)
    return ker


def kernel(m, field: FieldSpec | None = None, ambient=None) -> Subspace:
    """Right null space ``{x : m x = 0}`` as a canonical subspace."""
    data, field = _as_array(m, field)
    ncols = data.shape[1]
    rows, piv = rref_rows(data, field)
    ker = _kernel_rows(rows, piv, ncols, field)
    return Subspace(ker, field, ambient if ambient is not None else ncols)


def solve(a, b, field: FieldSpec | None = None) -> np.ndarray:
    """A particular solution of ``a x = b`` (free variables set to zero).

    Raises :class:`MembershipError` if the system is inconsistent.
    """
    data, field = _as_array(a, field)
    rhs = field.asarray(b).reshape(-1, 1)
    if rhs.shape[0] != data.shape[0]:
        raise UsageError("right-hand side has the wrong length")
    aug = np.concatenate([data, rhs], axis=1)
    rows, piv = rref_rows(aug, field)
    n = data.shape[1]
    if piv and piv[-1] == n:
        raise MembershipError("linear system is inconsistent")
    x = field.zeros(n)
    for t, c in enumerate(piv):
        x[c] = rows[t, n]
    return x


class Subspace:
    """A linear subspace of ``k^N`` stored by its canonical RREF basis.

    ``ambient`` is either a :class:`GradedBasis` (the subspace then lives in
    a graded piece ``S^k``) or a plain integer dimension.
    """

    __slots__ = ("field", "basis", "pivots", "ambient", "_ann")

    def __init__(self, vectors, field: FieldSpec, ambient, canonical: bool = False,
                 pivots=None):
        self.field = field
        self.ambient = ambient
        n = self.ambient_dim
        arr = field.asarray(vectors) if not isinstance(vectors, np.ndarray) else vectors
        if arr.size == 0:
            arr = field.zeros((0, n))
        if arr.ndim != 2 or arr.shape[1] != n:
            raise UsageError(f"vectors must have length {n}")
        if canonical:
            self.basis, self.pivots = arr, list(pivots)
        else:
            self.basis, self.pivots = rref_rows(arr, field)
        self._ann = None

    @classmethod
    def zero(cls, field, ambient) -> Subspace:
        n = ambient if isinstance(ambient, int) else len(ambient)
        return cls(field.zeros((0, n)), field, ambient, canonical=True, pivots=[])

    @classmethod
    def full(cls, field, ambient) -> Subspace:
        n = ambient if isinstance(ambient, int) else len(ambient)
        return cls(field.eye(n), field, ambient, canonical=True, pivots=list(range(n)))

    @property
    def ambient_dim(self) -> int:
        return self.ambient if isinstance(self.ambient, int) else len(self.ambient)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def __len__(self):
        return self.dim

    def _check(self, other: Subspace):
        if not isinstance(other, Subspace):
            raise UsageError("expected a Subspace")
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            raise UsageError("subspaces live in different ambient spaces")
        if (isinstance(self.ambient, GradedBasis) and isinstance(other.ambient, GradedBasis)
                and self.ambient != other.ambient):
            raise UsageError("subspaces live in different graded pieces")

    def annihilator(self) -> np.ndarray:
        """Rows spanning ``{w : w . v = 0 for v in self}``."""
        if self._ann is None:
            self._ann = _kernel_rows(self.basis, self.pivots, self.ambient_dim, self.field)
        return self._ann

    def contains_vectors(self, vectors) -> bool:
        vectors = self.field.asarray(vectors)
        if vectors.ndim == 1:
            vectors = vectors.reshape(1, -1)
        if vectors.shape[0] == 0:
            return True
        ann = self.annihilator()
        if ann.shape[0] == 0:
            return True
        prod = self.field.matmul(ann, vectors.T.copy())
        return not bool(np.any(prod != 0))

    def contains(self, other: Subspace) -> bool:
        """``other`` is a subset of ``self``."""
        self._check(other)
        return self.contains_vectors(other.basis)

    def __contains__(self, vector):
        return self.contains_vectors(vector)

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        stacked = np.concatenate([self.annihilator(), other.annihilator()], axis=0)
        return kernel(ExactMatrix(stacked, self.field), ambient=self.ambient)

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(np.concatenate([self.basis, other.basis], axis=0), self.field,
                        self.ambient)

    __and__ = intersect
    __add__ = sum

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def __ge__(self, other: Subspace) -> bool:
        return self.contains(other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and bool(np.all(self.basis == other.basis)))

    def __hash__(self):
        return hash((self.field, self.ambient_dim, tuple(self.pivots)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, field={self.field})"


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def contains(a: Subspace, b: Subspace) -> bool:
    """True when ``b`` is contained in ``a``."""
    return a.contains(b)


def codim(a: Subspace) -> int:
    return a.codim
