"""Graded quotients ``S/I``, Jacobian rings and Macaulay duality.

Coset representatives in degree ``k`` are the *standard monomials*: the
columns of ``S^k`` that are not pivots of the RREF of ``I_k``.  The normal
form of a vector ``v`` is ``v[std] - v[piv] @ R[:, std]`` where ``R`` holds
the RREF rows; it vanishes exactly on ``I_k``.

For an Artinian Gorenstein quotient with socle degree ``s`` there is a
single standard monomial in degree ``s``, and the normal form in that degree
*is* the socle functional: it takes the value 1 on that monomial and
vanishes on ``I_s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import NotRegularError, SingularHypersurfaceError, UsageError
from .ideal import IdealGens, regularity_failure, socle_degree
from .linalg import ExactMatrix, rank
from .poly import GradedBasis, HomoPoly, mono_basis, partial_derivative


class GradedQuotient:
    """``S/I`` degree by degree, with standard-monomial coset bases."""

    def __init__(self, ideal: IdealGens, max_dim: int | None = None):
        self.ideal = ideal
        self.n = ideal.n
        self.field = ideal.field
        self.max_dim = max_dim
        self._std: dict[int, np.ndarray] = {}

    def basis(self, k: int) -> GradedBasis:
        return mono_basis(self.n, k, self.max_dim)

    def relations(self, k: int):
        """``I_k`` as a canonical subspace (cached by the ideal)."""
        return self.ideal.piece(k, self.max_dim)

    def standard(self, k: int) -> np.ndarray:
        """Indices (into ``basis(k)``) of the standard monomials."""
        if k not in self._std:
            rel = self.relations(k)
            mask = np.ones(rel.ambient_dim, dtype=bool)
            mask[rel.pivots] = False
            self._std[k] = np.flatnonzero(mask)
        return self._std[k]

    def standard_monomials(self, k: int) -> list[tuple]:
        basis = self.basis(k)
        return [basis[i] for i in self.standard(k)]

    def dim(self, k: int) -> int:
        if k < 0:
            return 0
        return len(self.standard(k))

    def coords(self, k: int, vectors) -> np.ndarray:
        """Normal-form coordinates of the rows of ``vectors`` (over ``S^k``)."""
        f = self.field
        vectors = f.asarray(vectors)
        single = vectors.ndim == 1
        if single:
            vectors = vectors.reshape(1, -1)
        rel = self.relations(k)
        std = self.standard(k)
        out = vectors[:, std]
        if rel.dim:
            out = f.reduce(out - f.matmul(vectors[:, rel.pivots], rel.basis[:, std]))
        return out[0] if single else out

    def normal_form(self, poly: HomoPoly) -> HomoPoly:
        """The standard-monomial representative of ``poly`` modulo ``I``."""
        self._check_poly(poly)
        k = poly.degree
        vals = self.coords(k, poly.to_vector(self.basis(k)))
        full = self.field.zeros(len(self.basis(k)))
        full[self.standard(k)] = vals
        return HomoPoly.from_vector(self.basis(k), full, self.field)

    def contains(self, poly: HomoPoly) -> bool:
        """Membership of a homogeneous polynomial in ``I``."""
        self._check_poly(poly)
        return not self.coords(poly.degree, poly.to_vector(self.basis(poly.degree))).any()

    def _check_poly(self, poly: HomoPoly):
        if poly.n != self.n or poly.field != self.field:
            raise UsageError("polynomial lives in a different ring")


@dataclass(frozen=True)
class SocleFunctional:
    """A linear form on ``S^s`` vanishing exactly on ``I_s``.

    ``values[j]`` is the value on the ``j``-th monomial of ``basis``; the
    value on ``anchor`` (the unique standard monomial) is 1.
    """

    basis: GradedBasis
    values: np.ndarray = dc_field(repr=False)
    anchor: tuple

    @property
    def degree(self) -> int:
        return self.basis.k

    def on_exponents(self, exps) -> np.ndarray:
        """Values on monomials given as an exponent array ``(..., v)``."""
        return self.values[self.basis.index(exps)]

    def __call__(self, poly: HomoPoly):
        vec = poly.to_vector(self.basis)
        if poly.field.is_rational:
            return sum((a * b for a, b in zip(vec, self.values) if a != 0), poly.field.zero)
        return int(poly.field.matmul(vec.reshape(1, -1), self.values.reshape(-1, 1))[0, 0])


class ArtinianQuotient(GradedQuotient):
    """``S/(G_0..G_{2n+1})`` for a regular sequence, socle degree ``sum deg - v``."""

    def __init__(self, ideal: IdealGens, max_dim: int | None = None):
        super().__init__(ideal, max_dim)
        bad = regularity_failure(ideal, max_dim)
        if bad is not None:
            raise self._not_regular(bad)
        self.socle_degree = socle_degree(ideal)
        self._socle = None

    def _not_regular(self, degree):
        return NotRegularError(
            f"generators are not a regular sequence: S/I is nonzero in degree {degree}", degree)

    def dim(self, k: int) -> int:
        if k < 0 or k > self.socle_degree:
            return 0
        return super().dim(k)

    def socle_functional(self) -> SocleFunctional:
        if self._socle is None:
            s = self.socle_degree
            std = self.standard(s)
            if len(std) != 1:
                raise UsageError(f"quotient has dimension {len(std)} in its socle degree")
            basis = self.basis(s)
            values = self.field.zeros(len(basis))
            values[std[0]] = self.field.one
            rel = self.relations(s)
            if rel.dim:
                values[rel.pivots] = self.field.reduce(-rel.basis[:, std[0]])
            self._socle = SocleFunctional(basis, values, basis[std[0]])
        return self._socle

    def pairing_matrix(self, k: int) -> ExactMatrix:
        """``lambda(b_i * c_j)`` for standard monomials of degrees ``k`` and ``s-k``."""
        s = self.socle_degree
        if not 0 <= k <= s:
            raise UsageError(f"degree {k} outside 0..{s}")
        lam = self.socle_functional()
        left = self.basis(k).exponents[self.standard(k)]
        right = self.basis(s - k).exponents[self.standard(s - k)]
        vals = lam.on_exponents(left[:, None, :] + right[None, :, :])
        return ExactMatrix(vals, self.field)


def jacobian_ideal(F: HomoPoly) -> IdealGens:
    """The ``2n+2`` partial derivatives of ``F``, in variable order."""
    if F.degree < 2:
        raise UsageError("the hypersurface must have degree at least 2")
    parts = [partial_derivative(F, i) for i in range(F.nvars)]
    return IdealGens(parts, F.n, F.field, allow_zero=True)


def smoothness_check(F: HomoPoly, max_dim: int | None = None) -> bool:
    """True when the partials of ``F`` have no common zero."""
    return regularity_failure(jacobian_ideal(F), max_dim) is None


class JacobianRing(ArtinianQuotient):
    """``R_F = S/J_F`` for a smooth hypersurface ``F`` of degree ``d``.

    ``N = (n+1)d - (2n+2)`` and the socle degree is ``2N``.
    """

    def __init__(self, F: HomoPoly, max_dim: int | None = None):
        self.F = F
        self.d = F.degree
        self.N = (F.n + 1) * F.degree - (2 * F.n + 2)
        super().__init__(jacobian_ideal(F), max_dim)

    def _not_regular(self, degree):
        return SingularHypersurfaceError(
            f"hypersurface is singular: R_F is nonzero in degree {degree}", degree)

    @property
    def sigma(self) -> int:
        return self.socle_degree

    def __repr__(self):
        return f"JacobianRing(n={self.n}, d={self.d}, N={self.N}, field={self.field})"


def quotient_dim(ring: GradedQuotient, k: int) -> int:
    return ring.dim(k)


def pairing_matrix(ring: ArtinianQuotient, k: int) -> ExactMatrix:
    return ring.pairing_matrix(k)


@dataclass
class MacaulayReport:
    """Outcome of the duality check for one Artinian complete intersection."""

    socle_degree: int
    dims: tuple[int, ...]
    pairing_ranks: dict[int, int]
    failures: list[tuple[int, str]]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def top_dim(self) -> int:
        return self.dims[self.socle_degree]

    @property
    def failed_degree(self) -> int | None:
        return self.failures[0][0] if self.failures else None


def macaulay_verify(ideal: IdealGens | ArtinianQuotient, max_dim: int | None = None
                    ) -> MacaulayReport:
    """Check that ``dim H^N = 1`` and every pairing ``H^k x H^{N-k}`` is perfect.

    Raises :class:`NotRegularError` (naming the degree where ``S/I`` fails
    to vanish) when the generators are not a regular sequence.
    """
    ring = ideal if isinstance(ideal, ArtinianQuotient) else ArtinianQuotient(ideal, max_dim)
    s = ring.socle_degree
    dims = tuple(ring.dim(k) for k in range(s + 1))
    failures = []
    if dims[s] != 1:
        failures.append((s, f"socle degree piece has dimension {dims[s]}"))
        return MacaulayReport(s, dims, {}, failures)
    ranks = {}
    for k in range(s // 2 + 1):
        if dims[k] != dims[s - k]:
            failures.append((k, f"dimensions {dims[k]} and {dims[s - k]} differ"))
            continue
        r = rank(ring.pairing_matrix(k))
        ranks[k] = r
        if r != dims[k]:
            failures.append((k, f"pairing has rank {r} < {dims[k]}"))
    return MacaulayReport(s, dims, ranks, failures)
