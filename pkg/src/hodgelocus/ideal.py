"""Homogeneous ideals given by generators.

The degree-``k`` piece ``I_k`` is the span of ``m * g`` over generators ``g``
and monomials ``m`` of degree ``k - deg g``; everything else (Hilbert
functions, the regular-sequence test) is rank counting on those pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import NotRegularError, UsageError
from .field import FieldSpec
from .linalg import Subspace, rref_rows
from .poly import HomoPoly, mono_basis, nvars


class IdealGens:
    """A homogeneous ideal presented by nonzero generators of positive degree.

    Degree pieces are cached on the instance, so one ``IdealGens`` should be
    reused across queries.  ``allow_zero`` keeps zero generators in place,
    which a list of partial derivatives may contain.
    """

    def __init__(self, gens, n: int | None = None, field: FieldSpec | None = None,
                 allow_zero: bool = False):
        gens = tuple(gens)
        if not gens and (n is None or field is None):
            raise UsageError("an empty ideal needs explicit n and field")
        if gens:
            n = gens[0].n if n is None else n
            field = gens[0].field if field is None else field
        for g in gens:
            if not isinstance(g, HomoPoly):
                raise UsageError("generators must be HomoPoly values")
            if g.n != n or g.field != field:
                raise UsageError("generators live in different rings")
            if g.is_zero() and not allow_zero:
                raise UsageError("generators must be nonzero")
            if g.degree <= 0:
                raise UsageError("generators must have positive degree")
        self.gens = gens
        self.n = n
        self.field = field
        self._pieces: dict[int, Subspace] = {}

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.gens)

    @property
    def nvars(self) -> int:
        return nvars(self.n)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __eq__(self, other):
        return isinstance(other, IdealGens) and (self.n, self.field, self.gens) == (
            other.n, other.field, other.gens)

    def __hash__(self):
        return hash((self.n, self.field, self.gens))

    def __repr__(self):
        return f"IdealGens(n={self.n}, degrees={self.degrees}, field={self.field})"

    def generator_matrix(self, k: int, max_dim: int | None = None) -> np.ndarray:
        """Rows ``m * g`` for every generator and every monomial multiplier.

        Rows are grouped by generator (in order) and, within a generator, by
        the graded-lex order of the multiplier.
        """
        target = mono_basis(self.n, k, max_dim)
        blocks = []
        for g in self.gens:
            if g.degree > k or g.is_zero():
                continue
            mult = mono_basis(self.n, k - g.degree, max_dim)
            exps = g.exponent_array()
            cols = target.index(mult.exponents[:, None, :] + exps[None, :, :])
            block = self.field.zeros((len(mult), len(target)))
            rows = np.repeat(np.arange(len(mult)), exps.shape[0])
            block[rows, cols.reshape(-1)] = np.tile(g.coefficient_array(), len(mult))
            blocks.append(block)
        if not blocks:
            return self.field.zeros((0, len(target)))
        return np.concatenate(blocks, axis=0)

    def piece(self, k: int, max_dim: int | None = None) -> Subspace:
        """``I_k`` as a canonical subspace of ``S^k`` (cached)."""
        if k < 0:
            raise UsageError("degree must be non-negative")
        if k not in self._pieces:
            basis = mono_basis(self.n, k, max_dim)
            rows, piv = rref_rows(self.generator_matrix(k, max_dim), self.field)
            self._pieces[k] = Subspace(rows, self.field, basis, canonical=True, pivots=piv)
        return self._pieces[k]


def ideal_degree_piece(ideal: IdealGens, k: int, max_dim: int | None = None) -> Subspace:
    return ideal.piece(k, max_dim)


def ideal_codim(ideal: IdealGens, k: int, max_dim: int | None = None) -> int:
    """``dim S^k - dim I_k``."""
    return ideal.piece(k, max_dim).codim


def socle_degree(ideal: IdealGens) -> int:
    """``N = sum(deg g_i) - v`` for a sequence of ``v`` forms."""
    return sum(ideal.degrees) - ideal.nvars


def regularity_failure(ideal: IdealGens, max_dim: int | None = None) -> int | None:
    """First degree where the Artinian vanishing test fails, or ``None``.

    ``S/I`` vanishes in degree ``N+2`` as soon as it vanishes in degree
    ``N+1`` (``I_{N+2}`` contains ``S^1 I_{N+1}``), so a single rank
    computation decides both degrees.
    """
    if len(ideal) != ideal.nvars:
        raise UsageError(f"need exactly {ideal.nvars} generators, got {len(ideal)}")
    top = socle_degree(ideal) + 1
    return None if ideal.piece(top, max_dim).codim == 0 else top


def is_regular_sequence(ideal: IdealGens, max_dim: int | None = None) -> bool:
    """True when the ``2n+2`` generators have no common projective zero."""
    return regularity_failure(ideal, max_dim) is None


def require_regular(ideal: IdealGens, max_dim: int | None = None) -> int:
    """Return the socle degree, or raise :class:`NotRegularError`."""
    bad = regularity_failure(ideal, max_dim)
    if bad is not None:
        raise NotRegularError(
            f"generators are not a regular sequence: S/I is nonzero in degree {bad}", bad)
    return socle_degree(ideal)


@dataclass(frozen=True)
class HilbertData:
    """``dim (S/I)_k`` for ``k = 0..len(values)-1``.

    ``socle_degree`` is the last nonzero degree when a zero degree was seen
    (the quotient is then Artinian), otherwise ``None``.
    """

    values: tuple[int, ...]
    socle_degree: int | None

    @property
    def is_artinian(self) -> bool:
        return self.socle_degree is not None

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def hilbert_function(ideal: IdealGens, up_to: int, max_dim: int | None = None) -> HilbertData:
    if up_to < 0:
        raise UsageError("up_to must be non-negative")
    values = []
    socle = None
    for k in range(up_to + 1):
        if socle is not None:
            values.append(0)  # once zero, always zero
            continue
        values.append(ideal.piece(k, max_dim).codim)
        if values[-1] == 0 and k > 0:
            socle = k - 1
    return HilbertData(tuple(values), socle)


def ci_hilbert_series(degrees, v: int, up_to: int) -> list[int]:
    """Coefficients of ``prod(1 - t^d_i) / (1 - t)^v`` up to ``t^up_to``."""
    degrees = list(degrees)
    if any(d <= 0 for d in degrees):
        raise UsageError("degrees must be positive")
    num = [1] + [0] * up_to
    for d in degrees:
        for k in range(up_to, d - 1, -1):
            num[k] -= num[k - d]
    free = [comb(k + v - 1, v - 1) for k in range(up_to + 1)]
    return [sum(num[j] * free[k - j] for j in range(k + 1)) for k in range(up_to + 1)]
