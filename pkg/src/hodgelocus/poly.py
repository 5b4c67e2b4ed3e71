"""Homogeneous polynomials in ``v = 2n+2`` variables and graded monomial bases.

Monomials are exponent tuples.  Inside a graded piece they are ordered
graded-lexicographically with ``x0 > x1 > ...``, so ``x0^k`` always comes
first.  That order fixes every canonical basis and every RREF pivot the
package reports.
"""

from __future__ import annotations

from contextlib import contextmanager
from functools import lru_cache
from math import comb
from types import MappingProxyType

import numpy as np

from .errors import ResourceError, UsageError
from .field import FieldSpec

#: Largest graded piece (number of monomials) any operation will enumerate.
MAX_DIM = 100_000

Monomial = tuple


def nvars(n: int) -> int:
    return 2 * n + 2


def piece_dimension(n: int, k: int) -> int:
    """``dim S^k`` for ``2n+2`` variables."""
    if k < 0:
        return 0
    v = nvars(n)
    return comb(k + v - 1, v - 1)


def _compositions(k: int, v: int):
    if v == 1:
        yield (k,)
        return
    for e in range(k, -1, -1):
        for rest in _compositions(k - e, v - 1):
            yield (e,) + rest


class GradedBasis:
    """All degree-``k`` monomials in ``2n+2`` variables, graded-lex ordered."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.nvars = nvars(n)
        self.monomials = tuple(_compositions(k, self.nvars))
        self.exponents = np.array(self.monomials, dtype=np.int64).reshape(-1, self.nvars)
        self._base = k + 1
        # descending keys in graded-lex order; reversed copy for searchsorted
        self.keys = self.encode(self.exponents)
        self._asc = self.keys[::-1].copy()

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def __repr__(self):
        return f"GradedBasis(n={self.n}, k={self.k}, dim={len(self)})"

    def __eq__(self, other):
        return isinstance(other, GradedBasis) and (self.n, self.k) == (other.n, other.k)

    def __hash__(self):
        return hash((GradedBasis, self.n, self.k))

    def encode(self, exps: np.ndarray) -> np.ndarray:
        weights = self._base ** np.arange(self.nvars - 1, -1, -1, dtype=np.int64)
        return np.asarray(exps, dtype=np.int64) @ weights

    def index(self, exps) -> np.ndarray:
        """Positions of monomials (array of shape ``(..., v)``) in this basis."""
        exps = np.asarray(exps, dtype=np.int64)
        if exps.size and (exps.sum(axis=-1) != self.k).any():
            raise UsageError(f"monomial of wrong degree for S^{self.k}")
        keys = self.encode(exps)
        pos = np.searchsorted(self._asc, keys)
        return len(self) - 1 - pos

    def position(self, mono: Monomial) -> int:
        return int(self.index(np.array(mono))[()])


@contextmanager
def dimension_cap(cap: int):
    """Temporarily change :data:`MAX_DIM`."""
    global MAX_DIM
    if cap < 1:
        raise UsageError("dimension cap must be positive")
    old, MAX_DIM = MAX_DIM, cap
    try:
        yield cap
    finally:
        MAX_DIM = old


@lru_cache(maxsize=256)
def _basis(n: int, k: int) -> GradedBasis:
    return GradedBasis(n, k)


def mono_basis(n: int, k: int, max_dim: int | None = None) -> GradedBasis:
    """Graded-lex basis of ``S_n^k``.

    Raises :class:`ResourceError` when ``C(k+2n+1, 2n+1)`` exceeds the cap.
    """
    if n < 0:
        raise UsageError("n must be non-negative")
    if k < 0:
        raise UsageError("degree must be non-negative")
    cap = MAX_DIM if max_dim is None else max_dim
    size = piece_dimension(n, k)
    if size > cap:
        raise ResourceError(f"S^{k} in {nvars(n)} variables has {size} monomials (cap {cap})")
    return _basis(n, k)


def _format_mono(mono) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


class HomoPoly:
    """A homogeneous polynomial of fixed degree with exact coefficients.

    Stored sparsely as ``{exponent tuple: coefficient}``; zero coefficients
    are never stored, so two polynomials are equal exactly when their term
    maps are.  Instances are immutable.
    """

    __slots__ = ("n", "degree", "field", "_terms", "_hash")

    def __init__(self, n: int, degree: int, terms=None, field: FieldSpec | None = None):
        field = field or FieldSpec.prime()
        v = nvars(n)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != v:
                raise UsageError(f"monomial {mono} does not have {v} exponents")
            if min(mono) < 0:
                raise UsageError(f"negative exponent in {mono}")
            if sum(mono) != degree:
                raise UsageError(f"monomial {mono} is not of degree {degree}")
            c = field(c)
            if mono in clean:
                c = field.add(clean[mono], c)
            if c != 0:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.n = n
        self.degree = degree
        self.field = field
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def variable(cls, n: int, i: int, field: FieldSpec | None = None) -> HomoPoly:
        mono = [0] * nvars(n)
        mono[i] = 1
        return cls(n, 1, {tuple(mono): 1}, field)

    @classmethod
    def monomial(cls, n, mono, coeff=1, field=None) -> HomoPoly:
        return cls(n, sum(mono), {tuple(mono): coeff}, field)

    @classmethod
    def zero(cls, n: int, degree: int, field: FieldSpec | None = None) -> HomoPoly:
        return cls(n, degree, {}, field)

    @classmethod
    def from_vector(cls, basis: GradedBasis, vec, field: FieldSpec) -> HomoPoly:
        terms = {basis[i]: vec[i] for i in np.flatnonzero(np.asarray(vec) != 0)}
        return cls(basis.n, basis.k, terms, field)

    # accessors

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return nvars(self.n)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, mono) -> object:
        return self._terms.get(tuple(mono), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def exponent_array(self) -> np.ndarray:
        return np.array(list(self._terms), dtype=np.int64).reshape(-1, self.nvars)

    def coefficient_array(self) -> np.ndarray:
        return self.field.asarray(list(self._terms.values()))

    def to_vector(self, basis: GradedBasis | None = None) -> np.ndarray:
        """Dense coordinates over the graded-lex basis of ``S^degree``."""
        basis = basis or mono_basis(self.n, self.degree)
        if basis.k != self.degree or basis.n != self.n:
            raise UsageError("basis does not match the polynomial's degree")
        vec = self.field.zeros(len(basis))
        if self._terms:
            vec[basis.index(self.exponent_array())] = self.coefficient_array()
        return vec

    # arithmetic

    def _check(self, other: HomoPoly):
        if not isinstance(other, HomoPoly):
            raise UsageError("expected a HomoPoly")
        if other.n != self.n or other.field != self.field:
            raise UsageError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise UsageError("cannot add polynomials of different degrees")
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = self.field.add(terms.get(mono, 0), c)
        return HomoPoly(self.n, self.degree, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return HomoPoly(self.n, self.degree, {m: f.neg(c) for m, c in self._terms.items()}, f)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HomoPoly:
        f = self.field
        c = f(c)
        return HomoPoly(self.n, self.degree, {m: f.mul(c, a) for m, a in self._terms.items()}, f)

    def __mul__(self, other):
        if not isinstance(other, HomoPoly):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative power")
        out = HomoPoly(self.n, 0, {(0,) * self.nvars: 1}, self.field)
        for _ in range(e):
            out = out * self
        return out

    def partial(self, i: int) -> HomoPoly:
        return partial_derivative(self, i)

    def __eq__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        if (self.n, self.field) != (other.n, other.field):
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            items = frozenset(self._terms.items())
            self._hash = hash((self.n, self.degree if items else None, self.field, items))
        return self._hash

    def __call__(self, *point):
        """Evaluate at a point (coordinates coerced into the field)."""
        f = self.field
        total = f.zero
        pt = [f(x) for x in point]
        for mono, c in self._terms.items():
            term = c
            for x, e in zip(pt, mono):
                if e:
                    term = f.mul(term, x ** e if f.is_rational else pow(x, e, f.p))
            total = f.add(total, term)
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for mono in sorted(self._terms, reverse=True):
            c = self.field.signed(self._terms[mono])
            neg = c < 0
            a = -c if neg else c
            body = _format_mono(mono)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            if out:
                out.append(("- " if neg else "+ ") + text)
            else:
                out.append(("-" if neg else "") + text)
        return " ".join(out)

    def __repr__(self):
        return f"HomoPoly(n={self.n}, degree={self.degree}, {self})"


def poly_mul(f: HomoPoly, g: HomoPoly) -> HomoPoly:
    """Exact product of two homogeneous polynomials."""
    if not isinstance(f, HomoPoly) or not isinstance(g, HomoPoly):
        raise UsageError("poly_mul expects two HomoPoly values")
    if f.n != g.n or f.field != g.field:
        raise UsageError("polynomials live in different rings")
    fld = f.field
    terms: dict = {}
    for ma, ca in f._terms.items():
        for mb, cb in g._terms.items():
            mono = tuple(a + b for a, b in zip(ma, mb))
            terms[mono] = fld.add(terms.get(mono, 0), fld.mul(ca, cb))
    return HomoPoly(f.n, f.degree + g.degree, terms, fld)


def partial_derivative(f: HomoPoly, i: int) -> HomoPoly:
    """Formal partial derivative with respect to ``x_i``."""
    if not 0 <= i < f.nvars:
        raise UsageError(f"variable index {i} out of range for {f.nvars} variables")
    terms = {}
    for mono, c in f._terms.items():
        e = mono[i]
        if e:
            m = list(mono)
            m[i] -= 1
            terms[tuple(m)] = f.field.mul(c, e)
    return HomoPoly(f.n, max(f.degree - 1, 0), terms, f.field)


def variables(n: int, field: FieldSpec | None = None) -> tuple[HomoPoly, ...]:
    """The coordinate functions ``x0, ..., x_{2n+1}``."""
    return tuple(HomoPoly.variable(n, i, field) for i in range(nvars(n)))


def random_poly(n: int, k: int, rng: np.random.Generator, field: FieldSpec,
                coeff_range: int = 5) -> HomoPoly:
    """Dense polynomial with integer coefficients drawn uniformly from
    ``[-coeff_range, coeff_range]``.

    Coefficients are integers on purpose: the same seed gives the same
    polynomial over every field, which is what cross-field checks compare.
    """
    basis = mono_basis(n, k)
    coeffs = rng.integers(-coeff_range, coeff_range + 1, size=len(basis))
    return HomoPoly(n, k, {m: int(c) for m, c in zip(basis, coeffs) if c}, field)


def random_combination(gens, degree: int, rng: np.random.Generator,
                       coeff_range: int = 5) -> HomoPoly:
    """Random element of the degree-``degree`` piece of the ideal ``(gens)``."""
    gens = list(gens)
    first = gens[0]
    total = HomoPoly.zero(first.n, degree, first.field)
    for g in gens:
        if g.degree > degree:
            continue
        total = total + g * random_poly(g.n, degree - g.degree, rng, g.field, coeff_range)
    return total
