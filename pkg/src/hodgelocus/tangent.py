"""Tangent spaces to Hodge loci from a class representative ``P``.

For ``h`` in ``S^t`` and ``m`` in ``S^{N-t}``, ``h m P`` lies in
``J_F^{2N}`` exactly when the socle functional ``lambda`` kills it.  Writing
``phi(c) = sum_a P_a lambda(a + c)`` for monomials ``c`` of degree ``N``,

    T_{1,t} = { h = sum_j h_j u_j : sum_j h_j phi(m + u_j) = 0 for all m },

with ``u_j`` running over monomials of degree ``t`` and ``m`` over monomials
of degree ``N-t``.  So ``T_{1,t}`` is the kernel of the catalecticant matrix
``C_t[m, h] = phi(m + h)``.  This is the full stacked system (one row per
``m``) already reduced modulo ``ker lambda``; its size is
``dim S^{N-t} x dim S^t`` and needs no further blocking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .jacobian import JacobianRing
from .linalg import ExactMatrix, Subspace, kernel
from .poly import HomoPoly


class HodgeClassRep:
    """A polynomial ``P`` of degree ``N`` on a Jacobian ring, up to scalar."""

    def __init__(self, ring: JacobianRing, P: HomoPoly):
        if not isinstance(ring, JacobianRing):
            raise UsageError("expected a JacobianRing")
        if P.n != ring.n or P.field != ring.field:
            raise UsageError("class representative lives in a different ring")
        if P.degree != ring.N and not P.is_zero():
            raise UsageError(f"representative must have degree N={ring.N}, got {P.degree}")
        self.ring = ring
        self.P = P if P.degree == ring.N else HomoPoly.zero(ring.n, ring.N, ring.field)
        self._phi = None
        self._t1: dict[int, Subspace] = {}

    @property
    def N(self) -> int:
        return self.ring.N

    @property
    def field(self):
        return self.ring.field

    def __repr__(self):
        return f"HodgeClassRep(N={self.N}, terms={len(self.P)}, ring={self.ring!r})"

    def phi(self) -> np.ndarray:
        """``phi(c) = lambda(c * P)`` for every monomial ``c`` of degree ``N``."""
        if self._phi is None:
            f = self.field
            cols = self.ring.basis(self.N).exponents
            if self.P.is_zero():
                self._phi = f.zeros(len(cols))
            else:
                lam = self.ring.socle_functional()
                vals = lam.on_exponents(cols[:, None, :] + self.P.exponent_array()[None, :, :])
                coeffs = self.P.coefficient_array().reshape(-1, 1)
                self._phi = f.matmul(vals, coeffs).reshape(-1)
        return self._phi

    def coords(self) -> np.ndarray:
        """Coordinates of ``P`` modulo ``J_F`` in the standard basis of ``R^N``."""
        return self.ring.coords(self.N, self.P.to_vector(self.ring.basis(self.N)))

    def is_degenerate(self) -> bool:
        """``P`` lies in ``J_F`` (the primitive class vanishes)."""
        return not self.phi().any()

    def normalized(self) -> HodgeClassRep:
        """Normal form modulo ``J_F``, scaled so its first coordinate is 1."""
        f = self.field
        c = self.coords()
        nz = np.flatnonzero(c != 0)
        full = f.zeros(len(self.ring.basis(self.N)))
        if nz.size:
            inv = f.inv(c[nz[0]])
            full[self.ring.standard(self.N)] = f.mul_arrays(c, inv)
        return HodgeClassRep(self.ring, HomoPoly.from_vector(self.ring.basis(self.N), full, f))

    def scaled(self, a) -> HodgeClassRep:
        return HodgeClassRep(self.ring, self.P.scale(a))

    def catalecticant(self, t: int) -> ExactMatrix:
        """``C_t[m, h] = phi(m + h)`` over monomials of degrees ``N-t`` and ``t``."""
        self._check_degree(t)
        ring = self.ring
        idx = ring.basis(self.N).index(ring.basis(self.N - t).exponents[:, None, :]
                                      + ring.basis(t).exponents[None, :, :])
        return ExactMatrix(self.phi()[idx], self.field)

    def t1(self, t: int) -> Subspace:
        if t not in self._t1:
            self._t1[t] = kernel(self.catalecticant(t), ambient=self.ring.basis(t))
        return self._t1[t]

    def _check_degree(self, t):
        if not 0 <= t <= self.N:
            raise UsageError(f"degree {t} outside 0..N={self.N}")


def linear_combination(reps, coefficients) -> HodgeClassRep:
    """``sum a_i P_i`` for representatives on one Jacobian ring."""
    reps = list(reps)
    coefficients = list(coefficients)
    if not reps or len(reps) != len(coefficients):
        raise UsageError("need one coefficient per representative")
    ring = reps[0].ring
    for r in reps[1:]:
        if r.ring is not ring and r.ring.F != ring.F:
            raise UsageError("representatives live on different hypersurfaces")
    total = HomoPoly.zero(ring.n, ring.N, ring.field)
    for r, a in zip(reps, coefficients):
        total = total + r.P.scale(a)
    return HodgeClassRep(ring, total)


def multiplication_map(rep: HodgeClassRep, k: int) -> ExactMatrix:
    """Matrix of ``. P : R^k -> R^{k+N}`` in the standard coset bases.

    Column ``j`` holds the image of the ``j``-th standard monomial.
    """
    rep._check_degree(k)
    ring = rep.ring
    f = rep.field
    target = ring.basis(k + rep.N)
    left = ring.basis(k).exponents[ring.standard(k)]
    vecs = f.zeros((len(left), len(target)))
    if not rep.P.is_zero():
        exps = rep.P.exponent_array()
        cols = target.index(left[:, None, :] + exps[None, :, :])
        rows = np.repeat(np.arange(len(left)), exps.shape[0])
        vecs[rows, cols.reshape(-1)] = np.tile(rep.P.coefficient_array(), len(left))
    return ExactMatrix(ring.coords(k + rep.N, vecs).T.copy(), f)


def t1_piece(rep: HodgeClassRep, t: int) -> Subspace:
    """``T_{1,t}``: all ``h`` in ``S^t`` with ``h S^{N-t} P`` inside ``J_F^{2N}``."""
    return rep.t1(t)


def t1_piece_via_multiplication(rep: HodgeClassRep, t: int) -> Subspace:
    """``T_{1,t}`` as the preimage in ``S^t`` of ``ker(. P : R^t -> R^{t+N})``.

    Agrees with :func:`t1_piece` by perfectness of the pairing; kept as an
    independent route through a different degree's RREF.
    """
    ring = rep.ring
    f = rep.field
    ker = kernel(multiplication_map(rep, t))
    lifted = f.zeros((ker.dim, len(ring.basis(t))))
    lifted[:, ring.standard(t)] = ker.basis
    rel = ring.relations(t)
    return Subspace(np.concatenate([rel.basis, lifted], axis=0), f, ring.basis(t))


def nl_codim(rep: HodgeClassRep) -> int:
    """Codimension of the tangent space ``T_{1,d}`` in ``S^d``."""
    d = rep.ring.d
    if d > rep.N:
        raise UsageError(f"tangent degree d={d} exceeds N={rep.N}")
    return rep.t1(d).codim


@dataclass(frozen=True)
class DualityResult:
    k: int
    codim: int
    dual_codim: int
    vacuous: bool

    @property
    def passed(self) -> bool:
        return self.codim == self.dual_codim

    def __bool__(self):
        return self.passed


def duality_check(rep: HodgeClassRep, k: int) -> DualityResult:
    """Compare ``codim T_{1,k}`` with ``codim T_{1,N-k}``.

    For a degenerate class (``codim T_{1,N} = 0``) the comparison is
    recorded as vacuous.
    """
    rep._check_degree(k)
    vacuous = rep.t1(rep.N).codim == 0
    return DualityResult(k, rep.t1(k).codim, rep.t1(rep.N - k).codim, vacuous)


def sum_class_containment(reps, coefficients, t: int) -> bool:
    """``intersection of T_{1,t}(P_i)`` is inside ``T_{1,t}(sum a_i P_i)``."""
    reps = list(reps)
    coefficients = list(coefficients)
    if any(reps[0].field(a) == 0 for a in coefficients):
        raise UsageError("coefficients must be nonzero")
    total = linear_combination(reps, coefficients)
    common = reps[0].t1(t)
    for r in reps[1:]:
        common = common & r.t1(t)
    return total.t1(t).contains(common)
