"""Complete-intersection cycles, their class representatives, and liaison.

A surface (or fourfold, ...) ``F = sum P_i Q_i`` contains the complete
intersection ``Z = V(P_0..P_n)``.  The ideal ``I = (P_0..P_n, Q_0..Q_n)``
contains ``J_F`` and is Gorenstein with the same socle degree ``N`` as the
middle of ``R_F``, so its image in ``R_F^N`` is a hyperplane.  The class
representative is the unique (up to scalar) ``P`` with ``I_N P = 0`` in
``R_F^{2N}``.

Curves that are not complete intersections are reached by one linkage
step: if ``V(A, B) = C u C'`` with ``C'`` a complete intersection, the class
of ``C`` sits in the pencil spanned by the representatives of ``C u C'`` and
``C'``, and is singled out there by annihilation of ``I(C)_N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (ConstructionError, DegeneracyError, MembershipError,
                     SingularHypersurfaceError, UsageError, VerificationError)
from .field import FieldSpec
from .ideal import IdealGens, is_regular_sequence
from .jacobian import GradedQuotient, JacobianRing
from .linalg import kernel, solve
from .poly import HomoPoly, mono_basis, random_combination, random_poly, variables
from .tangent import HodgeClassRep, linear_combination, nl_codim

#: Number of seeded draws before a construction gives up.
MAX_RETRIES = 20


def _rng(seed: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng([seed, attempt])


def _smooth_ring(F: HomoPoly, max_dim=None) -> JacobianRing | None:
    try:
        return JacobianRing(F, max_dim)
    except SingularHypersurfaceError:
        return None


@dataclass
class CIData:
    """``F = sum P_i Q_i`` together with its Jacobian ring.

    ``seed`` and ``attempt`` record how a randomly drawn instance was
    produced (``None`` for instances read from files).
    """

    Ps: tuple[HomoPoly, ...]
    Qs: tuple[HomoPoly, ...]
    F: HomoPoly
    ring: JacobianRing = dc_field(repr=False)
    seed: int | None = None
    attempt: int | None = None

    @property
    def d(self) -> int:
        return self.F.degree

    @property
    def N(self) -> int:
        return self.ring.N

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.Ps)

    @property
    def ideal(self) -> IdealGens:
        if not hasattr(self, "_ideal"):
            self._ideal = IdealGens(self.Ps + self.Qs)
        return self._ideal


def _check_ci_shape(Ps, Qs=None):
    Ps = tuple(Ps)
    if not Ps:
        raise UsageError("need at least one P")
    n = Ps[0].n
    if len(Ps) != n + 1:
        raise UsageError(f"a cycle of codimension n+1 needs {n + 1} equations, got {len(Ps)}")
    if Qs is not None and len(tuple(Qs)) != len(Ps):
        raise UsageError("need as many Q's as P's")
    return Ps


def ci_from_polys(Ps, Qs, F: HomoPoly | None = None, ring: JacobianRing | None = None,
                  max_dim: int | None = None) -> CIData:
    """Wrap explicit ``P``'s and ``Q``'s; ``F`` (if given) must equal ``sum P_i Q_i``."""
    Ps = _check_ci_shape(Ps, Qs)
    Qs = tuple(Qs)
    total = sum((p * q for p, q in zip(Ps, Qs)), 0)
    if F is not None and F != total:
        raise UsageError("F differs from sum P_i Q_i")
    F = total if F is None else F
    if len({p.degree + q.degree for p, q in zip(Ps, Qs)}) != 1:
        raise UsageError("every product P_i Q_i must have the same degree")
    if ring is None:
        ring = JacobianRing(F, max_dim)
    elif ring.F != F:
        raise UsageError("Jacobian ring belongs to a different hypersurface")
    ci = CIData(Ps, Qs, F, ring)
    if not is_regular_sequence(ci.ideal, max_dim):
        raise UsageError("P's and Q's do not form a regular sequence")
    return ci


def make_ci_hypersurface(Ps, degrees=None, d: int = 5, seed: int = 0,
                         max_retries: int = MAX_RETRIES, max_dim: int | None = None) -> CIData:
    """Draw seeded ``Q_i`` of degree ``d - e_i`` until ``sum P_i Q_i`` is smooth.

    Raises :class:`ConstructionError` (with the seed trail) when every
    attempt gives a singular hypersurface.
    """
    Ps = _check_ci_shape(Ps)
    es = tuple(p.degree for p in Ps)
    if degrees is not None and tuple(degrees) != es:
        raise UsageError(f"declared degrees {tuple(degrees)} differ from {es}")
    if any(e >= d for e in es):
        raise UsageError(f"every deg P_i must be below d={d}")
    n, field = Ps[0].n, Ps[0].field
    for attempt in range(max_retries):
        rng = _rng(seed, attempt)
        Qs = tuple(random_poly(n, d - e, rng, field) for e in es)
        F = sum((p * q for p, q in zip(Ps, Qs)), 0)
        ring = _smooth_ring(F, max_dim)
        if ring is not None:
            return CIData(Ps, Qs, F, ring, seed, attempt)
    raise ConstructionError(f"no smooth hypersurface in {max_retries} attempts",
                            [(seed, a) for a in range(max_retries)])


def _annihilator_matrix(ring: JacobianRing, rows: np.ndarray) -> np.ndarray:
    """``M[g, u] = lambda(g * u)`` for rows ``g`` over ``S^N``, standard ``u``."""
    N = ring.N
    lam = ring.socle_functional()
    std = ring.basis(N).exponents[ring.standard(N)]
    pair = lam.on_exponents(ring.basis(N).exponents[:, None, :] + std[None, :, :])
    return ring.field.matmul(rows, pair)


def _rep_from_coords(ring: JacobianRing, coords) -> HodgeClassRep:
    full = ring.field.zeros(len(ring.basis(ring.N)))
    full[ring.standard(ring.N)] = coords
    return HodgeClassRep(ring, HomoPoly.from_vector(ring.basis(ring.N), full, ring.field))


def ci_class_rep(ci: CIData) -> HodgeClassRep:
    """The representative ``P`` with ``I_N P = 0`` in ``R_F^{2N}``.

    Returned in normal form (standard monomials of ``R^N``) with first
    nonzero coefficient 1.  Raises :class:`DegeneracyError` when ``I_N``
    does not have codimension 1 or the solution space is not a line.
    """
    ring = ci.ring
    N = ring.N
    piece = ci.ideal.piece(N, ring.max_dim)
    if piece.codim != 1:
        raise DegeneracyError(f"I_N has codimension {piece.codim}, expected 1",
                              piece.codim, ci.seed)
    sol = kernel(_annihilator_matrix(ring, piece.basis), ring.field)
    if sol.dim != 1:
        raise DegeneracyError(f"annihilator of I_N has dimension {sol.dim}, expected 1",
                              sol.dim, ci.seed)
    return _rep_from_coords(ring, sol.basis[0])


@dataclass
class CIVerification:
    """Per-degree comparison of ``T_{1,k}`` with ``I_k``."""

    rows: list[tuple[int, int, int]]  # (k, dim T_{1,k}, dim I_k)
    mismatches: list[int]
    nl_codim: int | None

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_ci_tangent(ci: CIData, rep: HodgeClassRep | None = None, up_to: int | None = None,
                      strict: bool = True) -> CIVerification:
    """Check ``T_{1,k} = I_k`` for ``k = 0..up_to`` (default ``N``).

    With ``strict`` a mismatch raises :class:`VerificationError` naming the
    first failing degree.
    """
    rep = rep if rep is not None else ci_class_rep(ci)
    N = ci.N
    up_to = N if up_to is None else up_to
    if not 0 <= up_to <= N:
        raise UsageError(f"up_to must lie in 0..N={N}")
    rows, bad = [], []
    for k in range(up_to + 1):
        t1 = rep.t1(k)
        ik = ci.ideal.piece(k, ci.ring.max_dim)
        rows.append((k, t1.dim, ik.dim))
        if t1 != ik:
            bad.append(k)
    codim = nl_codim(rep) if ci.d <= N else None
    if strict and bad:
        raise VerificationError(f"T_1 differs from the ideal in degree {bad[0]}", bad[0])
    return CIVerification(rows, bad, codim)


verify_le6 = verify_ci_tangent  # older name, kept as an alias


def decompose_in_ideal(F: HomoPoly, gens) -> tuple[HomoPoly, ...]:
    """Polynomials ``U_i`` with ``F = sum U_i g_i`` (free coefficients zero).

    Raises :class:`MembershipError` when ``F`` is not in ``(gens)``.
    """
    ideal = gens if isinstance(gens, IdealGens) else IdealGens(gens)
    d = F.degree
    if F.n != ideal.n or F.field != ideal.field:
        raise UsageError("polynomial and generators live in different rings")
    field = F.field
    mat = ideal.generator_matrix(d)
    if mat.shape[0] == 0:
        if F.is_zero():
            return tuple(HomoPoly.zero(F.n, max(d - g.degree, 0), field) for g in ideal)
        raise MembershipError("polynomial is not in the ideal")
    x = solve(mat.T.copy(), F.to_vector(mono_basis(F.n, d)), field)
    out = []
    start = 0
    for g in ideal:
        if g.degree > d:
            out.append(HomoPoly.zero(F.n, 0, field))
            continue
        mult = mono_basis(F.n, d - g.degree)
        out.append(HomoPoly.from_vector(mult, x[start:start + len(mult)], field))
        start += len(mult)
    if sum((u * g for u, g in zip(out, ideal) if not u.is_zero()), 0) != F:
        raise MembershipError("decomposition does not reproduce the polynomial")
    return tuple(out)


@dataclass
class LinkData:
    """``V(A, B) = C u C'`` on ``F = A U + B W`` with ``C'`` a complete intersection."""

    curve: IdealGens
    A: HomoPoly
    B: HomoPoly
    U: HomoPoly
    W: HomoPoly
    residual: IdealGens
    F: HomoPoly
    seed: int | None = None
    attempt: int | None = None


def make_link(curve, A: HomoPoly, B: HomoPoly, residual, F: HomoPoly, seed=None,
              attempt=None) -> LinkData:
    """Validate a linkage and decompose ``F`` in ``(A, B)``.

    Checks that ``I(C) I(C')`` lies in ``(A, B)`` on generator products.
    """
    curve = curve if isinstance(curve, IdealGens) else IdealGens(curve)
    residual = residual if isinstance(residual, IdealGens) else IdealGens(residual)
    if len(residual) != residual.n + 1:
        raise UsageError("the residual curve must be a complete intersection "
                         f"with {residual.n + 1} generators")
    ab = GradedQuotient(IdealGens([A, B]))
    for g in curve:
        for h in residual:
            if not ab.contains(g * h):
                raise UsageError("I(C) I(C') is not contained in (A, B)")
    U, W = decompose_in_ideal(F, [A, B])
    return LinkData(curve, A, B, U, W, residual, F, seed, attempt)


def _ci_on(ring: JacobianRing, Ps) -> CIData:
    Qs = decompose_in_ideal(ring.F, Ps)
    return ci_from_polys(Ps, Qs, ring.F, ring)


def linked_class_rep(link: LinkData, ring: JacobianRing | None = None) -> HodgeClassRep:
    """Representative of ``C`` cut out of the pencil ``<P_{C u C'}, P_{C'}>``.

    The member annihilated by ``I(C)_N`` must be unique up to scalar; an
    empty cut or a whole pencil raises :class:`DegeneracyError`.
    """
    ring = ring if ring is not None else JacobianRing(link.F)
    if ring.F != link.F:
        raise UsageError("Jacobian ring belongs to a different hypersurface")
    union = ci_class_rep(ci_from_polys([link.A, link.B], [link.U, link.W], link.F, ring))
    residual = ci_class_rep(_ci_on(ring, list(link.residual)))
    piece = link.curve.piece(ring.N, ring.max_dim)
    cols = [ring.field.matmul(piece.basis, r.phi().reshape(-1, 1)) for r in (union, residual)]
    system = np.concatenate(cols, axis=1)
    cut = kernel(system, ring.field)
    if cut.dim == 0:
        raise DegeneracyError("no member of the pencil is annihilated by I(C)_N",
                              0, link.seed)
    if cut.dim > 1:
        raise DegeneracyError("the whole pencil is annihilated by I(C)_N", cut.dim, link.seed)
    a, b = cut.basis[0]
    return linear_combination([union, residual], [a, b]).normalized()


def twisted_cubic_ideal(field: FieldSpec | None = None) -> IdealGens:
    """``(x0x2 - x1^2, x1x3 - x2^2, x0x3 - x1x2)`` in ``P^3``."""
    x0, x1, x2, x3 = variables(1, field)
    return IdealGens([x0 * x2 - x1 * x1, x1 * x3 - x2 * x2, x0 * x3 - x1 * x2])


def twisted_cubic_link(d: int, seed: int = 0, field: FieldSpec | None = None,
                       max_retries: int = MAX_RETRIES, max_dim: int | None = None
                       ) -> tuple[LinkData, JacobianRing]:
    """A smooth degree-``d`` surface through the twisted cubic.

    The quadrics ``A = x0x2 - x1^2`` and ``B = x1x3 - x2^2`` meet in the
    cubic plus the line ``x1 = x2 = 0``; ``F = A U + B W`` with seeded
    ``U, W`` of degree ``d - 2``.
    """
    if d < 3:
        raise UsageError("need d >= 3")
    curve = twisted_cubic_ideal(field)
    A, B = curve[0], curve[1]
    _, x1, x2, _ = variables(1, A.field)
    for attempt in range(max_retries):
        rng = _rng(seed, attempt)
        U = random_poly(1, d - 2, rng, A.field)
        W = random_poly(1, d - 2, rng, A.field)
        F = A * U + B * W
        ring = _smooth_ring(F, max_dim)
        if ring is not None:
            link = LinkData(curve, A, B, U, W, IdealGens([x1, x2]), F, seed, attempt)
            return link, ring
    raise ConstructionError(f"no smooth surface through the twisted cubic in {max_retries} "
                            "attempts", [(seed, a) for a in range(max_retries)])


LINE_PAIRS = {
    # second line, generators of I(L1) n I(L2) for L1 = V(x0, x1)
    "skew": ((2, 3), ((0, 2), (0, 3), (1, 2), (1, 3))),
    "meeting": ((0, 2), ((0,), (1, 2))),
}


def two_lines_surface(d: int, configuration: str, seed: int = 0,
                      field: FieldSpec | None = None, max_retries: int = MAX_RETRIES,
                      max_dim: int | None = None):
    """Smooth degree-``d`` surface through ``V(x0, x1)`` and a second line.

    Returns ``(ring, line1_gens, line2_gens, attempt)``.
    """
    if configuration not in LINE_PAIRS:
        raise UsageError(f"configuration must be one of {sorted(LINE_PAIRS)}")
    xs = variables(1, field)
    second, products = LINE_PAIRS[configuration]
    gens = []
    for idx in products:
        g = xs[idx[0]]
        for i in idx[1:]:
            g = g * xs[i]
        gens.append(g)
    for attempt in range(max_retries):
        F = random_combination(gens, d, _rng(seed, attempt))
        ring = _smooth_ring(F, max_dim) if not F.is_zero() else None
        if ring is not None:
            return ring, [xs[0], xs[1]], [xs[second[0]], xs[second[1]]], attempt
    raise ConstructionError(f"no smooth surface through two {configuration} lines in "
                            f"{max_retries} attempts", [(seed, a) for a in range(max_retries)])


@dataclass
class LinesReport:
    d: int
    configuration: str
    seed: int
    attempt: int
    benchmark: int
    single_codims: tuple[int, int]
    ratios: tuple[int, ...]
    codims: tuple[int, ...]

    @property
    def all_at_benchmark(self) -> bool:
        return all(c == self.benchmark for c in self.codims)

    @property
    def all_below_benchmark(self) -> bool:
        return all(c < self.benchmark for c in self.codims)


def sample_ratios(seed: int, count: int = 3) -> tuple[int, ...]:
    """Nonzero integer ratios, reproducible from the seed."""
    rng = np.random.default_rng([seed, 1 << 20])
    mags = rng.integers(1, 1000, size=count)
    signs = rng.choice([-1, 1], size=count)
    return tuple(int(m * s) for m, s in zip(mags, signs))


def meeting_vs_skew_lines(d: int, seed: int = 0, configuration: str = "skew",
                          ratios=None, field: FieldSpec | None = None,
                          max_dim: int | None = None) -> LinesReport:
    """``nl_codim(P_1 + a P_2)`` for two lines on one seeded surface.

    Skew lines are expected at ``2(d-3)``; meeting lines are measured.
    """
    if d < 5:
        raise UsageError("need d >= 5")
    ring, l1, l2, attempt = two_lines_surface(d, configuration, seed, field, max_dim=max_dim)
    p1 = ci_class_rep(_ci_on(ring, l1))
    p2 = ci_class_rep(_ci_on(ring, l2))
    ratios = sample_ratios(seed) if ratios is None else tuple(int(a) for a in ratios)
    codims = tuple(nl_codim(linear_combination([p1, p2], [1, a])) for a in ratios)
    return LinesReport(d, configuration, seed, attempt, 2 * (d - 3),
                       (nl_codim(p1), nl_codim(p2)), ratios, codims)
