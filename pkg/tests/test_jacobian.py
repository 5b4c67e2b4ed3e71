import numpy as np
import pytest

from hodgelocus import (ArtinianQuotient, FieldSpec, IdealGens, JacobianRing, ci_hilbert_series,
                        jacobian_ideal, macaulay_verify, parse_poly, parse_polys, rank,
                        smoothness_check, variables)
from hodgelocus.errors import NotRegularError, SingularHypersurfaceError, UsageError
from hodgelocus.poly import random_poly

GF = FieldSpec.prime()


def test_fermat_quintic_dims(fermat_quintic_ring):
    ring = fermat_quintic_ring
    assert (ring.N, ring.sigma) == (6, 12)
    assert (ring.dim(6), ring.dim(12), ring.dim(13)) == (44, 1, 0)
    series = ci_hilbert_series([4] * 4, 4, 13)
    assert [ring.dim(k) for k in range(14)] == series


def test_sigma_is_twice_N():
    for d in (3, 4, 5, 6):
        F = parse_poly(" + ".join(f"x{i}^{d}" for i in range(4)))
        ring = JacobianRing(F)
        assert ring.sigma == 2 * ring.N == 4 * (d - 2)


def test_socle_functional_vanishes_on_jacobian(fermat_quintic_ring):
    ring = fermat_quintic_ring
    lam = ring.socle_functional()
    rel = ring.relations(ring.sigma)
    assert not np.any(ring.field.matmul(rel.basis, lam.values.reshape(-1, 1)))
    assert lam(parse_poly("x0^3*x1^3*x2^3*x3^3")) != 0
    assert lam(parse_poly("x0^4*x1^4*x2^4")) == 0


def test_pairing_transpose_symmetry():
    F = random_poly(1, 4, np.random.default_rng(2), GF)
    ring = JacobianRing(F)
    for k in range(ring.sigma + 1):
        a = ring.pairing_matrix(k).data
        b = ring.pairing_matrix(ring.sigma - k).data
        assert np.array_equal(a, b.T)


def test_normal_form_and_contains(fermat_quintic_ring):
    ring = fermat_quintic_ring
    assert ring.contains(parse_poly("x0^4*x1^2"))
    assert not ring.contains(parse_poly("x0^3*x1^3"))
    nf = ring.normal_form(parse_poly("x0^4*x1^2 + x0^3*x1^3"))
    assert nf == parse_poly("x0^3*x1^3")


def test_macaulay_fermat():
    rep = macaulay_verify(IdealGens(parse_polys("x0^4\nx1^4\nx2^4\nx3^4")))
    assert rep.passed and rep.socle_degree == 12 and rep.top_dim == 1


def test_macaulay_mixed_degrees():
    x0, x1, x2, x3 = variables(1, GF)
    rep = macaulay_verify(IdealGens([x0, x1, x2 ** 4, x3 ** 4]))
    assert rep.passed and rep.socle_degree == 6
    assert rep.dims == (1, 2, 3, 4, 3, 2, 1)


@pytest.mark.parametrize("seed", range(4))
def test_macaulay_random(seed):
    rng = np.random.default_rng(seed)
    degrees = rng.integers(1, 5, size=4)
    ideal = IdealGens([random_poly(1, int(e), rng, GF) for e in degrees])
    rep = macaulay_verify(ideal)
    assert rep.passed
    assert list(rep.dims) == ci_hilbert_series(degrees, 4, rep.socle_degree)
    assert all(rep.pairing_ranks[k] == rep.dims[k] for k in rep.pairing_ranks)


def test_non_regular_raises_with_degree():
    x0, x1, x2, _ = variables(1, GF)
    with pytest.raises(NotRegularError) as err:
        macaulay_verify(IdealGens([x0 ** 2, x1 ** 2, x2 ** 2, x0 * x1]))
    assert err.value.degree == 5
    with pytest.raises(NotRegularError):
        ArtinianQuotient(IdealGens([x0, x1, x2, x0 + x2]))


def test_singular_surface():
    F = parse_poly("x0^3 + x1^3 + x2^3")  # cone over a plane cubic
    assert not smoothness_check(F)
    with pytest.raises(SingularHypersurfaceError):
        JacobianRing(F)
    assert smoothness_check(parse_poly("x0^3 + x1^3 + x2^3 + x3^3"))


def test_jacobian_ideal_keeps_zero_partials():
    ideal = jacobian_ideal(parse_poly("x0^3 + x1^3 + x2^3"))
    assert len(ideal) == 4 and ideal[3].is_zero()
    with pytest.raises(UsageError):
        jacobian_ideal(parse_poly("x0 + x1"))


def test_rational_ring_agrees_with_prime():
    text = "x0^4 + x1^4 + x2^4 + x3^4 + x0*x1*x2*x3"
    rq = JacobianRing(parse_poly(text, field=FieldSpec.rational()))
    rp = JacobianRing(parse_poly(text, field=GF))
    assert [rq.dim(k) for k in range(9)] == [rp.dim(k) for k in range(9)]
    assert rank(rq.pairing_matrix(4)) == rq.dim(4)
