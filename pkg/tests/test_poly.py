from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hodgelocus import FieldSpec, HomoPoly, mono_basis, partial_derivative, poly_mul, variables
from hodgelocus.errors import ParseError, ResourceError, UsageError
from hodgelocus.formats import parse_poly, parse_polys, parse_sections
from hodgelocus.poly import dimension_cap, random_poly

GF = FieldSpec.prime()


@pytest.mark.parametrize("n, k, size", [(1, 2, 10), (1, 5, 56), (2, 1, 6)])
def test_mono_basis_sizes(n, k, size):
    assert len(mono_basis(n, k)) == size


def test_mono_basis_graded_lex_order():
    b = mono_basis(1, 2)
    assert b[0] == (2, 0, 0, 0)
    assert b[1] == (1, 1, 0, 0)
    assert b[-1] == (0, 0, 0, 2)
    assert list(b) == sorted(b, reverse=True)


@given(st.integers(0, 3), st.integers(0, 6))
def test_mono_basis_count_formula(n, k):
    b = mono_basis(n, k)
    assert len(b) == comb(k + 2 * n + 1, 2 * n + 1)
    assert len(set(b)) == len(b)
    assert all(b.position(m) == i for i, m in enumerate(b))


def test_mono_basis_cap():
    with pytest.raises(ResourceError):
        mono_basis(3, 30)
    with dimension_cap(5):
        with pytest.raises(ResourceError):
            mono_basis(1, 2)
    assert len(mono_basis(1, 2)) == 10


def test_poly_mul_examples():
    x0, x1, x2, x3 = variables(1, GF)
    assert poly_mul(x0 + x1, x0 - x1) == x0 * x0 - x1 * x1
    assert (x0 + x1) * HomoPoly.zero(1, 3, GF) == HomoPoly.zero(1, 4, GF)
    assert (x0 * x2 - x1 ** 2) * x3 == x0 * x2 * x3 - x1 * x1 * x3


def test_poly_mul_rejects_mixed_rings():
    a = variables(1, GF)[0]
    with pytest.raises(UsageError):
        poly_mul(a, variables(2, GF)[0])
    with pytest.raises(UsageError):
        poly_mul(a, variables(1, FieldSpec.rational())[0])


def test_partial_examples():
    assert partial_derivative(parse_poly("x0^5"), 0) == parse_poly("5*x0^4")
    assert partial_derivative(parse_poly("x1^3"), 0).is_zero()
    assert partial_derivative(parse_poly("x0*x1*x2*x3"), 2) == parse_poly("x0*x1*x3")
    with pytest.raises(UsageError):
        partial_derivative(parse_poly("x0"), 4)


def _random_poly(seed, k, field=GF, n=1):
    return random_poly(n, k, np.random.default_rng(seed), field)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_ring_axioms(seed, a, b, c):
    f, g, h = _random_poly(seed, a), _random_poly(seed + 1, b), _random_poly(seed + 2, b)
    k = _random_poly(seed + 3, c)
    assert f * g == g * f
    assert (f * g) * k == f * (g * k)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5), st.sampled_from(["p", "q"]))
def test_euler_relation(seed, k, kind):
    field = GF if kind == "p" else FieldSpec.rational()
    F = _random_poly(seed, k, field)
    xs = variables(1, field)
    lhs = sum((x * F.partial(i) for i, x in enumerate(xs)), 0)
    assert lhs == F.scale(k)


def test_vector_round_trip():
    F = _random_poly(3, 4)
    b = mono_basis(1, 4)
    assert HomoPoly.from_vector(b, F.to_vector(b), GF) == F


def test_zero_coefficients_dropped():
    f = HomoPoly(1, 1, {(1, 0, 0, 0): 2, (0, 1, 0, 0): 0}, GF)
    assert len(f) == 1
    assert f - f == HomoPoly.zero(1, 1, GF)


def test_evaluation():
    f = parse_poly("x0^2 - 3*x1*x2", field=FieldSpec.rational())
    assert f(2, 1, 1, 0) == 1


def test_parse_grammar():
    q = FieldSpec.rational()
    f = parse_poly("3*x0^2*x1 - 1/2*x3^3", field=q)
    assert f.coefficient((2, 1, 0, 0)) == 3
    assert f.coefficient((0, 0, 0, 3)) == q("-1/2")
    assert str(parse_poly("x0*x0 - x1^2")) == "x0^2 - x1^2"
    assert parse_poly("x0 + x1").n == 1
    assert parse_poly("x5").n == 2


def test_print_parse_round_trip():
    F = _random_poly(5, 3)
    assert parse_poly(str(F)) == F


def test_parse_half_mod_p():
    assert parse_poly("1/2*x0").coefficient((1, 0, 0, 0)) == pow(2, -1, 2**31 - 1)


@pytest.mark.parametrize("text, col", [("x0 +", 5), ("x0 $ x1", 4), ("3*", 3), ("x0^", 4)])
def test_parse_errors_carry_column(text, col):
    with pytest.raises(ParseError) as err:
        parse_poly(text)
    assert err.value.column == col


def test_parse_rejects_inhomogeneous():
    with pytest.raises(ParseError):
        parse_poly("x0^2 + x1")


def test_parse_polys_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_polys("# comment\nx0\n\nx1 + \n")
    assert err.value.line == 4


def test_parse_sections():
    secs = parse_sections("[P]\nx0\nx1\n[Q]\nx2^4\nx3^4\n")
    assert [len(secs["P"]), len(secs["Q"])] == [2, 2]
    with pytest.raises(ParseError):
        parse_sections("[P]\nx0\n[P]\nx1\n")
    with pytest.raises(ParseError):
        parse_sections("x0\n")
