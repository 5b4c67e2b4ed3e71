import numpy as np
import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hodgelocus import FieldSpec
from hodgelocus.field import MERSENNE_31, auxiliary_primes, matmul_mod

P = MERSENNE_31


def test_prime_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime(2**31 + 11)
    with pytest.raises(ValueError):
        FieldSpec.prime(1 << 20)
    with pytest.raises(ValueError):
        FieldSpec.prime(2**30)
    assert FieldSpec.prime(1073741827).p == 1073741827


def test_parse_and_str():
    assert FieldSpec.parse("rational") == FieldSpec.rational()
    assert FieldSpec.parse("prime") == FieldSpec.prime()
    assert FieldSpec.parse("prime:1073741827").p == 1073741827
    assert FieldSpec.parse(str(FieldSpec.prime(1073741827))) == FieldSpec.prime(1073741827)
    assert FieldSpec.parse(str(FieldSpec.rational())).is_rational
    with pytest.raises(ValueError):
        FieldSpec.parse("reals")


def test_element_coercion():
    q = FieldSpec.rational()
    assert q("3/6") == mpq(1, 2)
    gf = FieldSpec.prime()
    assert gf(-1) == P - 1
    assert gf.mul(gf("1/3"), 3) == 1
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)


def test_signed_representative():
    gf = FieldSpec.prime()
    assert gf.signed(P - 2) == -2
    assert gf.signed(5) == 5


def test_auxiliary_primes_descending():
    ps = auxiliary_primes(3)
    assert ps[0] < P and list(ps) == sorted(ps, reverse=True)
    assert len(set(ps)) == 3


def _bigint_matmul(a, b, p):
    return np.array((a.astype(object) @ b.astype(object)) % p, dtype=np.int64)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.sampled_from([1, 7, 64, 65, 300]), st.integers(1, 9),
       st.integers(0, 2**32 - 1), st.sampled_from([P, 1073741827, 1048583]))
def test_matmul_mod_matches_bigint(m, k, n, seed, p):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, (m, k), dtype=np.int64)
    b = rng.integers(0, p, (k, n), dtype=np.int64)
    assert np.array_equal(matmul_mod(a, b, p), _bigint_matmul(a, b, p))


def test_matmul_mod_extreme_entries():
    a = np.full((3, 500), P - 1, dtype=np.int64)
    b = np.full((500, 2), P - 1, dtype=np.int64)
    assert np.array_equal(matmul_mod(a, b, P), _bigint_matmul(a, b, P))


def test_rational_matmul():
    q = FieldSpec.rational()
    a = q.asarray([[1, "1/2"], [0, 3]])
    b = q.asarray([["2/3"], [4]])
    assert q.matmul(a, b).reshape(-1).tolist() == [mpq(8, 3), mpq(12)]
