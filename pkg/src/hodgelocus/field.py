"""Exact coefficient fields.

Two kinds of field are supported: the rationals (elements are
``gmpy2.mpq``) and prime fields ``Z/p`` for primes ``2**20 < p < 2**31``
(elements are Python ints in ``[0, p)``, matrices are ``int64`` arrays).
The upper bound keeps every product of two reduced entries inside int64.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from gmpy2 import mpq
from sympy import isprime, prevprime

MERSENNE_31 = 2**31 - 1
_PRIME_MIN = 2**20
_PRIME_MAX = 2**31
_MPQ = type(mpq(0))


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: ``FieldSpec()`` is Q, ``FieldSpec(p)`` is Z/p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is None:
            return
        p = int(self.p)
        if not (_PRIME_MIN < p < _PRIME_MAX):
            raise ValueError(f"prime field modulus must lie in (2^20, 2^31), got {p}")
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def prime(cls, p: int = MERSENNE_31) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``rational`` or ``prime:<p>`` (``prime`` alone means 2^31-1)."""
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls.rational()
        if text == "prime":
            return cls.prime()
        if text.startswith("prime:"):
            return cls.prime(int(text.split(":", 1)[1]))
        raise ValueError(f"unknown field {text!r}; expected 'rational' or 'prime:<p>'")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def __str__(self):
        return "rational" if self.p is None else f"prime:{self.p}"

    # scalars

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or ``"a/b"`` string into the field."""
        if self.p is None:
            return mpq(x)
        if isinstance(x, str):
            x = mpq(x)
        if isinstance(x, (Fraction, _MPQ)):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes modulo {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / mpq(a)
        return pow(int(a), -1, self.p)

    def mul(self, a, b):
        return a * b if self.p is None else int(a) * int(b) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (int(a) + int(b)) % self.p

    def neg(self, a):
        return -a if self.p is None else (-int(a)) % self.p

    def signed(self, a):
        """Representative used for printing: symmetric residue mod p."""
        if self.p is None:
            return a
        a = int(a)
        return a - self.p if a > self.p // 2 else a

    def format(self, a) -> str:
        return str(self.signed(a))

    # arrays

    def zeros(self, shape) -> np.ndarray:
        if self.p is None:
            out = np.empty(shape, dtype=object)
            out.fill(mpq(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def asarray(self, values) -> np.ndarray:
        """Convert nested sequences (or an array) into a reduced field array."""
        if self.p is None:
            arr = np.array(values, dtype=object)
            flat = arr.reshape(-1)
            for i, x in enumerate(flat):
                if not isinstance(x, _MPQ):
                    flat[i] = mpq(x)
            return arr
        arr = np.array(values, dtype=object) if not isinstance(values, np.ndarray) else values
        if arr.dtype == object:
            flat = [self(x) for x in arr.reshape(-1)]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        return np.mod(arr.astype(np.int64), self.p)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr if self.p is None else np.mod(arr, self.p)

    def mul_arrays(self, a: np.ndarray, b) -> np.ndarray:
        return a * b if self.p is None else np.mod(a * b, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact matrix product."""
        if self.p is None:
            return _matmul_rational(a, b)
        return matmul_mod(a, b, self.p)

    def nonzero_mask(self, arr: np.ndarray) -> np.ndarray:
        return arr != 0


def _matmul_rational(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = np.empty((m, n), dtype=object)
    out.fill(mpq(0))
    if m == 0 or n == 0:
        return out
    # rows of `a` are typically sparse (RREF bases, multiplication rows)
    for i in range(m):
        row = a[i]
        nz = [j for j in range(k) if row[j] != 0]
        if not nz:
            continue
        acc = row[nz[0]] * b[nz[0]]
        for j in nz[1:]:
            acc = acc + row[j] * b[j]
        out[i] = acc
    return out


_LIMB = 1 << 16
_CHUNK = 1 << 18  # inner-dimension block that keeps float64 limb products exact
_SHORT = 64       # inner dimensions up to this need only one operand split


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` for int64 arrays with entries in ``[0, p)``, ``p < 2**31``.

    Operands are split into 16-bit limbs and multiplied in float64 (BLAS);
    every partial sum stays below 2**53, so the result is exact.  For inner
    dimension at most 64 only ``a`` is split (two products); otherwise both
    are split and combined Karatsuba-style (three products).
    """
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if m == 0 or n == 0 or k == 0:
        return np.zeros((m, n), dtype=np.int64)
    if k <= _SHORT:
        ah, al = np.divmod(a, _LIMB)
        bf = b.astype(np.float64)
        hi = (ah.astype(np.float64) @ bf).astype(np.int64)
        lo = (al.astype(np.float64) @ bf).astype(np.int64)
        np.mod(hi, p, out=hi)
        hi *= _LIMB
        hi += lo
        np.mod(hi, p, out=hi)
        return hi
    out = np.zeros((m, n), dtype=np.int64)
    s16 = _LIMB % p
    s32 = _LIMB * _LIMB % p
    for start in range(0, k, _CHUNK):
        sa = a[:, start:start + _CHUNK]
        sb = b[start:start + _CHUNK]
        ah, al = np.divmod(sa, _LIMB)
        bh, bl = np.divmod(sb, _LIMB)
        hh = (ah.astype(np.float64) @ bh.astype(np.float64)).astype(np.int64)
        ll = (al.astype(np.float64) @ bl.astype(np.float64)).astype(np.int64)
        mid = ((ah + al).astype(np.float64) @ (bh + bl).astype(np.float64)).astype(np.int64)
        mid -= hh + ll
        block = np.mod(hh, p) * s32
        block += np.mod(mid, p) * s16
        block += ll
        out += np.mod(block, p)
        np.mod(out, p, out=out)
    return out


@lru_cache(maxsize=None)
def auxiliary_primes(count: int, below: int = MERSENNE_31) -> tuple[int, ...]:
    """The ``count`` largest primes strictly below ``below`` (deterministic)."""
    primes = []
    q = below
    while len(primes) < count:
        q = prevprime(q)
        primes.append(q)
    return tuple(primes)


__all__ = ["FieldSpec", "MERSENNE_31", "auxiliary_primes", "matmul_mod"]
