"""Row reduction over Q.

Small matrices go through fraction-free (Bareiss) forward elimination on
integers followed by exact back substitution.  Larger ones are reduced
modulo a sequence of word-size primes; the residues are combined by CRT,
lifted back to Q by rational reconstruction and the candidate is accepted
only after an exact check:

* the rank modulo p is a lower bound for the rank over Q, and
* every input row lies in the row space of the candidate (tested exactly).

Together these prove the candidate has the same row space as the input, and
since it is in reduced echelon shape it *is* the RREF.  Primes whose pivot
profile is worse than the best seen so far (an "unlucky" prime) are
discarded.
"""

from __future__ import annotations

from math import gcd, isqrt, lcm

import numpy as np
from gmpy2 import mpq, mpz

from ._modp import rref_mod
from .errors import HodgeLocusError
from .field import auxiliary_primes

#: Matrices with at most this many entries use Bareiss elimination.
BAREISS_LIMIT = 900
MAX_PRIMES = 4096


def _to_integer_rows(a: np.ndarray) -> np.ndarray:
    """Scale each row by the lcm of its denominators (row space unchanged)."""
    m, n = a.shape
    out = np.empty((m, n), dtype=object)
    for i in range(m):
        dens = [int(x.denominator) for x in a[i] if x != 0]
        scale = lcm(*dens) if dens else 1
        out[i] = [mpz(int(x.numerator) * (scale // int(x.denominator))) for x in a[i]]
    return out


def rref_bareiss(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Fraction-free forward elimination, then exact back substitution."""
    m, n = a.shape
    work = _to_integer_rows(a)
    r = 0
    prev = mpz(1)
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if work[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            work[[r, i]] = work[[i, r]]
        piv = work[r, c]
        if r + 1 < m:
            below = work[r + 1:, c:]
            # every entry stays an integer: it is a minor of the input
            below[:] = (piv * below - np.outer(work[r + 1:, c], work[r, c:])) // prev
        prev = piv
        pivots.append(c)
        r += 1
    rows = work[:r]
    out = np.empty((r, n), dtype=object)
    for i in range(r):
        piv = rows[i, pivots[i]]
        out[i] = [mpq(x, piv) for x in rows[i]]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            f = out[j, c]
            if f != 0:
                out[j] = out[j] - f * out[i]
    return out, pivots


def _small_integer_array(int_rows: np.ndarray) -> np.ndarray | None:
    """The integer rows as int64, or ``None`` if some entry is too large."""
    limit = 1 << 62
    if all(-limit < x < limit for x in int_rows.reshape(-1)):
        return int_rows.astype(np.int64)
    return None


def _residues(int_rows: np.ndarray, small: np.ndarray | None, p: int) -> np.ndarray:
    if small is not None:
        return np.mod(small, p)
    return (int_rows % p).astype(np.int64)


def rational_reconstruction(a: int, m: int) -> tuple[int, int] | None:
    """Find ``u/v`` with ``u = a v (mod m)``, ``|u|, v <= sqrt(m/2)``."""
    bound = isqrt(m // 2)
    a %= m
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if gcd(r1, t1) != 1:
        return None
    return r1, t1


def _reconstruct(values: np.ndarray, modulus: int) -> np.ndarray | None:
    """Lift CRT residues to rationals, sharing a running denominator."""
    half = modulus // 2
    bound = isqrt(modulus // 2)
    out = np.empty(values.shape, dtype=object)
    flat_in = values.reshape(-1)
    flat_out = out.reshape(-1)
    den = 1
    for idx, x in enumerate(flat_in):
        y = int(x) * den % modulus
        s = y - modulus if y > half else y
        if abs(s) <= bound:
            flat_out[idx] = mpq(s, den)
            continue
        rec = rational_reconstruction(y, modulus)
        if rec is None:
            return None
        u, v = rec
        den *= v
        if den > bound:
            return None
        flat_out[idx] = mpq(u, den)
    return out


def _certify(int_rows: np.ndarray, candidate: np.ndarray, pivots: list[int]) -> bool:
    """Every input row equals the combination of candidate rows it selects."""
    n = int_rows.shape[1]
    free = [j for j in range(n) if j not in set(pivots)]
    if not free:
        return True
    cand = candidate[:, free]
    dens = [int(x.denominator) for x in cand.reshape(-1) if x != 0]
    d = lcm(*dens) if dens else 1
    cand_int = np.empty(cand.shape, dtype=object)
    cand_int.reshape(-1)[:] = [mpz(int(x.numerator) * (d // int(x.denominator)))
                               for x in cand.reshape(-1)]
    for row in int_rows:
        nz = [t for t, c in enumerate(pivots) if row[c] != 0]
        lhs = np.zeros(len(free), dtype=object)
        lhs[:] = mpz(0)
        for t in nz:
            lhs = lhs + row[pivots[t]] * cand_int[t]
        rhs = np.array([row[j] * d for j in free], dtype=object)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def rref_multimodular(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Certified RREF over Q via CRT and rational reconstruction."""
    m, n = a.shape
    int_rows = _to_integer_rows(a)
    small = _small_integer_array(int_rows)
    best: tuple[int, ...] | None = None
    crt = None
    modulus = 1
    used = 0
    next_try = 1
    for p in auxiliary_primes(MAX_PRIMES):
        rows, piv = rref_mod(_residues(int_rows, small, p), p)
        piv_t = tuple(piv)
        if best is not None and piv_t != best:
            if len(piv_t) < len(best) or (len(piv_t) == len(best) and piv_t > best):
                continue  # unlucky prime
            crt, modulus, used, next_try = None, 1, 0, 1  # better profile: restart
        best = piv_t
        free = [j for j in range(n) if j not in set(piv)]
        vals = rows[:, free].astype(object)
        if crt is None:
            crt = vals
            modulus = p
        else:
            inv = pow(modulus, -1, p)
            diff = (vals - crt % p) % p
            crt = crt + modulus * ((diff * inv) % p)
            modulus *= p
        used += 1
        if used < next_try:
            continue
        next_try = max(used + 1, int(used * 1.25))
        lifted = _reconstruct(crt, modulus) if free else np.empty((len(piv), 0), dtype=object)
        if lifted is None:
            continue
        candidate = np.empty((len(piv), n), dtype=object)
        candidate.fill(mpq(0))
        for t, c in enumerate(piv):
            candidate[t, c] = mpq(1)
        if free:
            candidate[:, free] = lifted
        if _certify(int_rows, candidate, list(piv)):
            return candidate, list(piv)
    raise HodgeLocusError("multimodular RREF did not converge")


def rref_rational(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.asarray(a, dtype=object)
    m, n = a.shape
    if m == 0 or n == 0:
        return np.empty((0, n), dtype=object), []
    keep = [i for i in range(m) if any(x != 0 for x in a[i])]
    a = a[keep]
    if a.shape[0] == 0:
        return np.empty((0, n), dtype=object), []
    if a.size <= BAREISS_LIMIT:
        return rref_bareiss(a)
    return rref_multimodular(a)
