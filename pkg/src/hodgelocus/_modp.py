"""Row reduction over Z/p on int64 arrays.

Two implementations of the same map ``A -> (RREF rows, pivot columns)``:

* :func:`rref_naive` -- textbook Gauss-Jordan, one pivot at a time.  Used
  for small inputs and as the reference in tests.
* :func:`rref_blocked` -- the pivots of a panel of columns are found by the
  same routine on narrower sub-panels, then the rest of the matrix is
  updated with one exact modular matrix product per panel (see
  :func:`hodgelocus.field.matmul_mod`).  Rows that become zero are dropped
  as soon as they are detected.

The reduced row echelon form is unique, so both return bit-identical
results; pivot rows are chosen as the lowest-index candidate.
"""

from __future__ import annotations

import numpy as np

from .field import matmul_mod

#: Matrices with fewer entries than this use the naive routine.
BLOCKED_THRESHOLD = 40_000
PANEL = 64
SUB_PANEL = 16


def _reduce_input(a, p):
    a = np.array(a, dtype=np.int64, copy=True)
    np.mod(a, p, out=a)
    return a


def rref_naive(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination; returns the nonzero RREF rows and pivots."""
    a = _reduce_input(a, p)
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        row = a[r, c:] * inv
        np.mod(row, p, out=row)
        a[r, c:] = row
        f = a[:, c].copy()
        f[r] = 0
        rows = np.flatnonzero(f)
        if rows.size:
            block = a[rows, c:]
            block -= np.outer(f[rows], row)
            np.mod(block, p, out=block)
            a[rows, c:] = block
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def _panel_naive(panel: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """Pivot columns of a panel and the input rows that supply them."""
    a = panel.copy()
    m, b = a.shape
    order = np.arange(m)
    r = 0
    cols = []
    for c in range(b):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            order[[r, i]] = order[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = np.mod(a[r, c:] * inv, p)
        rows = np.flatnonzero(a[r + 1:, c])
        if rows.size:
            rows += r + 1
            block = a[rows, c:]
            block -= np.outer(a[rows, c], a[r, c:])
            np.mod(block, p, out=block)
            a[rows, c:] = block
        cols.append(c)
        r += 1
    return cols, [int(i) for i in order[:r]]


def inverse_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a nonsingular square matrix over Z/p."""
    n = a.shape[0]
    aug = np.concatenate([_reduce_input(a, p), np.eye(n, dtype=np.int64)], axis=1)
    red, piv = rref_naive(aug, p)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular modulo p")
    return red[:, n:]


def _eliminate(a: np.ndarray, p: int, panel: int, sub_panel: int | None,
               want_rows: bool):
    """Core of the blocked routine.

    Returns ``(rows, pivots, source)`` where ``source[t]`` is an input row
    index such that the input rows ``source`` span the same space as the
    first ``t+1`` RREF rows (only tracked when ``want_rows``).
    """
    m, n = a.shape
    live = np.flatnonzero(a.any(axis=1))
    work = a[live]                       # trailing columns only, from c0 on
    ids = live
    done = np.zeros((min(m, n), n), dtype=np.int64)
    r = 0
    pivots: list[int] = []
    source: list[int] = []
    c0 = 0
    while c0 < n and work.shape[0]:
        width = min(panel, n - c0)
        if sub_panel and width > sub_panel:
            cols_rel, sel = _eliminate(work[:, :width], p, sub_panel, None, True)[1:]
        else:
            cols_rel, sel = _panel_naive(work[:, :width], p)
        if not cols_rel:
            work = work[:, width:]
            nonzero = work.any(axis=1) if work.shape[1] else np.zeros(work.shape[0], dtype=bool)
            work = work[nonzero]
            ids = ids[nonzero]
            c0 += width
            continue
        b = len(cols_rel)
        sel_arr = np.array(sel)
        kinv = inverse_mod(work[np.ix_(sel_arr, cols_rel)], p)
        new_rows = matmul_mod(kinv, work[sel_arr], p)

        keep = np.ones(work.shape[0], dtype=bool)
        keep[sel_arr] = False
        rest = work[keep]
        rest_ids = ids[keep]
        coeff = rest[:, cols_rel]
        active = np.flatnonzero(coeff.any(axis=1))
        if active.size:
            upd = matmul_mod(coeff[active], new_rows, p)
            block = rest[active]
            block -= upd
            np.mod(block, p, out=block)
            rest[active] = block
        rest = rest[:, width:]
        nonzero = rest.any(axis=1) if rest.shape[1] else np.zeros(rest.shape[0], dtype=bool)

        if r:
            cols_abs = [c0 + c for c in cols_rel]
            coeff = done[:r, cols_abs]
            active = np.flatnonzero(coeff.any(axis=1))
            if active.size:
                upd = matmul_mod(coeff[active], new_rows, p)
                block = done[active, c0:]
                block -= upd
                np.mod(block, p, out=block)
                done[active, c0:] = block
        done[r:r + b, c0:] = new_rows
        pivots.extend(c0 + c for c in cols_rel)
        if want_rows:
            source.extend(int(ids[i]) for i in sel)
        r += b
        work = rest[nonzero]
        ids = rest_ids[nonzero]
        c0 += width
    return done[:r], pivots, source


def rref_blocked(a: np.ndarray, p: int, panel: int = PANEL) -> tuple[np.ndarray, list[int]]:
    """Blocked Gauss-Jordan elimination (same output as :func:`rref_naive`)."""
    a = _reduce_input(a, p)
    sub = SUB_PANEL if panel > SUB_PANEL else None
    rows, pivots, _ = _eliminate(a, p, panel, sub, False)
    return rows, pivots


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Dispatch to the naive or blocked routine by size."""
    a = np.asarray(a)
    if a.size < BLOCKED_THRESHOLD:
        return rref_naive(a, p)
    return rref_blocked(a, p)


def rank_mod(a: np.ndarray, p: int) -> int:
    return len(rref_mod(a, p)[1])
