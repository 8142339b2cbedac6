"""Sparse column reduction over GF(p).

Two interchangeable backends compute the rank of a sparse integer matrix
modulo a prime. The numba backend is used when numba is importable and the
environment variable ``SRDEF_BACKEND`` is not set to ``numpy``.
"""

from __future__ import annotations

import os

import numpy as np

PRIME = 2147483647  # 2**31 - 1; products of residues fit in int64

_requested = os.environ.get("SRDEF_BACKEND", "numba").strip().lower()

try:  # pragma: no cover - exercised through backend selection
    import numba
    from numba.typed import List as _TypedList

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rank_mod_p_numpy(indptr, indices, data, nrows, p=PRIME):
    """Rank of a CSC matrix mod ``p`` by left-to-right column reduction.

    Columns are reduced against earlier columns by their lowest nonzero
    row, the same pivoting rule used by the compiled kernel.
    """
    ncols = len(indptr) - 1
    pivot_of_row = np.full(nrows, -1, dtype=np.int64)
    stored_rows = []
    stored_vals = []
    rank = 0
    for j in range(ncols):
        lo, hi = indptr[j], indptr[j + 1]
        rows = np.asarray(indices[lo:hi], dtype=np.int64)
        vals = np.mod(np.asarray(data[lo:hi], dtype=np.int64), p)
        keep = vals != 0
        rows, vals = rows[keep], vals[keep]
        order = np.argsort(rows, kind="stable")
        rows, vals = rows[order], vals[order]
        while rows.size:
            low = rows[-1]
            k = pivot_of_row[low]
            if k < 0:
                inv = _inv_mod(vals[-1], p)
                vals = (vals * inv) % p
                pivot_of_row[low] = len(stored_rows)
                stored_rows.append(rows)
                stored_vals.append(vals)
                rank += 1
                break
            factor = int(vals[-1])
            prow, pval = stored_rows[k], stored_vals[k]
            merged = np.concatenate([rows, prow])
            mvals = np.concatenate([vals, (p - (pval * factor) % p) % p])
            uniq, inverse = np.unique(merged, return_inverse=True)
            acc = np.zeros(uniq.size, dtype=np.int64)
            np.add.at(acc, inverse, mvals)
            acc %= p
            nz = acc != 0
            rows, vals = uniq[nz], acc[nz]
    return rank


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _inv_mod_nb(a, p):
        result = 1
        base = a % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @numba.njit(cache=True)
    def _sort_pairs(rows, vals):
        order = np.argsort(rows, kind="mergesort")
        return rows[order], vals[order]

    @numba.njit(cache=True)
    def _rank_mod_p_nb(indptr, indices, data, nrows, p):
        ncols = indptr.shape[0] - 1
        pivot_of_row = np.full(nrows, -1, dtype=np.int64)
        stored_rows = _TypedList()
        stored_vals = _TypedList()
        rank = 0
        for j in range(ncols):
            lo = indptr[j]
            hi = indptr[j + 1]
            rows = indices[lo:hi].astype(np.int64)
            vals = data[lo:hi].astype(np.int64) % p
            rows, vals = _sort_pairs(rows, vals)
            # drop zeros
            cnt = 0
            for t in range(rows.shape[0]):
                if vals[t] != 0:
                    rows[cnt] = rows[t]
                    vals[cnt] = vals[t]
                    cnt += 1
            rows = rows[:cnt].copy()
            vals = vals[:cnt].copy()
            while rows.shape[0] > 0:
                low = rows[rows.shape[0] - 1]
                k = pivot_of_row[low]
                if k < 0:
                    inv = _inv_mod_nb(vals[vals.shape[0] - 1], p)
                    for t in range(vals.shape[0]):
                        vals[t] = (vals[t] * inv) % p
                    pivot_of_row[low] = len(stored_rows)
                    stored_rows.append(rows)
                    stored_vals.append(vals)
                    rank += 1
                    break
                factor = vals[vals.shape[0] - 1]
                prow = stored_rows[k]
                pval = stored_vals[k]
                n1 = rows.shape[0]
                n2 = prow.shape[0]
                out_r = np.empty(n1 + n2, dtype=np.int64)
                out_v = np.empty(n1 + n2, dtype=np.int64)
                a = 0
                b = 0
                m = 0
                while a < n1 or b < n2:
                    if b >= n2 or (a < n1 and rows[a] < prow[b]):
                        out_r[m] = rows[a]
                        out_v[m] = vals[a]
                        a += 1
                        m += 1
                    elif a >= n1 or prow[b] < rows[a]:
                        v = (p - (pval[b] * factor) % p) % p
                        if v != 0:
                            out_r[m] = prow[b]
                            out_v[m] = v
                            m += 1
                        b += 1
                    else:
                        v = (vals[a] - (pval[b] * factor) % p) % p
                        if v != 0:
                            out_r[m] = rows[a]
                            out_v[m] = v
                            m += 1
                        a += 1
                        b += 1
                rows = out_r[:m].copy()
                vals = out_v[:m].copy()
        return rank

    def rank_mod_p_numba(indptr, indices, data, nrows, p=PRIME):
        """Compiled twin of :func:`rank_mod_p_numpy`."""
        return int(
            _rank_mod_p_nb(
                np.ascontiguousarray(indptr, dtype=np.int64),
                np.ascontiguousarray(indices, dtype=np.int64),
                np.ascontiguousarray(data, dtype=np.int64),
                int(nrows),
                int(p),
            )
        )


def backend_name() -> str:
    if HAVE_NUMBA and _requested != "numpy":
        return "numba"
    return "numpy"


def rank_mod_p(indptr, indices, data, nrows, p=PRIME, backend=None):
    """Dispatch to the selected backend (``SRDEF_BACKEND`` or ``backend``)."""
    name = backend or backend_name()
    if len(indptr) <= 1 or nrows == 0:
        return 0
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return rank_mod_p_numba(indptr, indices, data, nrows, p)
    return rank_mod_p_numpy(indptr, indices, data, nrows, p)
