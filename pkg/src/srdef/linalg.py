"""Exact rank computations for sparse integer matrices.

Ranks are first computed modulo a large prime with the compiled kernel.
Because rank over Q is at least the rank mod p, a homology group that
vanishes mod p vanishes over Q. Callers that need exact values in the
remaining cases use :func:`rank_exact`, a fraction-free elimination over
the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels


@dataclass(frozen=True)
class SparseMatrix:
    """Integer matrix in compressed-column form."""

    nrows: int
    ncols: int
    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray

    @classmethod
    def from_coo(cls, nrows, ncols, rows, cols, vals):
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.int64)
        order = np.lexsort((rows, cols))
        rows, cols, vals = rows[order], cols[order], vals[order]
        counts = np.bincount(cols, minlength=ncols) if ncols else np.zeros(0, np.int64)
        indptr = np.zeros(ncols + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(int(nrows), int(ncols), indptr, rows, vals)

    def columns(self):
        for j in range(self.ncols):
            lo, hi = self.indptr[j], self.indptr[j + 1]
            yield {int(r): int(v) for r, v in zip(self.indices[lo:hi], self.data[lo:hi]) if v}

    def to_dense(self):
        out = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for j, col in enumerate(self.columns()):
            for r, v in col.items():
                out[r, j] += v
        return out


def rank_mod_p(mat: SparseMatrix, p: int = kernels.PRIME) -> int:
    if mat.nrows == 0 or mat.ncols == 0:
        return 0
    return kernels.rank_mod_p(mat.indptr, mat.indices, mat.data, mat.nrows, p)


def rank_exact(mat: SparseMatrix) -> int:
    """Rank over Q by fraction-free column elimination on the lowest row."""
    if mat.nrows == 0 or mat.ncols == 0:
        return 0
    pivots: dict[int, dict[int, int]] = {}
    for col in mat.columns():
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for v in col.values():
                    g = gcd(g, v)
                if g > 1:
                    col = {r: v // g for r, v in col.items()}
                pivots[low] = col
                break
            a, c = piv[low], col[low]
            new = {r: a * v for r, v in col.items()}
            for r, v in piv.items():
                w = new.get(r, 0) - c * v
                if w:
                    new[r] = w
                else:
                    new.pop(r, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {r: v // g for r, v in new.items()}
            col = new
    return len(pivots)
