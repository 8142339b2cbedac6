"""Multigraded cotangent cohomology T^1, T^2 of Stanley-Reisner rings.

A piece T^i_{a-b}(K) is computed as T^i_{0-b}(link(a)), which is the
relative cohomology H^{i-1}(<U_b>, <U~_b>) (reduced when |b| = 1). The
spaces <Y> are modelled by order complexes: for an upward closed set Y
of faces the union of open simplices retracts onto the order complex
of Y, and keeping the empty face in the poset supplies the cone apex.

Only b that are vertices, faces or minimal non-faces of link(a) can
give a nonzero piece. For any other b the boundary of b is not a
subcomplex, so U_b and U~_b coincide.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from . import linalg
from .canon import canonical_form, canonical_labeling
from .complex import (
    ComplexError,
    SimplicialComplex,
    bits,
    is_homology_sphere,
    l_b_mask,
    link_mask,
    minimal_nonface_masks,
    reduced_betti,
    submasks,
    vertex_key,
    _maximal,
)


class InvalidSupportPair(ComplexError):
    pass


class PreconditionUnverified(ComplexError):
    pass


class Undefined(ComplexError):
    pass


@dataclass(frozen=True)
class CotangentPiece:
    a: frozenset
    b: frozenset
    i: int
    dim: int

    def to_dict(self) -> dict:
        return {
            "a": sorted(self.a, key=vertex_key),
            "b": sorted(self.b, key=vertex_key),
            "i": self.i,
            "dim": self.dim,
        }


@dataclass(frozen=True)
class USets:
    """U_b and U~_b as sets of face masks of ``complex``."""

    complex: SimplicialComplex
    U: frozenset
    U_tilde: frozenset

    def complement(self, tilde: bool = False) -> set[frozenset]:
        Y = self.U_tilde if tilde else self.U
        return {self.complex.face_of(m) for m in self.complex.face_masks - Y}


def _u_masks(K: SimplicialComplex, b: int) -> tuple[frozenset, frozenset]:
    faces = K.face_masks
    singles = [1 << i for i in bits(b)]
    U, Ut = set(), set()
    for f in faces:
        fb = f | b
        if fb in faces:
            continue
        U.add(f)
        if any((fb & ~s) not in faces for s in singles):
            Ut.add(f)
    return frozenset(U), frozenset(Ut)


def u_sets(K: SimplicialComplex, b) -> USets:
    bm = K.mask(b)
    if bm == 0:
        raise InvalidSupportPair("b must be non-empty")
    U, Ut = _u_masks(K, bm)
    return USets(K, U, Ut)


def l_b(K: SimplicialComplex, b) -> SimplicialComplex:
    bm = K.mask(b)
    for sub in submasks(bm):
        if sub != bm and sub not in K.face_masks:
            raise Undefined("L_b needs b in K or the boundary of b inside K")
    return l_b_mask(K, bm)


# ---------------------------------------------------------------------------
# order complex chains


class _Chains:
    """Chains of length 1..3 in the face poset of K, empty face included."""

    def __init__(self, K: SimplicialComplex):
        faces = sorted(K.face_masks, key=lambda m: (m.bit_count(), m))
        self.faces = faces
        self.index = {m: i for i, m in enumerate(faces)}
        idx = self.index
        pairs, triples = [], []
        for h in faces:
            hi = idx[h]
            subs = [idx[g] for g in submasks(h) if g != h]
            for gi in subs:
                pairs.append((gi, hi))
            for g in submasks(h):
                if g == h:
                    continue
                gi = idx[g]
                for f in submasks(g):
                    if f != g:
                        triples.append((idx[f], gi, hi))
        self.n = len(faces)
        self.c0 = np.arange(self.n, dtype=np.int64)
        self.c1 = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
        self.c2 = np.array(sorted(triples), dtype=np.int64).reshape(-1, 3)


def _chains(K: SimplicialComplex) -> _Chains:
    ch = K.__dict__.get("_order_chains")
    if ch is None:
        ch = _Chains(K)
        K.__dict__["_order_chains"] = ch
    return ch


def _locate(sorted_keys: np.ndarray, keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pos = np.searchsorted(sorted_keys, keys)
    pos_c = np.minimum(pos, max(len(sorted_keys) - 1, 0))
    ok = (pos < len(sorted_keys)) & (sorted_keys[pos_c] == keys) if len(sorted_keys) else np.zeros(len(keys), bool)
    return pos_c, ok


def _boundary(nrows, ncols, rows_list, signs, ok_list) -> linalg.SparseMatrix:
    r, c, v = [], [], []
    cols = np.arange(ncols, dtype=np.int64)
    for rows, sign, ok in zip(rows_list, signs, ok_list):
        r.append(rows[ok])
        c.append(cols[ok])
        v.append(np.full(int(ok.sum()), sign, dtype=np.int64))
    if r:
        r, c, v = np.concatenate(r), np.concatenate(c), np.concatenate(v)
    return linalg.SparseMatrix.from_coo(nrows, ncols, r, c, v)


def _relative_betti(K: SimplicialComplex, U: frozenset, Ut: frozenset, reduced: bool, top: int) -> list[int]:
    """Ranks of relative (co)homology of the order complexes in degrees 0..top."""
    ch = _chains(K)
    rel = np.zeros(ch.n, dtype=bool)
    for m in U - Ut:
        rel[ch.index[m]] = True
    if not rel.any():
        return [0] * (top + 1)
    R0 = ch.c0[rel]
    R1 = ch.c1[rel[ch.c1[:, 0]]] if len(ch.c1) else ch.c1
    R2 = ch.c2[rel[ch.c2[:, 0]]] if len(ch.c2) else ch.c2
    N = ch.n
    counts = [len(R0), len(R1), len(R2)]

    # d1: (f<g) -> g - f
    p_g, ok_g = _locate(R0, R1[:, 1])
    p_f, ok_f = _locate(R0, R1[:, 0])
    d1 = _boundary(len(R0), len(R1), [p_g, p_f], [1, -1], [ok_g, ok_f])
    mats = {1: d1}
    if top >= 1:
        keys1 = R1[:, 0] * N + R1[:, 1]
        order = np.argsort(keys1, kind="stable")
        skeys = keys1[order]
        rows_list, ok_list = [], []
        for a, b in ((1, 2), (0, 2), (0, 1)):
            pos, ok = _locate(skeys, R2[:, a] * N + R2[:, b])
            rows_list.append(order[pos] if len(order) else pos)
            ok_list.append(ok)
        mats[2] = _boundary(len(R1), len(R2), rows_list, [1, -1, 1], ok_list)
    ranks = {k: linalg.rank_mod_p(m) for k, m in mats.items()}
    ranks[0] = 1 if (reduced and counts[0]) else 0
    ranks.setdefault(2, 0)

    def betti(rk):
        return [counts[k] - rk[k] - rk.get(k + 1, 0) for k in range(top + 1)]

    out = betti(ranks)
    # d1 is a signed incidence matrix, so its rank is field independent;
    # a nonzero H^1 mod p is confirmed over the rationals.
    if top >= 1 and out[1]:
        ranks[2] = linalg.rank_exact(mats[2])
        out = betti(ranks)
    return out


def relative_pair_cohomology(K: SimplicialComplex, b, i: int) -> int:
    """dim H^{i-1}(<U_b>, <U~_b>), reduced for a single vertex b."""
    if i not in (1, 2):
        raise ValueError("only i = 1, 2 are supported")
    bm = K.mask(b)
    if bm == 0:
        raise InvalidSupportPair("b must be non-empty")
    return _piece_empty_a(K, bm, i)


def _piece_empty_a(K: SimplicialComplex, bm: int, i: int) -> int:
    U, Ut = _u_masks(K, bm)
    if U == Ut:
        return 0
    return _relative_betti(K, U, Ut, bm.bit_count() == 1, i - 1)[i - 1]


# ---------------------------------------------------------------------------
# pieces


def cone_point_mask(K: SimplicialComplex) -> int:
    m = K.vertex_mask
    for f in K.facet_masks:
        m &= f
    return m


def _strip_cones(K: SimplicialComplex, bm: int) -> tuple[SimplicialComplex, int] | None:
    """Drop cone points; None when b meets one (the piece is then zero)."""
    c = cone_point_mask(K)
    if not c:
        return K, bm
    if c & bm:
        return None
    return link_mask(K, c), bm


_PIECE_CACHE: dict = {}


def _piece_cached(L: SimplicialComplex, bm: int, i: int) -> int:
    lab = canonical_labeling(L)
    key = (canonical_form(L), frozenset(lab[L.universe[j]] for j in bits(bm)), i)
    val = _PIECE_CACHE.get(key)
    if val is None:
        val = _piece_empty_a(L, bm, i)
        _PIECE_CACHE[key] = val
    return val


def clear_cache() -> None:
    _PIECE_CACHE.clear()


def _piece_masks(K: SimplicialComplex, i: int, am: int, bm: int, cache: bool = True) -> int:
    L = link_mask(K, am)
    if bm & ~L.vertex_mask or not bm:
        return 0
    stripped = _strip_cones(L, bm)
    if stripped is None:
        return 0
    L, bm = stripped
    # quick exit: boundary of b must lie in L
    for j in bits(bm):
        if (bm & ~(1 << j)) not in L.face_masks:
            return 0
    return _piece_cached(L, bm, i) if cache else _piece_empty_a(L, bm, i)


def t_piece(K: SimplicialComplex, i: int, a, b, cache: bool = True) -> CotangentPiece:
    """T^i_{a-b}(K); zero whenever the support conditions fail."""
    if i not in (1, 2):
        raise ValueError("only i = 1, 2 are supported")
    a, b = frozenset(a), frozenset(b)
    if not b:
        raise InvalidSupportPair("b must be non-empty")
    if a & b:
        raise InvalidSupportPair("a and b must be disjoint")
    try:
        am = K.mask(a)
    except ComplexError:
        return CotangentPiece(a, b, i, 0)
    if am not in K.face_masks:
        return CotangentPiece(a, b, i, 0)
    try:
        bm = K.mask(b)
    except ComplexError:
        return CotangentPiece(a, b, i, 0)
    return CotangentPiece(a, b, i, _piece_masks(K, i, am, bm, cache))


def _candidate_b_masks(L: SimplicialComplex, with_faces: bool = True) -> list[int]:
    out = [1 << j for j in bits(L.vertex_mask)]
    if with_faces:
        out += [m for m in sorted(L.face_masks) if m.bit_count() >= 2]
    out += minimal_nonface_masks(L)
    return out


def candidate_pairs(K: SimplicialComplex) -> list[tuple[frozenset, frozenset]]:
    """All (a, b) that can carry a nonzero piece."""
    out = []
    for am in sorted(K.face_masks, key=lambda m: (m.bit_count(), m)):
        L = link_mask(K, am)
        for bm in _candidate_b_masks(L):
            out.append((K.face_of(am), K.face_of(bm)))
    return out


# ---------------------------------------------------------------------------
# join decomposition


def join_factors(K: SimplicialComplex) -> list[SimplicialComplex]:
    """Split K as a join along components of its minimal non-face hypergraph.

    Vertices lying in no minimal non-face are cone points and are dropped;
    they never change T^2 = 0.
    """
    nonfaces = minimal_nonface_masks(K)
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for nf in nonfaces:
        idx = list(bits(nf))
        for j in idx[1:]:
            a, b = find(idx[0]), find(j)
            if a != b:
                parent[a] = b
    comps: dict[int, int] = {}
    for nf in nonfaces:
        r = find(next(bits(nf)))
        comps[r] = comps.get(r, 0) | nf
    out = []
    for mask in sorted(comps.values()):
        out.append(SimplicialComplex._from_masks(K.universe, (f & mask for f in K.facet_masks), K._bit))
    return out


def complex_hash(K: SimplicialComplex) -> str:
    payload = json.dumps([[str(v) for v in f] for f in K.sorted_facets()])
    return hashlib.sha256(payload.encode()).hexdigest()


def _pieces_for(K: SimplicialComplex, i: int) -> list[CotangentPiece]:
    out = []
    for am in sorted(K.face_masks, key=lambda m: (m.bit_count(), m)):
        L = link_mask(K, am)
        for bm in _candidate_b_masks(L):
            d = _piece_masks(K, i, am, bm)
            out.append(CotangentPiece(K.face_of(am), K.face_of(bm), i, d))
    return out


def _pieces_worker(args):
    data, i = args
    K = SimplicialComplex.from_dict(data)
    return [p.to_dict() for p in _pieces_for(K, i)]


def t2_is_zero(K: SimplicialComplex, use_joins: bool = True, workers: int = 0) -> dict:
    """Certificate listing every candidate T^2 piece and whether all vanish.

    With ``use_joins`` the pieces are computed on the join factors only;
    T^2 of a join vanishes iff it vanishes on each factor.
    """
    factors = join_factors(K) if use_joins else [K]
    if workers and len(factors) > 1:
        with ProcessPoolExecutor(workers) as ex:
            chunks = list(ex.map(_pieces_worker, [(F.to_dict(), 2) for F in factors]))
        pairs = [p for chunk in chunks for p in chunk]
    else:
        pairs = [p.to_dict() for F in factors for p in _pieces_for(F, 2)]
    return {
        "complex_hash": complex_hash(K),
        "pairs": pairs,
        "all_zero": all(p["dim"] == 0 for p in pairs),
    }


def degree_zero_dim(K: SimplicialComplex, i: int) -> int:
    """dim (T^i_A)_0: each nonzero piece counted with its exponent vectors."""
    total = 0
    for am in sorted(K.face_masks):
        na = am.bit_count()
        if na == 0:
            continue
        L = link_mask(K, am)
        for bm in _candidate_b_masks(L):
            nb = bm.bit_count()
            if nb < na:
                continue
            d = _piece_masks(K, i, am, bm)
            if d:
                total += d * comb(nb - 1, na - 1)
    return total


def t1_degree_zero_dim(K: SimplicialComplex) -> int:
    return degree_zero_dim(K, 1)


def t2_degree_zero_dim(K: SimplicialComplex) -> int:
    return degree_zero_dim(K, 2)


# ---------------------------------------------------------------------------
# manifold shortcuts


def _check_nonedge(K: SimplicialComplex, b) -> int:
    bm = K.mask(b)
    if bm.bit_count() != 2 or bm in K.face_masks or bm & ~K.vertex_mask:
        raise PreconditionUnverified("b must be a non-edge")
    return bm


def t2_via_h1_lb(K: SimplicialComplex, b) -> int:
    """T^2_{0-b} for a non-edge of a homology d-sphere, as rank H~_{d-2}(L_b).

    For d = 3 this is the first homology of L_b.
    """
    bm = _check_nonedge(K, b)
    if not K.is_pure or not is_homology_sphere(K):
        raise PreconditionUnverified("K is not a homology sphere")
    L = l_b_mask(K, bm)
    deg = K.dim - 2
    return reduced_betti(L).get(deg, 0)


def t1_manifold_nonzero(K: SimplicialComplex, b) -> bool:
    """True iff K is the join of the boundary of b with L_b(K)."""
    bm = K.mask(b)
    if not bm:
        raise PreconditionUnverified("b must be non-empty")
    for sub in submasks(bm):
        if sub != bm and sub not in K.face_masks:
            return False
    if bm in K.face_masks:
        return False
    L = l_b_mask(K, bm)
    joined = {l | (bm & ~(1 << j)) for l in L.facet_masks for j in bits(bm)}
    return set(_maximal(joined)) == set(K.facet_masks)
