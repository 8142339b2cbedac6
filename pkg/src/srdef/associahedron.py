"""Dual associahedra: complexes of non-crossing diagonals of polygons.

Diagonals carry labels ``d{i}_{j}`` with ``i < j``; polygon vertices are
numbered 1..n. Sub-polygons are given by an ordered list of polygon
vertices so that splittings can be iterated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .complex import (
    ComplexError,
    NotAFace,
    NotExchangeable,
    SimplicialComplex,
    clique_complex,
    empty_complex,
    flip,
    is_flag,
    join,
    join_all,
    star_face,
    simplex,
)


class NotCrossing(ComplexError):
    pass


class UnstarBlocked(ComplexError):
    pass


class InvalidPartition(ComplexError):
    pass


class EdgeMissing(ComplexError):
    pass


_LABEL = re.compile(r"^d(\d+)_(\d+)$")


@dataclass(frozen=True, order=True)
class Diagonal:
    i: int
    j: int

    def __post_init__(self):
        i, j = sorted((self.i, self.j))
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def label(self) -> str:
        return f"d{self.i}_{self.j}"

    @classmethod
    def parse(cls, label: str) -> "Diagonal":
        m = _LABEL.match(label)
        if not m:
            raise ValueError(f"not a diagonal label: {label!r}")
        return cls(int(m.group(1)), int(m.group(2)))


def diag(i: int, j: int) -> str:
    return Diagonal(i, j).label


def _as_diag(d) -> Diagonal:
    if isinstance(d, Diagonal):
        return d
    if isinstance(d, str):
        return Diagonal.parse(d)
    return Diagonal(*d)


def crossing(d1, d2) -> bool:
    """True iff the chords cross in the interior of the polygon."""
    a, b = _as_diag(d1), _as_diag(d2)
    return a.i < b.i < a.j < b.j or b.i < a.i < b.j < a.j


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def facet_count(n: int) -> int:
    """Number of triangulations of an n-gon."""
    return catalan(n - 2)


def polygon_diagonals(poly: Sequence[int]) -> list[str]:
    k = len(poly)
    out = []
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            out.append(diag(poly[a], poly[b]))
    return out


def polygon_complex(poly: Sequence[int]) -> SimplicialComplex:
    """Dual associahedron of the polygon with the given cyclic vertex list."""
    verts = polygon_diagonals(poly)
    edges = [(u, v) for x, u in enumerate(verts) for v in verts[x + 1:] if not crossing(u, v)]
    return clique_complex(edges, verts)


def build(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("need n >= 3")
    return polygon_complex(list(range(1, n + 1)))


def diagonals(n: int) -> list[str]:
    return polygon_diagonals(list(range(1, n + 1)))


def polygon_partition(n: int, f: Iterable) -> list[list[int]]:
    """Polygons cut out of the n-gon by the non-crossing diagonals ``f``."""
    polys = [list(range(1, n + 1))]
    for d in sorted(_as_diag(x) for x in f):
        for idx, P in enumerate(polys):
            if d.i in P and d.j in P:
                a, b = P.index(d.i), P.index(d.j)
                a, b = min(a, b), max(a, b)
                if b - a < 2 or (a == 0 and b == len(P) - 1):
                    raise NotAFace(f"{d.label} is not a diagonal of a remaining polygon")
                polys[idx:idx + 1] = [P[a:b + 1], P[b:] + P[:a + 1]]
                break
        else:
            raise NotAFace(f"{d.label} crosses another diagonal")
    return polys


def link_decomposition(n: int, f: Iterable) -> list[int]:
    return sorted(len(P) for P in polygon_partition(n, f))


def _arc(n: int, p: int, q: int) -> list[int]:
    out = [p]
    while out[-1] != q:
        out.append(out[-1] % n + 1)
    return out


def l_b_structure(n: int, b: Iterable) -> SimplicialComplex:
    """The join of the four balls B_pq over the edges of the quadrangle of b."""
    d1, d2 = (_as_diag(x) for x in b)
    if not crossing(d1, d2):
        raise NotCrossing(f"{d1.label} and {d2.label} do not cross")
    i, j, k, l = sorted((d1.i, d1.j, d2.i, d2.j))
    parts = []
    for p, q in ((i, j), (j, k), (k, l), (l, i)):
        poly = _arc(n, p, q)
        if len(poly) == 2:
            parts.append(empty_complex())
        else:
            parts.append(join(simplex([diag(p, q)]), polygon_complex(poly)))
    return join_all(*parts)


# ---------------------------------------------------------------------------
# tangent basis


def t1_basis(n: int, m: int) -> dict[str, list[dict]]:
    """The four families of rational monomials spanning (T^1)_0 of A_n * Delta_m.

    Each element is ``{"num": labels, "den": labels}``; ``num`` may repeat a
    label for a square.
    """
    if n < 5:
        raise ValueError("need n >= 5")

    def c(x):
        return (x - 1) % n + 1

    s1, s2, s3, s4 = [], [], [], []
    for i in range(1, n + 1):
        j = c(i + 3)
        den = [diag(c(i + 1), j), diag(i, c(j - 1))]
        far = _arc(n, j, i)
        for other in [diag(i, j)] + polygon_diagonals(far):
            s1.append({"num": [diag(i, j), other], "den": den})
        for k in range(m + 1):
            s2.append({"num": [diag(i, j), f"y{k}"], "den": den})
    for i in range(1, n + 1):
        for off in range(3, n - 2):
            j = c(i + off)
            s3.append({
                "num": [diag(i, c(j - 1)), diag(i, c(j + 1))],
                "den": [diag(i, j), diag(c(j - 1), c(j + 1))],
            })
    seen = set()
    for i in range(1, n + 1):
        for off in range(4, n - 1):
            j = c(i + off)
            num = [diag(i, j), diag(c(i + 1), c(j - 1))]
            den = [diag(c(i + 1), j), diag(i, c(j - 1))]
            key = (frozenset(num), frozenset(den))
            if key not in seen:
                seen.add(key)
                s4.append({"num": num, "den": den})
    return {"1": s1, "2": s2, "3": s3, "4": s4}


def t1_basis_sizes(n: int, m: int) -> tuple[int, int, int, int]:
    return (n * (n - 3) * (n - 4) // 2, n * (m + 1), n * (n - 5), n * (n - 5) // 2)


def tangent_dimension(n: int, m: int) -> int:
    return n * (n * n - 4 * n - 3) // 2 + n * (m + 1)


# ---------------------------------------------------------------------------
# unstarring


def default_order(poly_len: int, r: int) -> list[tuple[int, int]]:
    """Local indices of D_{n,r}, largest first: j descending, then i ascending."""
    pairs = [(i, j) for i in range(3, r) for j in range(r + 1, poly_len + 1)]
    return sorted(pairs, key=lambda p: (-p[1], p[0]))


@dataclass
class UnstarPlan:
    n: int
    r: int
    order: list[tuple[int, int]] | None = None
    polygon: list[int] | None = field(default=None)

    def __post_init__(self):
        if not (self.n > self.r >= 4):
            raise InvalidPartition("need n > r >= 4")
        if self.polygon is None:
            self.polygon = list(range(1, self.n + 1))
        if len(self.polygon) != self.n:
            raise InvalidPartition("polygon length must be n")
        expected = set(default_order(self.n, self.r))
        if self.order is None:
            self.order = default_order(self.n, self.r)
        elif set(map(tuple, self.order)) != expected or len(self.order) != len(expected):
            raise InvalidPartition("order must enumerate D_{n,r}")
        self.order = [tuple(p) for p in self.order]

    @property
    def s(self) -> int:
        return self.n + 3 - self.r

    def split_polygons(self) -> tuple[list[int], list[int]]:
        P = self.polygon
        return P[: self.r], P[:2] + P[self.r - 1:]

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "s": self.s, "order": [list(p) for p in self.order], "polygon": self.polygon}


def unstar_sequence(plan: UnstarPlan, K: SimplicialComplex | None = None) -> list[SimplicialComplex]:
    """Complexes from the start through each unstarring, in order.

    ``K`` defaults to the dual associahedron of the plan's polygon; it may
    be a larger join containing it.
    """
    P = plan.polygon
    if K is None:
        K = polygon_complex(P)
    out = [K]
    for i, j in plan.order:
        v = diag(P[i - 1], P[j - 1])
        b = [diag(P[0], P[i - 1]), diag(P[1], P[j - 1])]
        try:
            K = flip(K, [v], b)
        except NotExchangeable as exc:
            raise UnstarBlocked(f"cannot unstar {v} into {b}: {exc}") from None
        out.append(K)
    return out


def unstar_facet_counts(plan: UnstarPlan) -> list[int]:
    """Closed-form facet counts along the default top-level chain."""
    n = plan.n
    counts = [facet_count(n)]
    for i, j in plan.order:
        counts.append(counts[-1] - facet_count(i) * facet_count(n - j + 3) * facet_count(j - i + 1))
    return counts


def hyperoct_chain(rs: Sequence[int]) -> list[SimplicialComplex]:
    """Iterated splittings of A_n into the join of the A_{r_i}."""
    rs = list(rs)
    m = len(rs)
    n = sum(rs) - 3 * (m - 1)
    if m < 2 or any(not (n > r >= 4) for r in rs):
        raise InvalidPartition(f"invalid partition {rs} of n={n}")
    poly = list(range(1, n + 1))
    K = polygon_complex(poly)
    chain = [K]
    for r in rs[:-1]:
        plan = UnstarPlan(len(poly), r, polygon=poly)
        seq = unstar_sequence(plan, K)
        chain.extend(seq[1:])
        K = seq[-1]
        poly = plan.split_polygons()[1]
    return chain


def hyperoct_terminal(rs: Sequence[int]) -> SimplicialComplex:
    n = sum(rs) - 3 * (len(rs) - 1)
    poly = list(range(1, n + 1))
    parts = []
    for r in rs[:-1]:
        parts.append(polygon_complex(poly[:r]))
        poly = poly[:2] + poly[r - 1:]
    parts.append(polygon_complex(poly))
    return join_all(*parts)


def c_n_series(n: int) -> list[SimplicialComplex]:
    """Star eps_k into {d1_3, d_k_n} for k = 4..n-2; returns the n-5 results."""
    if n < 6:
        raise ValueError("need n >= 6")
    K = build(n)
    out = []
    for k in range(4, n - 1):
        e = [diag(1, 3), diag(k, n)]
        if K.mask(e) not in K.face_masks:
            raise EdgeMissing(f"{e} is not an edge")
        K = star_face(K, e, f"eps{k}")
        out.append(K)
    return out
