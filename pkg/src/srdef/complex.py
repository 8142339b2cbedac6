"""Abstract simplicial complexes.

Faces are stored as bitmasks over an ordered label universe; the public
API speaks in frozensets of labels. Complexes are immutable, and every
operation returns a new complex.
"""

from __future__ import annotations

import json
import re
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Iterator

import numpy as np

from . import linalg

Label = Hashable
Face = frozenset


class ComplexError(ValueError):
    pass


class NotAFace(ComplexError):
    pass


class FreshLabelClash(ComplexError):
    pass


class NotExchangeable(ComplexError):
    pass


class NotPure(ComplexError):
    pass


class SizeLimit(ComplexError):
    pass


_CHUNK = re.compile(r"(\d+)")


def vertex_key(v):
    """Deterministic order on mixed labels; digit runs compare numerically."""
    if isinstance(v, (int, np.integer)):
        return (0, (int(v),))
    parts = _CHUNK.split(str(v))
    return (1, tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p))


def submasks(m: int) -> Iterator[int]:
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    ordered = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    ``universe`` fixes the bit position of every label; it may contain
    labels that are not vertices (left over from links or unstarrings).
    """

    __slots__ = ("universe", "_bit", "_fmasks", "__dict__")

    def __init__(self, facets: Iterable[Iterable[Label]] = (), universe: Iterable[Label] | None = None):
        facets = [frozenset(f) for f in facets]
        labels = set().union(*facets) if facets else set()
        if universe is None:
            universe = sorted(labels, key=vertex_key)
        else:
            universe = list(universe)
            missing = labels.difference(universe)
            if missing:
                universe += sorted(missing, key=vertex_key)
        self.universe = tuple(universe)
        self._bit = {v: i for i, v in enumerate(self.universe)}
        if len(self._bit) != len(self.universe):
            raise ComplexError("duplicate vertex labels")
        self._fmasks = _maximal(self._mask_of(f) for f in facets) or (0,)

    @classmethod
    def _from_masks(cls, universe: tuple, masks: Iterable[int], bit=None) -> "SimplicialComplex":
        obj = cls.__new__(cls)
        obj.universe = universe
        obj._bit = bit if bit is not None else {v: i for i, v in enumerate(universe)}
        obj._fmasks = _maximal(masks) or (0,)
        return obj

    # -- label/mask conversion -------------------------------------------------
    def _mask_of(self, face: Iterable[Label]) -> int:
        m = 0
        for v in face:
            m |= 1 << self._bit[v]
        return m

    def mask(self, face: Iterable[Label]) -> int:
        try:
            return self._mask_of(face)
        except KeyError as exc:
            raise NotAFace(f"unknown vertex {exc.args[0]!r}") from None

    def face_of(self, m: int) -> Face:
        return frozenset(self.universe[i] for i in bits(m))

    def sorted_face(self, m: int) -> list:
        return [self.universe[i] for i in sorted(bits(m))]

    # -- basic data ------------------------------------------------------------
    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._fmasks

    @cached_property
    def facets(self) -> frozenset:
        return frozenset(self.face_of(m) for m in self._fmasks)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self._fmasks:
            m |= f
        return m

    @cached_property
    def vertices(self) -> tuple:
        vm = self.vertex_mask
        return tuple(v for i, v in enumerate(self.universe) if vm >> i & 1)

    @property
    def n_vertices(self) -> int:
        return self.vertex_mask.bit_count()

    @cached_property
    def face_masks(self) -> frozenset:
        out: set[int] = set()
        for f in self._fmasks:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for m in self.face_masks:
            out.setdefault(m.bit_count() - 1, []).append(m)
        for lst in out.values():
            lst.sort()
        return out

    def faces(self, dim: int | None = None) -> list[Face]:
        if dim is None:
            return [self.face_of(m) for d in sorted(self.faces_by_dim) for m in self.faces_by_dim[d]]
        return [self.face_of(m) for m in self.faces_by_dim.get(dim, [])]

    @cached_property
    def dim(self) -> int:
        return max(m.bit_count() for m in self._fmasks) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({m.bit_count() for m in self._fmasks}) == 1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_-1, f_0, ..., f_dim)``."""
        return tuple(len(self.faces_by_dim.get(d, [])) for d in range(-1, self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in zip(range(-1, self.dim + 1), self.f_vector)) + 1

    def __contains__(self, face) -> bool:
        try:
            return self._mask_of(face) in self.face_masks
        except KeyError:
            return False

    def has_mask(self, m: int) -> bool:
        return m in self.face_masks

    @cached_property
    def _key(self) -> frozenset:
        return self.facets

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n_vertices={self.n_vertices}, dim={self.dim}, facets={len(self._fmasks)})"

    def sorted_facets(self) -> list[list]:
        return sorted((self.sorted_face(m) for m in self._fmasks), key=lambda f: [vertex_key(v) for v in f])

    # -- graph data ---------------------------------------------------------------
    @cached_property
    def edge_masks(self) -> list[int]:
        return self.faces_by_dim.get(1, [])

    @cached_property
    def adjacency(self) -> dict[int, int]:
        """Bit index -> bitmask of neighbours in the edge graph."""
        adj = {i: 0 for i in bits(self.vertex_mask)}
        for e in self.edge_masks:
            a, b = bits(e)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    # -- serialization -----------------------------------------------------------
    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": self.sorted_facets()}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        return cls(data["facets"], universe=data.get("vertices"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# constructors


def from_facets(facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    return SimplicialComplex(facets)


def simplex(vertices: Iterable[Label]) -> SimplicialComplex:
    return SimplicialComplex([list(vertices)])


def boundary_of_simplex(vertices: Iterable[Label]) -> SimplicialComplex:
    vs = list(vertices)
    if not vs:
        raise ComplexError("the empty simplex has no boundary complex")
    return SimplicialComplex([[u for u in vs if u != v] for v in vs], universe=vs)


def empty_complex() -> SimplicialComplex:
    """The complex consisting only of the empty face."""
    return SimplicialComplex([])


def relabel(K: SimplicialComplex, mapping) -> SimplicialComplex:
    get = mapping.get if isinstance(mapping, dict) else mapping
    return SimplicialComplex(
        [[get(v) for v in K.sorted_face(m)] for m in K.facet_masks],
        universe=[get(v) for v in K.vertices],
    )


def induced_subcomplex(K: SimplicialComplex, vertices: Iterable[Label]) -> SimplicialComplex:
    keep = K.mask(vertices) & K.vertex_mask
    return SimplicialComplex._from_masks(K.universe, (f & keep for f in K.facet_masks), K._bit)


# ---------------------------------------------------------------------------
# local structure


def _require_face(K: SimplicialComplex, face) -> int:
    m = K.mask(face)
    if m not in K.face_masks:
        raise NotAFace(f"{sorted(face, key=vertex_key)} is not a face")
    return m


def link_mask(K: SimplicialComplex, m: int) -> SimplicialComplex:
    return SimplicialComplex._from_masks(K.universe, (f ^ m for f in K.facet_masks if f & m == m), K._bit)


def link(K: SimplicialComplex, face=()) -> SimplicialComplex:
    """Faces g disjoint from ``face`` with g | face in K."""
    return link_mask(K, _require_face(K, face))


def closed_star(K: SimplicialComplex, face=()) -> SimplicialComplex:
    m = _require_face(K, face)
    return SimplicialComplex._from_masks(K.universe, (f for f in K.facet_masks if f & m == m), K._bit)


def open_star(K: SimplicialComplex, face=()) -> set[Face]:
    m = _require_face(K, face)
    return {K.face_of(g) for g in K.face_masks if g & m == m}


def valency(K: SimplicialComplex, face) -> int:
    return link(K, face).n_vertices


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join; clashing label sets are separated by suffixing ``.0``/``.1``."""
    kv, lv = set(K.vertices), set(L.vertices)
    if kv & lv:
        K = relabel(K, {v: f"{v}.0" for v in K.vertices})
        L = relabel(L, {v: f"{v}.1" for v in L.vertices})
    universe = K.vertices + L.vertices
    shift = len(K.vertices)
    kbit = {v: i for i, v in enumerate(K.vertices)}
    kmask = [sum(1 << kbit[v] for v in K.sorted_face(m)) for m in K.facet_masks]
    lbit = {v: i + shift for i, v in enumerate(L.vertices)}
    lmask = [sum(1 << lbit[v] for v in L.sorted_face(m)) for m in L.facet_masks]
    return SimplicialComplex._from_masks(universe, (a | b for a in kmask for b in lmask))


def join_all(*complexes: SimplicialComplex) -> SimplicialComplex:
    out = empty_complex()
    for c in complexes:
        out = join(out, c)
    return out


def _extend_universe(K: SimplicialComplex, labels: Iterable[Label]):
    universe = list(K.universe)
    bit = dict(K._bit)
    for v in labels:
        if v not in bit:
            bit[v] = len(universe)
            universe.append(v)
    return tuple(universe), bit


def star_face(K: SimplicialComplex, face, v_new: Label) -> SimplicialComplex:
    """Stellar subdivision of ``face`` by the fresh vertex ``v_new``."""
    m = _require_face(K, face)
    if m.bit_count() < 2:
        raise ComplexError("starring needs a face of dimension at least one")
    if v_new in K._bit and K._bit[v_new] in set(bits(K.vertex_mask)):
        raise FreshLabelClash(f"{v_new!r} is already a vertex")
    universe, bit = _extend_universe(K, [v_new])
    vb = 1 << bit[v_new]
    out = []
    for f in K.facet_masks:
        if f & m != m:
            out.append(f)
            continue
        for i in bits(m):
            out.append((f ^ (1 << i)) | vb)
    return SimplicialComplex._from_masks(universe, out, bit)


def l_b_mask(K: SimplicialComplex, b: int) -> SimplicialComplex:
    """Intersection of links of the proper subsets of ``b`` (as masks)."""
    faces = None
    for sub in submasks(b):
        if sub == b:
            continue
        if sub not in K.face_masks:
            raise ComplexError("L_b is undefined: a proper subset of b is not a face")
        lk = {g ^ sub for g in K.face_masks if g & sub == sub}
        faces = lk if faces is None else faces & lk
    if faces is None:  # b is empty
        faces = set(K.face_masks)
    return SimplicialComplex._from_masks(K.universe, faces, K._bit)


def flip(K: SimplicialComplex, a, b) -> SimplicialComplex:
    """Stellar exchange replacing ``dbar(b)*abar*L`` by ``da*bbar*L``."""
    am = _require_face(K, a)
    if am == 0:
        raise NotExchangeable("a must be a non-empty face")
    b = list(b)
    if not b:
        raise NotExchangeable("b must be non-empty")
    universe, bit = _extend_universe(K, b)
    live = set(bits(K.vertex_mask))
    bm = 0
    for v in b:
        bm |= 1 << bit[v]
    if bm & am:
        raise NotExchangeable("a and b must be disjoint")
    fresh = [v for v in b if v not in K._bit or K._bit[v] not in live]
    if fresh and len(b) > 1:
        raise NotExchangeable("only single fresh vertices can be starred in")
    Kx = SimplicialComplex._from_masks(universe, K.facet_masks, bit)
    lk = link_mask(Kx, am)
    if bm in lk.face_masks:
        raise NotExchangeable("b is a face of link(a)")
    for sub in submasks(bm):
        if sub != bm and sub not in lk.face_masks:
            raise NotExchangeable("the boundary of b is not contained in link(a)")
    L = l_b_mask(lk, bm)
    dbL = {l | sub for l in L.facet_masks for sub in (bm ^ (1 << i) for i in bits(bm))}
    if set(_maximal(dbL)) != set(lk.facet_masks):
        raise NotExchangeable("link(a) does not factor as the join of the boundary of b with L")
    out = [f for f in K.facet_masks if f & am != am]
    for l in L.facet_masks:
        for i in bits(am):
            out.append((am ^ (1 << i)) | bm | l)
    return SimplicialComplex._from_masks(universe, out, bit)


def unstar(K: SimplicialComplex, v: Label, edge) -> SimplicialComplex:
    """Remove vertex ``v`` whose link is ``{u,w}``-suspension, adding edge {u,w}."""
    u, w = edge
    if K.mask([u, w]) in K.face_masks:
        raise NotExchangeable(f"{u!r},{w!r} already span an edge")
    return flip(K, [v], [u, w])


# ---------------------------------------------------------------------------
# non-faces, flagness, cliques


def minimal_nonface_masks(K: SimplicialComplex) -> list[int]:
    faces = K.face_masks
    out = set()
    verts = list(bits(K.vertex_mask))
    for f in faces:
        for i in verts:
            vb = 1 << i
            if f & vb:
                continue
            cand = f | vb
            if cand in faces or cand in out:
                continue
            if all((cand ^ (1 << j)) in faces for j in bits(cand)):
                out.add(cand)
    return sorted(out, key=lambda m: (m.bit_count(), m))


def minimal_nonfaces(K: SimplicialComplex) -> set[Face]:
    return {K.face_of(m) for m in minimal_nonface_masks(K)}


def is_flag(K: SimplicialComplex) -> bool:
    return all(m.bit_count() == 2 for m in minimal_nonface_masks(K))


def non_edges(K: SimplicialComplex) -> list[Face]:
    verts = list(bits(K.vertex_mask))
    faces = K.face_masks
    return [
        K.face_of((1 << a) | (1 << b))
        for a, b in combinations(verts, 2)
        if ((1 << a) | (1 << b)) not in faces
    ]


def _maximal_cliques(adj: dict[int, int]) -> list[int]:
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (adj[u] & p).bit_count())
        for v in list(bits(p & ~adj[pivot])):
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    allv = 0
    for v in adj:
        allv |= 1 << v
    if allv:
        expand(0, allv, 0)
    return out


def clique_complex(edges: Iterable[tuple], vertices: Iterable[Label] = (), max_dim: int | None = None) -> SimplicialComplex:
    """Flag complex whose faces are the cliques of the graph."""
    edges = [tuple(e) for e in edges]
    labels = set(vertices)
    for e in edges:
        labels.update(e)
    universe = sorted(labels, key=vertex_key)
    bit = {v: i for i, v in enumerate(universe)}
    adj = {i: 0 for i in range(len(universe))}
    for a, b in edges:
        if a == b:
            raise ComplexError("loops are not allowed")
        adj[bit[a]] |= 1 << bit[b]
        adj[bit[b]] |= 1 << bit[a]
    cliques = _maximal_cliques(adj)
    if max_dim is not None and any(c.bit_count() - 1 > max_dim for c in cliques):
        raise SizeLimit(f"a clique exceeds dimension {max_dim}")
    return SimplicialComplex._from_masks(tuple(universe), cliques, bit)


# ---------------------------------------------------------------------------
# homology


def boundary_matrix(K: SimplicialComplex, k: int) -> linalg.SparseMatrix:
    """Boundary C_k -> C_{k-1}; for k == 0 this is the augmentation."""
    cols = K.faces_by_dim.get(k, [])
    rows = K.faces_by_dim.get(k - 1, [])
    index = {m: i for i, m in enumerate(rows)}
    r, c, v = [], [], []
    for j, m in enumerate(cols):
        for pos, i in enumerate(sorted(bits(m))):
            r.append(index[m ^ (1 << i)])
            c.append(j)
            v.append(-1 if pos & 1 else 1)
    return linalg.SparseMatrix.from_coo(len(rows), len(cols), r, c, v)


def reduced_betti(K: SimplicialComplex) -> dict[int, int]:
    """Reduced rational Betti numbers in degrees -1..dim."""
    top = K.dim
    counts = {k: len(K.faces_by_dim.get(k, [])) for k in range(-1, top + 1)}
    mats = {k: boundary_matrix(K, k) for k in range(0, top + 1)}
    ranks = {k: linalg.rank_mod_p(m) for k, m in mats.items()}

    def betti(rk):
        return {k: counts[k] - rk.get(k, 0) - rk.get(k + 1, 0) for k in range(-1, top + 1)}

    b = betti(ranks)
    parities = {k % 2 for k, v in b.items() if v}
    if len(parities) > 1:
        # mod-p Betti numbers bound rational ones from above; equal Euler
        # characteristics settle the single-parity case, otherwise recompute.
        ranks = {k: linalg.rank_exact(m) for k, m in mats.items()}
        b = betti(ranks)
    return b


def reduced_homology(K: SimplicialComplex) -> tuple[int, ...]:
    """Ranks of reduced rational homology in degrees 0..dim."""
    b = reduced_betti(K)
    return tuple(b[k] for k in range(0, K.dim + 1))


def is_homology_sphere(K: SimplicialComplex, d: int | None = None) -> bool:
    """True if K and all its face links have the homology of spheres."""
    if d is None:
        d = K.dim
    if not K.is_pure or K.dim != d:
        raise NotPure(f"complex is not pure of dimension {d}")
    cache: dict[frozenset, bool] = {}
    for m in K.face_masks:
        lk = link_mask(K, m) if m else K
        want = d - m.bit_count()
        key = frozenset(lk.facet_masks)
        ok = cache.get(key)
        if ok is None:
            ok = _has_sphere_homology(lk, want)
            cache[key] = ok
        if not ok:
            return False
    return True


def _has_sphere_homology(K: SimplicialComplex, d: int) -> bool:
    if K.dim != d or not K.is_pure:
        return False
    if d == -1:
        return True
    if d == 0:
        return K.n_vertices == 2
    if d == 1:
        adj = K.adjacency
        if any(n.bit_count() != 2 for n in adj.values()):
            return False
    b = reduced_betti(K)
    return all(v == (1 if k == d else 0) for k, v in b.items())
