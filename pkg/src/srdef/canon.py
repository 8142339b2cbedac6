"""Canonical labeling and automorphisms of simplicial complexes.

Flag complexes are labeled through their edge graph; other complexes go
through the vertex-facet incidence graph. The search is a plain
individualization-refinement tree with orbit pruning.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from typing import Iterable

from sympy.combinatorics import Permutation, PermutationGroup

from .complex import SimplicialComplex, bits, is_flag, vertex_key


def _refine(adj: list[list[int]], cells: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    while True:
        cell_of = [0] * n
        for ci, c in enumerate(cells):
            for v in c:
                cell_of[v] = ci
        new: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple(sorted(Counter(cell_of[u] for u in adj[v]).items()))
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new.append(groups[key])
        cells = new
        if not changed:
            return cells


class _Search:
    def __init__(self, adj: list[list[int]], colors: list[int]):
        self.n = len(adj)
        self.adj = adj
        self.edges = [(a, b) for a in range(self.n) for b in adj[a] if a < b]
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        self.cells0 = [by_color[c] for c in sorted(by_color)]
        self.gens: list[list[int]] = []
        self.first = None
        self.best = None

    def run(self):
        if self.n:
            self._rec(self.cells0, [])
        else:
            self.first = self.best = ((), [])
        return self

    def _cert(self, pos):
        return tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in self.edges))

    def _leaf(self, cells):
        pos = [0] * self.n
        for i, c in enumerate(cells):
            pos[c[0]] = i
        cert = self._cert(pos)
        if self.first is None:
            self.first = self.best = (cert, pos)
            return
        for ref in (self.first, self.best):
            if cert == ref[0]:
                inv = [0] * self.n
                for v, p in enumerate(pos):
                    inv[p] = v
                perm = [inv[ref[1][v]] for v in range(self.n)]
                if perm != list(range(self.n)):
                    self.gens.append(perm)
                return
        if cert < self.best[0]:
            self.best = (cert, pos)

    def _orbit_rep(self, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return find

    def _rec(self, cells, prefix):
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        size = min(len(c) for c in cells if len(c) > 1)
        ti = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[ti]
        done: list[int] = []
        for v in target:
            if done:
                find = self._orbit_rep(prefix)
                if any(find(v) == find(u) for u in done):
                    continue
            done.append(v)
            rest = [w for w in target if w != v]
            self._rec(cells[:ti] + [[v], rest] + cells[ti + 1:], prefix + [v])


def _graph_of(K: SimplicialComplex):
    """Colored graph encoding K, plus the number of leading vertex nodes."""
    verts = list(bits(K.vertex_mask))
    index = {b: i for i, b in enumerate(verts)}
    nv = len(verts)
    if is_flag(K):
        adj = [[] for _ in range(nv)]
        for e in K.edge_masks:
            a, b = (index[i] for i in bits(e))
            adj[a].append(b)
            adj[b].append(a)
        colors = [0] * nv
    else:
        facets = K.facet_masks
        adj = [[] for _ in range(nv + len(facets))]
        for j, f in enumerate(facets):
            for i in bits(f):
                adj[index[i]].append(nv + j)
                adj[nv + j].append(index[i])
        colors = [0] * nv + [1] * len(facets)
    return verts, adj, colors


def _search(K: SimplicialComplex):
    cached = K.__dict__.get("_canon_search")
    if cached is None:
        verts, adj, colors = _graph_of(K)
        cached = (verts, _Search(adj, colors).run())
        K.__dict__["_canon_search"] = cached
    return cached


def canonical_labeling(K: SimplicialComplex) -> dict:
    """Vertex label -> canonical integer label."""
    verts, s = _search(K)
    pos = s.best[1]
    return {K.universe[b]: pos[i] for i, b in enumerate(verts)}


def canonical_form(K: SimplicialComplex) -> tuple:
    """Sorted facet tuple under canonical integer labels."""
    cached = K.__dict__.get("_canon_form")
    if cached is None:
        lab = canonical_labeling(K)
        cached = tuple(sorted(tuple(sorted(lab[v] for v in K.face_of(m))) for m in K.facet_masks))
        K.__dict__["_canon_form"] = cached
    return cached


def canonical_hash(K: SimplicialComplex) -> str:
    return hashlib.sha256(json.dumps(canonical_form(K)).encode()).hexdigest()


def isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    if K1.f_vector != K2.f_vector:
        return False
    return canonical_form(K1) == canonical_form(K2)


def isomorphism(K1: SimplicialComplex, K2: SimplicialComplex) -> dict | None:
    """A vertex map sending K1 onto K2, or None."""
    if not isomorphic(K1, K2):
        return None
    l1 = canonical_labeling(K1)
    inv2 = {p: v for v, p in canonical_labeling(K2).items()}
    return {v: inv2[p] for v, p in l1.items()}


def automorphism_generators(K: SimplicialComplex) -> list[dict]:
    """Generators of Aut(K) as label permutations."""
    verts, s = _search(K)
    nv = len(verts)
    out = []
    for g in s.gens:
        perm = {K.universe[verts[i]]: K.universe[verts[g[i]]] for i in range(nv)}
        if any(k != v for k, v in perm.items()):
            out.append(perm)
    return out


def automorphism_group_order(K: SimplicialComplex) -> int:
    verts, s = _search(K)
    nv = len(verts)
    gens = [Permutation(g[:nv], size=nv) for g in s.gens] if nv else []
    if not gens:
        return 1
    return int(PermutationGroup(gens).order())


def face_orbits(K: SimplicialComplex, faces: Iterable) -> list[list[frozenset]]:
    """Partition ``faces`` into Aut(K)-orbits; orbits and members sorted."""
    faces = [frozenset(f) for f in faces]
    parent = {f: f for f in faces}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in automorphism_generators(K):
        for f in faces:
            img = frozenset(g[v] for v in f)
            if img in parent:
                a, b = find(f), find(img)
                if a != b:
                    parent[a] = b
    groups: dict[frozenset, list[frozenset]] = {}
    for f in faces:
        groups.setdefault(find(f), []).append(f)

    def fkey(f):
        return sorted(vertex_key(v) for v in f)

    out = [sorted(g, key=fkey) for g in groups.values()]
    return sorted(out, key=lambda g: fkey(g[0]))
