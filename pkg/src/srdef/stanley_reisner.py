"""Stanley-Reisner ideals as combinatorial data, plus Hilbert data from f-vectors."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .complex import (
    ComplexError,
    NotPure,
    SimplicialComplex,
    bits,
    join,
    minimal_nonface_masks,
    simplex,
    vertex_key,
)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Generators are vertex sets read as squarefree monomials."""

    generators: frozenset
    vertex_set: tuple

    def __post_init__(self):
        gens = frozenset(frozenset(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "vertex_set", tuple(self.vertex_set))
        missing = set().union(*gens) - set(self.vertex_set) if gens else set()
        if missing:
            raise ComplexError(f"generators use undeclared vertices {sorted(missing, key=vertex_key)}")

    def minimalized(self) -> "SquarefreeMonomialIdeal":
        gens = sorted(self.generators, key=len)
        keep: list[frozenset] = []
        for g in gens:
            if not any(k <= g for k in keep):
                keep.append(g)
        return SquarefreeMonomialIdeal(frozenset(keep), self.vertex_set)

    def sorted_generators(self) -> list[list]:
        return sorted(
            (sorted(g, key=vertex_key) for g in self.generators),
            key=lambda g: (len(g), [vertex_key(v) for v in g]),
        )

    def to_json(self) -> str:
        return json.dumps(self.sorted_generators())

    @classmethod
    def from_json(cls, text: str, vertex_set: Iterable | None = None) -> "SquarefreeMonomialIdeal":
        gens = [frozenset(g) for g in json.loads(text)]
        if vertex_set is None:
            vertex_set = sorted(set().union(*gens), key=vertex_key)
        return cls(frozenset(gens), tuple(vertex_set))


def sr_ideal(K: SimplicialComplex) -> SquarefreeMonomialIdeal:
    gens = frozenset(K.face_of(m) for m in minimal_nonface_masks(K))
    return SquarefreeMonomialIdeal(gens, K.vertices)


def minimal_transversal_masks(edges: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a hypergraph given by bitmasks (Berge)."""
    trans = [0]
    for e in sorted(set(edges), key=lambda m: (m.bit_count(), m)):
        if e == 0:
            return []
        nxt = set()
        for t in trans:
            if t & e:
                nxt.add(t)
            else:
                for i in bits(e):
                    nxt.add(t | (1 << i))
        ordered = sorted(nxt, key=lambda m: (m.bit_count(), m))
        trans = []
        for t in ordered:
            if not any(k & t == k for k in trans):
                trans.append(t)
    return sorted(trans)


def minimal_transversals(sets: Iterable[Iterable], universe: Iterable | None = None) -> list[frozenset]:
    sets = [frozenset(s) for s in sets]
    labels = list(universe) if universe is not None else sorted(set().union(*sets) if sets else set(), key=vertex_key)
    bit = {v: i for i, v in enumerate(labels)}
    masks = [sum(1 << bit[v] for v in s) for s in sets]
    return [frozenset(labels[i] for i in bits(t)) for t in minimal_transversal_masks(masks)]


def complex_of_ideal(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex of squarefree sets containing no generator.

    Facets are complements of minimal transversals of the generators.
    """
    universe = tuple(ideal.vertex_set)
    bit = {v: i for i, v in enumerate(universe)}
    full = (1 << len(universe)) - 1
    masks = [sum(1 << bit[v] for v in g) for g in ideal.generators]
    trans = minimal_transversal_masks(masks)
    if not trans:
        raise ComplexError("the unit ideal has no complex")
    return SimplicialComplex._from_masks(universe, [full & ~t for t in trans], bit)


def degree(K: SimplicialComplex) -> int:
    if not K.is_pure:
        raise NotPure("degree is defined here for pure complexes")
    return len(K.facet_masks)


def h_vector(K: SimplicialComplex) -> list[int]:
    """Numerator of the Hilbert series over (1-t)^(dim+1)."""
    d1 = K.dim + 1
    f = K.f_vector
    h = [0] * (d1 + 1)
    for i in range(d1 + 1):
        for j in range(d1 - i + 1):
            h[i + j] += f[i] * comb(d1 - i, j) * (-1) ** j
    return h


hilbert_series_numerator = h_vector


def _binom_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients (ascending) of C(t + shift, k) as a polynomial in t."""
    poly = [Fraction(1)]
    for r in range(k):
        c = Fraction(shift - r, 1)
        new = [Fraction(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            new[i] += a * c
            new[i + 1] += a
        poly = new
    den = 1
    for r in range(1, k + 1):
        den *= r
    return [a / den for a in poly]


def hilbert_polynomial(K: SimplicialComplex) -> tuple[Fraction, ...]:
    """Hilbert polynomial of the Stanley-Reisner ring, ascending coefficients.

    Degree-k monomials with support a fixed i-set number C(k-1, i-1).
    """
    f = K.f_vector
    out = [Fraction(0)] * (K.dim + 2)
    for i in range(1, K.dim + 2):
        for e, c in enumerate(_binom_poly(-1, i - 1)):
            out[e] += f[i] * c
    if K.dim < 0:
        out = [Fraction(0)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def hilbert_poly_fano4(K: SimplicialComplex) -> tuple[Fraction, ...]:
    """Hilbert polynomial of P(K * point) for a 3-sphere K, closed form."""
    if not K.is_pure or K.dim != 3:
        raise NotPure("expected a pure 3-dimensional complex")
    f0 = K.f_vector[1]
    f3 = K.f_vector[4]
    F = Fraction
    return (
        F(1),
        F(f0, 2) - F(f3, 12),
        F(f0, 2) - F(f3, 24),
        F(f3, 12),
        F(f3, 24),
    )


def cone_hilbert_polynomial(K: SimplicialComplex) -> tuple[Fraction, ...]:
    """f-vector Hilbert polynomial of K joined with a fresh point."""
    return hilbert_polynomial(join(K, simplex(["__apex__"])))


def poly_to_strings(poly: Iterable[Fraction]) -> list[str]:
    return [str(c) for c in poly]
