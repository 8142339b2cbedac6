import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given

from srdef import associahedron as assoc
from srdef.complex import boundary_of_simplex, join, simplex
from srdef.stanley_reisner import (
    SquarefreeMonomialIdeal,
    complex_of_ideal,
    cone_hilbert_polynomial,
    degree,
    h_vector,
    hilbert_poly_fano4,
    hilbert_polynomial,
    minimal_transversals,
    sr_ideal,
)
from strategies import complexes, two_spheres


def brute_transversals(sets, universe):
    sets = [frozenset(s) for s in sets]
    hits = [frozenset(c) for r in range(len(universe) + 1) for c in itertools.combinations(universe, r)
            if all(frozenset(c) & s for s in sets)]
    return sorted((h for h in hits if not any(o < h for o in hits)), key=sorted)


@given(complexes(max_vertices=7))
def test_sr_round_trip(K):
    assert complex_of_ideal(sr_ideal(K)) == K


@given(complexes(max_vertices=7))
def test_transversals_match_brute_force(K):
    gens = sr_ideal(K).generators
    got = sorted(minimal_transversals(gens, K.vertices), key=sorted)
    assert got == brute_transversals(gens, K.vertices)


def test_associahedron_ideal_is_crossing_quadrics():
    I = sr_ideal(assoc.build(6))
    assert len(I.generators) == comb(6, 4)
    assert all(len(g) == 2 and assoc.crossing(*g) for g in I.generators)


def test_ideal_json_round_trip():
    I = sr_ideal(assoc.build(5))
    assert SquarefreeMonomialIdeal.from_json(I.to_json(), I.vertex_set) == I


@given(two_spheres())
def test_h_vector_of_two_sphere_is_symmetric(K):
    h = h_vector(K)
    assert h == h[::-1]
    assert sum(h) == degree(K) == len(K.facets)


def test_hilbert_polynomial_of_simplex_and_cone():
    # k[x0, x1]: Hilbert polynomial t + 1
    assert hilbert_polynomial(simplex("ab")) == (Fraction(1), Fraction(1))
    K = boundary_of_simplex(range(5))
    assert cone_hilbert_polynomial(K) == hilbert_polynomial(join(K, simplex(["c"])))
    assert hilbert_poly_fano4(K) == cone_hilbert_polynomial(K)


def test_fano_formula_on_associahedron():
    K = assoc.build(7)
    poly = hilbert_poly_fano4(K)
    assert poly == cone_hilbert_polynomial(K)
    # normalized leading coefficient: 4! * (f3 / 24) = f3
    assert poly[-1] * 24 == len(K.facets)
