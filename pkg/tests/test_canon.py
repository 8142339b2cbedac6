import networkx as nx
import pytest
from hypothesis import given, strategies as st

from srdef import associahedron as assoc
from srdef.canon import (
    automorphism_generators,
    automorphism_group_order,
    canonical_form,
    canonical_hash,
    face_orbits,
    isomorphic,
    isomorphism,
)
from srdef.complex import boundary_of_simplex, join, relabel, star_face
from strategies import complexes, relabel_map, two_spheres


def _nx_graph(K):
    G = nx.Graph()
    for f in K.facets:
        fn = ("f", tuple(sorted(map(str, f))))
        G.add_node(fn, kind=1)
        for v in f:
            G.add_node(("v", str(v)), kind=0)
            G.add_edge(fn, ("v", str(v)))
    return G


def _nx_iso(K1, K2):
    return nx.is_isomorphic(_nx_graph(K1), _nx_graph(K2), node_match=lambda a, b: a["kind"] == b["kind"])


def test_known_automorphism_orders(deltahedra):
    octa = join(join(boundary_of_simplex("ab"), boundary_of_simplex("cd")), boundary_of_simplex("ef"))
    assert automorphism_group_order(octa) == 48
    assert automorphism_group_order(boundary_of_simplex(range(5))) == 120
    orders = {name: automorphism_group_order(K) for name, K in deltahedra.items()}
    assert orders["T4"] == 24 and orders["T6"] == 48
    assert orders["T7"] == 20 and orders["T8"] == 8 and orders["T9"] == 12 and orders["T10"] == 16


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_associahedron_symmetry_is_dihedral(n):
    assert automorphism_group_order(assoc.build(n)) == 2 * n


@given(complexes(), st.integers(0, 10**6))
def test_canonical_form_invariant_under_relabelling(K, seed):
    K2 = relabel(K, relabel_map(K, seed))
    assert canonical_form(K) == canonical_form(K2)
    assert canonical_hash(K) == canonical_hash(K2)
    iso = isomorphism(K, K2)
    assert iso is not None and relabel(K, iso) == K2


@given(two_spheres(max_steps=6), two_spheres(max_steps=6))
def test_isomorphism_agrees_with_networkx(K1, K2):
    assert isomorphic(K1, K2) == _nx_iso(K1, K2)


@given(two_spheres(max_steps=6))
def test_generators_are_automorphisms(K):
    facets = set(K.facets)
    for g in automorphism_generators(K):
        assert {frozenset(g[v] for v in f) for f in facets} == facets


def test_face_orbits_partition():
    K = assoc.build(6)
    orbits = face_orbits(K, K.faces(0))
    assert sorted(len(o) for o in orbits) == [3, 6]
    S = star_face(K, ["d1_3", "d1_4"], "v")
    assert sum(len(o) for o in face_orbits(S, S.faces(1))) == len(S.faces(1))
