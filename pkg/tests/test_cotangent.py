import pytest
from hypothesis import given, settings, strategies as st

from srdef import associahedron as assoc
from srdef import cotangent as ct
from srdef.complex import boundary_of_simplex, is_flag, join, non_edges, simplex
from oracles import flag_t2_nonedge, flag_t2_vertex
from strategies import flag_complexes, two_spheres


def test_support_pair_errors():
    K = assoc.build(5)
    with pytest.raises(ct.InvalidSupportPair):
        ct.t_piece(K, 1, [], [])
    with pytest.raises(ct.InvalidSupportPair):
        ct.t_piece(K, 1, ["d1_3"], ["d1_3"])
    assert ct.t_piece(K, 2, ["d1_3", "d2_4"], ["d3_5"]).dim == 0  # a is not a face


def test_pentagon_t1_in_degree_zero():
    # the pentagon cone: 10 first order deformations in degree 0
    assert ct.t1_degree_zero_dim(join(assoc.build(5), simplex(["y0"]))) == 10


@pytest.mark.parametrize("m, want", [(0, 1), (1, 3), (2, 6)])
def test_square_join_simplex(m, want):
    # k[x0,x1,y0..ym]/(x0x1): smooth base of dimension (m+1)(m+2)/2
    K = join(assoc.build(4), simplex([f"y{k}" for k in range(m + 1)]))
    assert ct.t1_degree_zero_dim(K) == want


def test_hexagon_t1():
    assert ct.t1_degree_zero_dim(join(assoc.build(6), simplex(["y0"]))) == 33
    assert ct.t1_degree_zero_dim(join(assoc.build(6), simplex(["y0", "y1"]))) == 39


def test_t2_certificate_structure():
    cert = ct.t2_is_zero(assoc.build(6))
    assert cert["all_zero"] and cert["pairs"]
    assert all(p["dim"] == 0 for p in cert["pairs"])
    assert cert["complex_hash"] == ct.complex_hash(assoc.build(6))


def test_t2_vanishes_for_a_hypersurface():
    # the boundary of a simplex cuts out a hypersurface
    assert ct.t2_is_zero(boundary_of_simplex(range(4)))["all_zero"]


def test_join_factors():
    K = join(assoc.build(5), assoc.build(4))
    sizes = sorted(F.n_vertices for F in ct.join_factors(K))
    assert sizes == [2, 5]  # a 0-sphere and the pentagon


def test_joins_do_not_change_answer():
    K = join(assoc.build(5), boundary_of_simplex("ab"))
    assert ct.t2_is_zero(K, use_joins=True)["all_zero"] == ct.t2_is_zero(K, use_joins=False)["all_zero"]


def test_cache_is_transparent():
    K = assoc.build(6)
    ct.clear_cache()
    a = ct.t2_degree_zero_dim(K)
    b = ct.t2_degree_zero_dim(K)
    assert a == b == 0


def test_manifold_shortcut_precondition():
    with pytest.raises(ct.PreconditionUnverified):
        ct.t2_via_h1_lb(assoc.build(6), ["d1_3", "d1_4"])


@given(flag_complexes(max_vertices=7))
@settings(max_examples=30)
def test_flag_oracle_vertices_and_nonedges(K):
    for v in K.vertices:
        assert ct.relative_pair_cohomology(K, [v], 2) == flag_t2_vertex(K, v)
    for b in non_edges(K):
        assert ct.relative_pair_cohomology(K, b, 2) == flag_t2_nonedge(K, b)


@given(flag_complexes(max_vertices=7), st.data())
@settings(max_examples=30)
def test_flag_t2_vanishes_on_faces(K, data):
    big = [f for f in K.faces() if len(f) >= 2]
    if big:
        b = data.draw(st.sampled_from(sorted(big, key=sorted)))
        assert ct.relative_pair_cohomology(K, b, 2) == 0
        assert ct.relative_pair_cohomology(K, b, 1) == 0


@given(two_spheres())
@settings(max_examples=25)
def test_three_sphere_shortcut_matches_pipeline(S):
    # suspend a flag 2-sphere to get a flag 3-sphere
    if not is_flag(S):
        return
    K = join(S, boundary_of_simplex(["n", "s"]))
    for b in non_edges(K):
        assert ct.t2_via_h1_lb(K, b) == ct.relative_pair_cohomology(K, b, 2)


def test_t1_manifold_criterion():
    K = join(assoc.build(5), boundary_of_simplex(["n", "s"]))
    assert ct.t1_manifold_nonzero(K, ["n", "s"])
    assert not ct.t1_manifold_nonzero(K, ["d1_3", "d2_4"])
