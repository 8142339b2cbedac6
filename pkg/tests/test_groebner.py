import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srdef import associahedron as assoc
from srdef import groebner as G
from srdef.canon import isomorphic
from srdef.complex import join, simplex
from srdef.stanley_reisner import minimal_transversals, sr_ideal


def brute_transversals(sets, universe):
    sets = [frozenset(s) for s in sets]
    hits = [frozenset(c) for k in range(len(universe) + 1)
            for c in itertools.combinations(universe, k)
            if all(s & set(c) for s in sets)]
    return {h for h in hits if not any(o < h for o in hits)}


def test_polynomial_arithmetic():
    x, y = G.var("x"), G.var("y")
    p = G.pmul(G.padd(x, y), G.psub(x, y))
    assert p == G.psub(G.pmul(x, x), G.pmul(y, y))
    assert G.is_homogeneous(p)
    assert not G.is_homogeneous(G.padd(x, G.const(1)))
    assert G.poly_variables(p) == {"x", "y"}
    assert G.pneg(G.pneg(p)) == p
    assert G.padd(p, G.pneg(p)) == {}
    assert G.is_squarefree(G.mono("x", "y"))
    assert not G.is_squarefree(G.mono_mul(G.mono("x"), G.mono("x")))
    assert G.mono_degree(G.mono("x", "y")) == 2


def test_parse_entry():
    assert G.parse_entry("x12") == G.var("x12")
    assert G.parse_entry("-w-r") == G.padd(G.pneg(G.var("w")), G.pneg(G.var("r")))
    assert G.parse_entry("0") == {}


def test_pfaffian_of_four_by_four():
    M = G.antisymmetric_matrix(4)
    want = G.padd(
        G.pmul(G.var("x12"), G.var("x34")),
        G.pneg(G.pmul(G.var("x13"), G.var("x24"))),
        G.pmul(G.var("x14"), G.var("x23")),
    )
    assert G.pfaffian4(M, [1, 2, 3, 4]) == want


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_pfaffian_count(n):
    pf = G.all_pfaffians(G.antisymmetric_matrix(n))
    assert len(pf) == len(list(itertools.combinations(range(n), 4)))
    assert all(G.is_homogeneous(p) and len(p) == 3 for p in pf)


def test_g2_matrix_is_antisymmetric():
    M = G.g2_matrix()
    assert len(M) == 7
    for i in range(7):
        assert M[i][i] == {}
        for j in range(7):
            assert G.padd(M[i][j], M[j][i]) == {}
    assert "v" in set().union(*(G.poly_variables(e) for row in M for e in row))


@pytest.mark.parametrize("g, count, nvars", [(6, 6, 10), (7, 10, None), (8, 15, 15), (9, 21, 14), (10, 35, None)])
def test_generator_counts(g, count, nvars):
    gs = G.generator_set(g)
    assert len(gs.polynomials) == count
    if nvars is not None:
        assert len(gs.variables) == nvars
    assert gs.degree == 2 * (g - 1)
    assert gs.simplex_dim == G.INDEX[g]
    assert all(G.is_homogeneous(p) for p in gs.polynomials)
    assert all(G.mono_degree(m) == 2 for p in gs.polynomials for m in p)


def test_generator_checksum_is_stable():
    assert G.generator_set(8).checksum() == G.generator_set(8).checksum()
    assert G.generator_set(8).checksum() != G.generator_set(9).checksum()


@pytest.mark.parametrize("g", range(6, 11))
def test_orders_satisfy_every_constraint(g):
    data = G.degenerate(g, G.DEFAULT_CHOICES.get(g))
    order = data["order"]
    assert order.check() == []
    assert all(w >= 1 for w in order.weights.values())
    assert order.certificate["violations"] == 0


def test_circular_order_on_grassmannian():
    cons = G.circular_constraints(6)
    order = G.solve_order(cons, G._grassmann_vars(6))
    init = G.initial_monomials(G.all_pfaffians(G.antisymmetric_matrix(6)), order)
    for (i, j, k, l), m in zip(itertools.combinations(range(1, 7), 4), init):
        assert m == G.mono(f"x{i}{k}", f"x{j}{l}")


def test_infeasible_constraints():
    a, b = G.mono("a"), G.mono("b")
    with pytest.raises(G.Infeasible):
        G.solve_order([G.Constraint(a, b), G.Constraint(b, a)], ["a", "b"])


def test_ties_are_reported():
    order = G.TermOrder({"a": 1, "b": 1})
    with pytest.raises(G.TieDetected) as exc:
        G.initial_monomials([G.padd(G.var("a"), G.var("b"))], order)
    assert len(exc.value.monomials) == 2


def test_resolve_order_records_tiebreaks():
    p = G.padd(G.var("a"), G.var("b"))
    order, init = G.resolve_order([p], [], ["a", "b"])
    assert init == [G.mono("a")]
    assert order.certificate["tiebreaks"]


def test_tiers_respect_groups():
    G.check_tiers({"a": 0, "b": 1}, G.group_constraints([["a"], ["b"]]))
    with pytest.raises(G.Infeasible):
        G.check_tiers({"a": 1, "b": 0}, G.group_constraints([["a"], ["b"]]))


@pytest.mark.parametrize("g", range(6, 11))
def test_certify(g):
    cert = G.certify(g)
    t = cert["transversals"]
    assert cert["passed"] and t["passed"]
    assert t["transversal_count"] == 2 * (g - 1) <= t["degree_bound"]
    assert t["transversal_sizes"] == [t["codimension"]]
    assert cert["simplex_dim"] == G.INDEX[g]


@pytest.mark.parametrize("g", range(6, 11))
def test_target_complex(g):
    K = G.target_complex(g)
    assert K.n_vertices == g + 1 + G.INDEX[g] + 1
    assert K.dim == 2 + G.INDEX[g] + 1


@pytest.mark.parametrize("g", range(6, 11))
def test_transversals_against_brute_force(g):
    data = G.degenerate(g, G.DEFAULT_CHOICES.get(g))
    sups = [G.mono_support(m) for m in data["initial"]]
    used = sorted(set().union(*sups))
    assert set(minimal_transversals(sups, used)) == brute_transversals(sups, used)


def test_sz_on_plucker_quadric():
    m = G.mono("x13", "x24")
    cert = G.sz_certify([m], None, 2)
    assert cert["transversal_count"] == 2 and cert["codimension"] == 1


def test_sz_failures():
    a, b, c = "a", "b", "c"
    with pytest.raises(G.CertFailed) as exc:
        G.sz_certify([G.mono(a, b), G.mono(b, c)], None, 5)
    assert exc.value.reason == "mixed-cardinality"
    with pytest.raises(G.CertFailed) as exc:
        G.sz_certify([G.mono(a, b)], None, 1)
    assert exc.value.reason == "count>d"
    with pytest.raises(G.CertFailed) as exc:
        G.sz_certify([G.mono_mul(G.mono(a), G.mono(a))], None, 5)
    assert exc.value.reason == "not-squarefree"
    with pytest.raises(G.CertFailed) as exc:
        G.sz_certify([G.mono(a, b)], simplex([a, b, c]), 5)
    assert exc.value.reason == "wrong-complex"


@given(st.lists(st.frozensets(st.sampled_from("abcdef"), min_size=1, max_size=3), min_size=1, max_size=5))
def test_minimal_transversals_property(sets):
    universe = sorted(set().union(*sets))
    assert set(minimal_transversals(sets, universe)) == brute_transversals(sets, universe)


def test_g9_choice_enumeration():
    runs = G.choice_enumeration(9)
    assert len(runs) == 16
    hits = sorted(tuple(r["choices"]) for r in runs if r["iso_to_target"])
    # three vectors reach T10; reversing indices pairs two of them
    assert hits == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0)]


def test_g10_choice_enumeration():
    runs = G.choice_enumeration(10)
    assert len(runs) == 8
    assert sum(r["iso_to_target"] for r in runs) == 2
    assert G._default_g10() == tuple(next(r["choices"] for r in runs if r["iso_to_target"]))


def test_g9_diagonal_condition_selects_target():
    data = G.degenerate(9, None, extra=G.lg_diagonal_condition())
    assert isomorphic(data["complex"], G.target_complex(9))


@pytest.mark.parametrize("g", [6, 7, 8])
def test_every_admissible_order_reaches_target(g):
    ideals = G.admissible_ideals(g)
    assert ideals
    assert all(d["iso_to_target"] for d in ideals)


def test_choice_enumeration_only_for_9_and_10():
    with pytest.raises(G.GroebnerError):
        G.choice_enumeration(8)


def test_g6_quadric_is_configurable():
    gs = G.generator_set(6, quadric=("x12", "x15"))
    assert G.mono("x12", "x15") in gs.polynomials[-1]


@pytest.mark.parametrize("m", [-1, 0, 1, 2])
def test_versal_zero_fiber(m):
    eqs = G.versal_a6(m, G.VersalParameters.zero(m))
    assert len(eqs) == 15
    assert all(len(p) == 1 and list(p.values()) == [1] for p in eqs)
    monos = {next(iter(p)) for p in eqs}
    ideal = sr_ideal(G.versal_special_fiber(m))
    assert {G.mono_support(x) for x in monos} == set(ideal.generators)


@pytest.mark.parametrize("seed", range(5))
def test_versal_u_zero_keeps_heads(seed):
    rng = np.random.default_rng(seed)
    m = 1
    p = G.VersalParameters.random(m, rng)
    for k in p.u:
        p.u[k] = 0
    full = G.versal_a6(m, p)
    heads = G.versal_a6(m, p, heads_only=True)
    assert full == heads
    for t in G.versal_terms(m, p):
        assert all(x == {} for x in t[3:])


@pytest.mark.parametrize("seed", range(3))
def test_versal_equations_are_quadrics(seed):
    rng = np.random.default_rng(seed)
    p = G.VersalParameters.random(2, rng)
    variables = set(G.versal_variables(2))
    for eq in G.versal_a6(2, p):
        assert G.is_homogeneous(eq)
        assert all(G.mono_degree(mm) == 2 for mm in eq)
        assert G.poly_variables(eq) <= variables


def test_versal_parameter_mismatch():
    with pytest.raises(G.GroebnerError):
        G.versal_terms(2, G.VersalParameters.zero(1))


def test_versal_special_fiber_is_join():
    assert G.versal_special_fiber(1) == join(assoc.build(6), simplex(["y0", "y1"]))
