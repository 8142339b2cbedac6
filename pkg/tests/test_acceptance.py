"""Acceptance suite: one test per criterion, summarised as PASS/FAIL lines.

Run with ``pytest tests/test_acceptance.py``; the summary is printed at the
end of the session.  The slowest criteria are 6 and 8, a few minutes each.
"""

import itertools
import math
import random
from collections import Counter
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from acceptance_log import criterion
from oracles import flag_t2_nonedge, flag_t2_vertex
from srdef import associahedron as assoc
from srdef import canon, groebner, spheres
from srdef import cotangent as ct
from srdef.complex import (
    boundary_of_simplex,
    clique_complex,
    is_flag,
    is_homology_sphere,
    join,
    join_all,
    link,
    non_edges,
    simplex,
    valency,
)
from srdef.stanley_reisner import cone_hilbert_polynomial, hilbert_poly_fano4, sr_ideal

pytestmark = pytest.mark.acceptance


def _ys(m):
    return [f"y{k}" for k in range(m + 1)]


@criterion(1, "T2 vanishes on the dual associahedra A4..A7")
def test_criterion_1_associahedra_t2():
    for n in range(4, 8):
        cert = ct.t2_is_zero(assoc.build(n))
        assert cert["pairs"], n
        assert all(p["dim"] == 0 for p in cert["pairs"]), n
    return "n = 4..7, every graded piece zero"


@criterion(2, "degree-zero T1 of A_n * Delta_m and its basis")
def test_criterion_2_tangent_dimension():
    for n, m in itertools.product((5, 6, 7), (0, 1, 2)):
        want = n * (n * n - 4 * n - 3) // 2 + n * (m + 1)
        K = join(assoc.build(n), simplex(_ys(m)))
        assert ct.t1_degree_zero_dim(K) == want, (n, m)
        fams = assoc.t1_basis(n, m)
        sizes = tuple(len(fams[k]) for k in "1234")
        assert sizes == (n * (n - 3) * (n - 4) // 2, n * (m + 1), n * (n - 5), n * (n - 5) // 2), (n, m)
        assert sum(sizes) == want
    assert ct.t1_degree_zero_dim(assoc.build(6)) == 27
    return "9 pairs and (6, -1) = 27"


@criterion(3, "deltahedra T4..T10 unobstructed, T11 obstructed in dimension 3")
def test_criterion_3_deltahedra(deltahedra):
    for n in range(4, 11):
        assert ct.t2_is_zero(deltahedra[f"T{n}"])["all_zero"], n
    T11 = deltahedra["T11"]
    assert not ct.t2_is_zero(T11)["all_zero"]
    assert ct.t2_degree_zero_dim(T11) == 3
    for n in range(6, 11):
        K = deltahedra[f"T{n}"]
        assert {valency(K, [v]) for v in K.vertices} <= {4, 5}, n
    return "T11 degree-0 T2 = 3"


@criterion(4, "legal-edge search from A7 reproduces the table of 74 spheres")
def test_criterion_4_table(search_records):
    recs = search_records
    assert len(recs) == 74
    got = Counter((r.vertex_count, r.facet_count) for r in recs)
    want = Counter((row.vertices, row.facets) for row in spheres.table_reference())
    assert got == want
    res = spheres.match_table(recs)
    assert res["mismatches"] == [] and res["matched"], res["mismatches"][:3]
    finals = [r for r in recs if r.final]
    assert len(finals) == 10
    for r in finals:
        cert = spheres.verify_record(r, full=True)
        assert cert["t2_nonedges_h1"] and cert["t2_full"], r.name
    return "74 classes, 10 terminal, all certified twice"


def _degeneration_checks():
    for g in range(6, 11):
        cert = groebner.certify(g)
        t = cert["transversals"]
        assert cert["simplex_dim"] == (2, 7, 5, 3, 2)[g - 6]
        assert t["passed"] and t["transversal_count"] == 2 * (g - 1) <= t["degree_bound"], g
        # independent check: the initial complex is T_{g+1} * Delta_{i_g}
        data = groebner.degenerate(g, cert["choices"])
        target = join(spheres.deltahedra_series()[f"T{g + 1}"], simplex([f"s{k}" for k in range(groebner.INDEX[g] + 1)]))
        assert canon.isomorphic(data["complex"], target), g


@criterion(5, "Groebner degenerations for g = 6..10 and the choice enumerations")
def test_criterion_5_degenerations():
    _degeneration_checks()
    e10 = groebner.choice_enumeration(10)
    assert len(e10) == 8 and sum(r["iso_to_target"] for r in e10) == 2
    e9 = groebner.choice_enumeration(9)
    hits = [r["choices"] for r in e9 if r["iso_to_target"]]
    assert len(e9) == 16
    assert len(hits) == 2, f"g=9: {len(hits)} of 16 choice vectors give T10: {hits}"
    return "g = 9: 2 of 16, g = 10: 2 of 8"


def _partitions(n):
    for m in range(2, n - 2):
        for rs in itertools.product(range(4, n), repeat=m):
            if sum(rs) - 3 * (m - 1) == n:
                yield rs


def _precondition_holds(K, v, b):
    # link(v) must be the boundary of b joined with a complex, b not a face
    if K.has_mask(K.mask(b)):
        return False
    L = link(K, [v])
    return L == join(boundary_of_simplex(b), link(L, [b[0]]))


@criterion(6, "unstarring chains for n <= 8 and every partition")
def test_criterion_6_unstarring():
    unique = {}
    n_chains = 0
    for n in range(5, 9):
        for rs in _partitions(n):
            n_chains += 1
            poly = list(range(1, n + 1))
            K = assoc.polygon_complex(poly)
            prefix = 1
            chain = [K]
            for r in rs[:-1]:
                plan = assoc.UnstarPlan(len(poly), r, polygon=poly)
                P = plan.polygon
                seq = assoc.unstar_sequence(plan, K)
                for step, (i, j) in enumerate(plan.order):
                    v = assoc.diag(P[i - 1], P[j - 1])
                    b = [assoc.diag(P[0], P[i - 1]), assoc.diag(P[1], P[j - 1])]
                    assert _precondition_holds(seq[step], v, b), (rs, v)
                counts = [len(X.facet_masks) for X in seq]
                assert counts == [prefix * c for c in assoc.unstar_facet_counts(plan)], rs
                prefix *= assoc.facet_count(r)
                chain.extend(seq[1:])
                K = seq[-1]
                poly = plan.split_polygons()[1]
            assert chain == assoc.hyperoct_chain(rs)
            assert K == assoc.hyperoct_terminal(rs)
            assert canon.isomorphic(K, join_all(*(assoc.build(r) for r in rs))), rs
            if all(r == 4 for r in rs):
                # the boundary of the cross-polytope
                assert K.n_vertices == 2 * len(rs) and len(K.facet_masks) == 2 ** len(rs)
            for X in chain:
                unique.setdefault(canon.canonical_form(X), X)
    for X in unique.values():
        assert ct.t2_is_zero(X)["all_zero"], X
    return f"{n_chains} chains, {len(unique)} distinct complexes"


@criterion(7, "versal family of A6 * Delta_m")
def test_criterion_7_versal():
    rng = np.random.default_rng(2024)
    for m in (-1, 0, 1, 2):
        eqs = groebner.versal_a6(m, groebner.VersalParameters.zero(m))
        assert len(eqs) == 15
        assert all(len(p) == 1 and list(p.values()) == [1] for p in eqs)
        got = {groebner.mono_support(next(iter(p))) for p in eqs}
        assert got == set(sr_ideal(groebner.versal_special_fiber(m)).generators), m
        for _ in range(5):
            p = groebner.VersalParameters.random(m, rng)
            for k in p.u:
                p.u[k] = 0
            for terms, eq in zip(groebner.versal_terms(m, p), groebner.versal_a6(m, p)):
                head = groebner.padd(*terms[:3])
                assert eq == head
                # the first head term is the Stanley-Reisner monomial
                assert next(iter(terms[0])) in eq
    return "15 monomials at zero, 3-term heads at u = 0"


def _flag_family(search_records, deltahedra):
    out = [(f"A{n}", assoc.build(n)) for n in range(4, 8)]
    out += [(k, K) for k, K in deltahedra.items() if is_flag(K)]
    out += [(r.name, r.complex) for r in search_records]
    out += [(f"C7_{i}", K) for i, K in enumerate(assoc.c_n_series(7))]
    out += [("hyperoct4", assoc.hyperoct_terminal([4, 4, 4, 4]))]
    rng = random.Random(11)
    for i in range(40):
        n = rng.randint(4, 10)
        G = nx.gnp_random_graph(n, rng.uniform(0.3, 0.8), seed=rng.randrange(10 ** 6))
        out.append((f"gnp{i}", clique_complex(G.edges(), vertices=G.nodes())))
    return out


@criterion(8, "cotangent pieces agree with the flag and H1(L_b) oracles")
def test_criterion_8_oracles(search_records, deltahedra):
    disagreements = []
    checked = 0
    for name, K in _flag_family(search_records, deltahedra):
        assert is_flag(K), name
        sphere3 = K.dim == 3 and K.is_pure and is_homology_sphere(K, 3)
        for v in K.vertices:
            checked += 1
            if ct.relative_pair_cohomology(K, [v], 2) != flag_t2_vertex(K, v):
                disagreements.append((name, v))
        for b in non_edges(K):
            checked += 1
            got = ct.relative_pair_cohomology(K, sorted(b), 2)
            if got != flag_t2_nonedge(K, b):
                disagreements.append((name, sorted(b)))
            if sphere3 and got != ct.t2_via_h1_lb(K, b):
                disagreements.append((name, sorted(b), "h1"))
    assert disagreements == [], disagreements[:5]
    return f"{checked} pieces, 0 disagreements"


def _hilbert_function_brute(K, k):
    # count degree-k monomials supported on faces
    vs = list(K.vertices)
    total = 0
    for combo in itertools.combinations_with_replacement(vs, k):
        if K.has_mask(K.mask(set(combo))):
            total += 1
    return total


def _evaluate(poly, t):
    return sum(c * Fraction(t) ** e for e, c in enumerate(poly))


@criterion(9, "Hilbert polynomials of the table spheres joined with a point")
def test_criterion_9_hilbert(search_records):
    seed = assoc.build(7)
    for K in [seed] + [r.complex for r in search_records]:
        assert spheres.hilbert_check(K)
        cone = cone_hilbert_polynomial(K)
        assert hilbert_poly_fano4(K) == cone
        assert cone[4] * math.factorial(4) == len(K.facet_masks)
    # the f-vector formula against monomial counting on the seed cone
    C = join(seed, simplex(["apex"]))
    poly = cone_hilbert_polynomial(seed)
    for k in (1, 2, 3):
        assert _evaluate(poly, k) == _hilbert_function_brute(C, k), k
    return "75 spheres"
