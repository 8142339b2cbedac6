import random
from collections import Counter

import pytest

from srdef import associahedron as assoc
from srdef import canon, spheres
from srdef import cotangent as ct
from srdef.complex import is_flag, is_homology_sphere, star_face, valency


def test_deltahedra_shapes(deltahedra):
    for n in range(4, 12):
        K = deltahedra[f"T{n}"]
        assert K.n_vertices == n
        assert len(K.facets) == 2 * n - 4
        assert is_homology_sphere(K, 2)


@pytest.mark.parametrize("n", range(6, 11))
def test_deltahedra_valencies(deltahedra, n):
    K = deltahedra[f"T{n}"]
    assert {valency(K, [v]) for v in K.vertices} <= {4, 5}


def test_deltahedra_symmetry(deltahedra):
    # T6 is the octahedron, T10 the gyroelongated square bipyramid
    orders = {n: canon.automorphism_group_order(deltahedra[f"T{n}"]) for n in range(6, 11)}
    assert orders == {6: 48, 7: 20, 8: 8, 9: 12, 10: 16}


@pytest.mark.parametrize("n", range(4, 11))
def test_deltahedra_t2_vanishes(deltahedra, n):
    assert ct.t2_is_zero(deltahedra[f"T{n}"])["all_zero"]


def test_t11_has_obstructions(deltahedra):
    K = deltahedra["T11"]
    assert not ct.t2_is_zero(K)["all_zero"]
    assert ct.t2_degree_zero_dim(K) == 3
    assert 6 in {valency(K, [v]) for v in K.vertices}


def test_literal_rule_edges_exist(deltahedra):
    for n in range(6, 10):
        K = deltahedra[f"T{n}"]
        for e in spheres.literal_rule_edges(K):
            assert len(e) == 2


def test_legal_edges_of_seed():
    K = assoc.build(7)
    legal = spheres.legal_edges(K)
    sizes = spheres.edge_link_sizes(K)
    assert legal
    assert set(sizes.values()) <= {4, 5}
    for a in legal:
        child = star_face(K, a, "new")
        # legal starring keeps every edge link a 4- or 5-gon
        assert set(spheres.edge_link_sizes(child).values()) <= {4, 5}
        assert is_flag(child)


def test_search_counts(search_records):
    assert len(search_records) == 74
    assert sum(r.final for r in search_records) == 10
    names = [r.name for r in search_records]
    assert len(set(names)) == len(names)
    keys = {canon.canonical_form(r.complex) for r in search_records}
    assert len(keys) == 74


def test_search_matches_reference(search_records):
    res = spheres.match_table(search_records)
    assert res["mismatches"] == []
    assert res["matched"]


def test_reference_rows_replay():
    assert spheres.check_table_rows() == []


def test_count_multiset_matches_reference(search_records):
    got = Counter((r.vertex_count, r.facet_count) for r in search_records)
    want = Counter((row.vertices, row.facets) for row in spheres.table_reference())
    assert got == want


def test_search_independent_of_representatives(search_records):
    rng = random.Random(7)
    other = spheres.star_search(rep_choice=lambda orb: rng.choice(list(orb)))
    a = {canon.canonical_form(r.complex): r.final for r in search_records}
    b = {canon.canonical_form(r.complex): r.final for r in other}
    assert a == b


def test_search_limit():
    recs = spheres.star_search(max_records=5)
    assert len(recs) == 5


def test_records_round_trip(search_records, tmp_path):
    path = tmp_path / "records.json"
    spheres.save_records(search_records, str(path))
    back = spheres.load_records(str(path))
    assert [r.name for r in back] == [r.name for r in search_records]
    assert all(a.complex == b.complex for a, b in zip(back, search_records))
    assert all(a.provenance == b.provenance for a, b in zip(back, search_records))
    csv_text = spheres.records_to_csv(search_records)
    assert csv_text.splitlines()[0].startswith("Vertices,Name")
    assert len(csv_text.strip().splitlines()) == 75


def test_final_records_certify_by_shortcut(search_records):
    for rec in search_records:
        if rec.final:
            cert = spheres.verify_record(rec, full=False)
            assert cert["t2_nonedges_h1"]


def test_propagation_reaches_everything(search_records):
    finals = [r.name for r in search_records if r.final]
    done = spheres.propagate_certification(search_records, finals)
    assert {r.name for r in search_records} <= done
    assert "A7" in done


def test_hilbert_check_on_seed():
    assert spheres.hilbert_check(assoc.build(7))
