"""Deltahedra, legal-edge starring search and the table of 74 spheres."""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from . import associahedron
from .canon import canonical_form, face_orbits, isomorphic, isomorphism
from .complex import (
    ComplexError,
    SimplicialComplex,
    bits,
    boundary_of_simplex,
    is_flag,
    is_homology_sphere,
    link,
    link_mask,
    non_edges,
    star_face,
    valency,
    vertex_key,
)
from .cotangent import t2_is_zero, t2_via_h1_lb
from .data.table74 import ERRATA, TABLE_ROWS
from .stanley_reisner import cone_hilbert_polynomial, hilbert_poly_fano4


class RuleAmbiguous(ComplexError):
    pass


class CertificationFailed(ComplexError):
    pass


SEED_NAME = "A7"
SEED_VERTICES = 14


# ---------------------------------------------------------------------------
# deltahedra


def _edges_with_link_valencies(K: SimplicialComplex, pattern) -> list[frozenset]:
    out = []
    for e in K.edge_masks:
        lk = link_mask(K, e)
        vals = sorted(valency(K, [v]) for v in lk.vertices)
        if pattern(vals):
            out.append(K.face_of(e))
    return out


def _star_unique(K: SimplicialComplex, edges, v_new) -> SimplicialComplex:
    if not edges:
        raise RuleAmbiguous("no qualifying edge")
    results = [star_face(K, e, v_new) for e in edges]
    first = results[0]
    for r in results[1:]:
        if not isomorphic(first, r):
            raise RuleAmbiguous("qualifying edges give non-isomorphic results")
    return first


def _keeps_valencies_45(K: SimplicialComplex, e) -> bool:
    # starring an edge raises the valency of its two link vertices by one
    # and adds a vertex of valency four; other valencies are unchanged
    lk = link(K, e)
    for v in K.vertices:
        nu = valency(K, [v]) + (1 if v in lk.vertices else 0)
        if nu not in (4, 5):
            return False
    return True


def deltahedra_series() -> dict[str, SimplicialComplex]:
    """T_4 .. T_11, vertices labelled 0..n-1.

    For 6 <= n <= 10 the starred edge is one after which all vertex
    valencies are 4 or 5; from T_6 on this is the same as asking that both
    link vertices have valency four.
    """
    out = {"T4": boundary_of_simplex(range(4))}
    out["T5"] = _star_unique(out["T4"], [frozenset(e) for e in out["T4"].faces(1)], 4)
    for n in range(6, 11):
        K = out[f"T{n - 1}"]
        edges = [e for e in K.faces(1) if _keeps_valencies_45(K, e)]
        out[f"T{n}"] = _star_unique(K, edges, n - 1)
    edges = _edges_with_link_valencies(out["T10"], lambda vals: vals.count(4) == 1)
    out["T11"] = _star_unique(out["T10"], edges, 10)
    return out


def literal_rule_edges(K: SimplicialComplex) -> list[frozenset]:
    """Edges whose link is two vertices of valency four."""
    return _edges_with_link_valencies(K, lambda vals: vals == [4, 4])


# ---------------------------------------------------------------------------
# legal edges and search


def edge_link_sizes(K: SimplicialComplex) -> dict[frozenset, int]:
    return {K.face_of(e): link_mask(K, e).n_vertices for e in K.edge_masks}


def legal_edges(K: SimplicialComplex) -> list[frozenset]:
    """Edges a whose link has only edges e with link(e) a 4-cycle."""
    sizes = {e: link_mask(K, e).n_vertices for e in K.edge_masks}
    out = []
    for a in K.edge_masks:
        lk = link_mask(K, a)
        if all(sizes[e] == 4 for e in lk.edge_masks):
            out.append(K.face_of(a))
    return sorted(out, key=lambda f: sorted(vertex_key(v) for v in f))


@dataclass
class SphereRecord:
    name: str
    complex: SimplicialComplex
    provenance: list[tuple[str, tuple]] = field(default_factory=list)
    final: bool = False
    euler_theta_ref: int | None = None
    legal_orbits: list[list[frozenset]] = field(default_factory=list)

    @property
    def vertex_count(self) -> int:
        return self.complex.n_vertices

    @property
    def facet_count(self) -> int:
        return len(self.complex.facet_masks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertex_count": self.vertex_count,
            "facet_count": self.facet_count,
            "final": self.final,
            "euler_theta_ref": self.euler_theta_ref,
            "provenance": [[p, sorted(e, key=vertex_key)] for p, e in self.provenance],
            "complex": self.complex.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SphereRecord":
        return cls(
            name=d["name"],
            complex=SimplicialComplex.from_dict(d["complex"]),
            provenance=[(p, tuple(e)) for p, e in d["provenance"]],
            final=d["final"],
            euler_theta_ref=d.get("euler_theta_ref"),
        )


def fresh_label(K: SimplicialComplex, base: int = SEED_VERTICES) -> str:
    return f"v{K.n_vertices - base + 1}"


def star_search(seed: SimplicialComplex | None = None, seed_name: str = SEED_NAME, max_records: int | None = None, rep_choice=None) -> list[SphereRecord]:
    """Breadth-first legal-edge starring search, one edge per orbit.

    ``rep_choice`` picks the representative of each orbit (default: the
    first in sorted order); results must not depend on it.
    """
    if seed is None:
        seed = associahedron.build(7)
    base = seed.n_vertices
    root = SphereRecord(seed_name, seed)
    records: list[SphereRecord] = []
    seen: dict[tuple, SphereRecord] = {canonical_form(seed): root}
    queue = deque([root])
    counter = 0
    while queue and not (max_records and counter >= max_records):
        rec = queue.popleft()
        K = rec.complex
        orbits = face_orbits(K, legal_edges(K))
        rec.legal_orbits = orbits
        rec.final = not orbits
        children = []
        for orb in orbits:
            e = rep_choice(orb) if rep_choice else orb[0]
            child = star_face(K, e, fresh_label(K, base - 1))
            children.append((e, child))
        for e, child in children:
            if max_records and counter >= max_records:
                break
            key = canonical_form(child)
            hit = seen.get(key)
            if hit is None:
                counter += 1
                hit = SphereRecord(f"S{counter}", child)
                seen[key] = hit
                records.append(hit)
                queue.append(hit)
            hit.provenance.append((rec.name, tuple(sorted(e, key=vertex_key))))
    # order by vertex count, then canonical form, and rename
    records.sort(key=lambda r: (r.vertex_count, canonical_form(r.complex)))
    rename = {r.name: f"S{i + 1}" for i, r in enumerate(records)}
    rename[seed_name] = seed_name
    for r in records:
        r.name = rename[r.name]
        r.provenance = sorted(((rename[p], e) for p, e in r.provenance), key=lambda x: (vertex_key(x[0]), [vertex_key(v) for v in x[1]]))
    return records


# ---------------------------------------------------------------------------
# reference table


@dataclass(frozen=True)
class TableRow:
    name: str
    vertices: int
    facets: int
    minus_chi_theta: int
    final: bool
    comes_from: tuple


def table_reference(corrected: bool = True) -> list[TableRow]:
    """Reference rows; ``corrected`` applies the recorded errata."""
    out = []
    for n, v, f, c, fin, src in TABLE_ROWS:
        src = [(p, tuple(e)) for p, e in src]
        fix = ERRATA.get(n) if corrected else None
        if fix:
            f = fix.get("facets", f)
            for k, arrival in fix.get("comes_from", {}).items():
                src[k] = arrival
        out.append(TableRow(n, v, f, c, fin, tuple(src)))
    return out


def replay_table(seed: SimplicialComplex | None = None) -> dict[str, SimplicialComplex]:
    """Rebuild each table sphere from its first listed arrival, paper labels."""
    if seed is None:
        seed = associahedron.build(7)
    built = {SEED_NAME: seed}
    for row in table_reference():
        parent, edge = row.comes_from[0]
        P = built[parent]
        built[row.name] = star_face(P, edge, f"v{row.vertices - SEED_VERTICES}")
    return built


def check_table_rows(built: dict[str, SimplicialComplex] | None = None) -> list[str]:
    """Problems found when replaying every arrival listed in the table."""
    built = built or replay_table()
    problems = []
    for row in table_reference():
        K = built[row.name]
        if (K.n_vertices, len(K.facet_masks)) != (row.vertices, row.facets):
            problems.append(f"{row.name}: counts {(K.n_vertices, len(K.facet_masks))}")
        for parent, edge in row.comes_from:
            P = built[parent]
            if frozenset(edge) not in legal_edges(P):
                problems.append(f"{row.name}: {edge} not a legal edge of {parent}")
                continue
            if not isomorphic(star_face(P, edge, "new"), K):
                problems.append(f"{row.name}: arrival from {parent} along {edge} is not isomorphic")
    return problems


def _orbit_of(K: SimplicialComplex, edge, orbits) -> int:
    e = frozenset(edge)
    for i, orb in enumerate(orbits):
        if e in orb:
            return i
    raise KeyError(edge)


def match_table(records: list[SphereRecord], seed: SimplicialComplex | None = None) -> dict:
    """Match search records against the reference table.

    Records are matched by canonical form of the replayed table complexes.
    Arrivals are compared as sets of (parent, edge orbit) pairs.
    """
    built = replay_table(seed)
    by_key = {canonical_form(r.complex): r for r in records}
    names: dict[str, str] = {SEED_NAME: SEED_NAME}
    mismatches = []
    for row in table_reference():
        rec = by_key.get(canonical_form(built[row.name]))
        if rec is None:
            mismatches.append(f"{row.name}: not found by the search")
            continue
        names[row.name] = rec.name
    rec_by_name = {r.name: r for r in records}
    seed_complex = built[SEED_NAME]
    for row in table_reference():
        if row.name not in names:
            continue
        rec = rec_by_name[names[row.name]]
        if (rec.vertex_count, rec.facet_count) != (row.vertices, row.facets):
            mismatches.append(f"{row.name}: counts differ")
        if rec.final != row.final:
            mismatches.append(f"{row.name}: finality differs")
        want = set()
        for parent, edge in row.comes_from:
            P_ref = built[parent]
            P_name = names.get(parent)
            if P_name is None:
                continue
            P_rec = seed_complex if parent == SEED_NAME else rec_by_name[P_name].complex
            iso = isomorphism(P_ref, P_rec)
            mapped = frozenset(iso[v] for v in edge)
            orbits = face_orbits(P_rec, legal_edges(P_rec))
            try:
                want.add((P_name, _orbit_of(P_rec, mapped, orbits)))
            except KeyError:
                mismatches.append(f"{row.name}: listed edge {edge} is not legal in {parent}")
        got = set()
        for parent, edge in rec.provenance:
            P_rec = seed_complex if parent == SEED_NAME else rec_by_name[parent].complex
            orbits = face_orbits(P_rec, legal_edges(P_rec))
            got.add((parent, _orbit_of(P_rec, edge, orbits)))
        if want != got:
            mismatches.append(f"{row.name}: arrivals differ ({len(want)} listed, {len(got)} found)")
    extra = len(records) - len(set(names.values()) - {SEED_NAME})
    if extra:
        mismatches.append(f"{extra} search records have no table row")
    return {"names": names, "mismatches": mismatches, "matched": not mismatches and len(records) == len(TABLE_ROWS)}


def records_to_csv(records: list[SphereRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["Vertices", "Name", "Facets", "Comes from", "-chi(Theta)"])
    for r in records:
        src = "; ".join(f"{{{', '.join(e)}}} in {p}" for p, e in r.provenance)
        w.writerow([r.vertex_count, r.name + ("*" if r.final else ""), r.facet_count, src, "" if r.euler_theta_ref is None else r.euler_theta_ref])
    return buf.getvalue()


def save_records(records: list[SphereRecord], path: str) -> None:
    with open(path, "w") as fh:
        json.dump([r.to_dict() for r in records], fh, indent=1)


def load_records(path: str) -> list[SphereRecord]:
    with open(path) as fh:
        return [SphereRecord.from_dict(d) for d in json.load(fh)]


# ---------------------------------------------------------------------------
# certification


def verify_record(rec: SphereRecord, full: bool = True) -> dict:
    """Check edge links, and for final records the vanishing of T^2."""
    K = rec.complex
    cert = {"name": rec.name, "edge_links_ok": False, "t2_nonedges_h1": None, "t2_full": None}
    sizes = edge_link_sizes(K)
    bad = [sorted(e, key=vertex_key) for e, s in sizes.items() if s not in (4, 5)]
    if bad:
        raise CertificationFailed(f"{rec.name}: edge {bad[0]} has a link that is not a 4- or 5-gon")
    cert["edge_links_ok"] = True
    if rec.final:
        for b in non_edges(K):
            d = t2_via_h1_lb(K, b)
            if d:
                raise CertificationFailed(f"{rec.name}: T2 piece (empty, {sorted(b, key=vertex_key)}) has dimension {d}")
        cert["t2_nonedges_h1"] = True
        if full:
            c = t2_is_zero(K)
            if not c["all_zero"]:
                bad = next(p for p in c["pairs"] if p["dim"])
                raise CertificationFailed(f"{rec.name}: T2 piece ({bad['a']}, {bad['b']}) has dimension {bad['dim']}")
            cert["t2_full"] = True
    return cert


def propagate_certification(records: list[SphereRecord], certified: Iterable[str]) -> set[str]:
    """Names whose T^2 vanishes because some descendant's does."""
    parents: dict[str, set[str]] = {}
    for r in records:
        parents[r.name] = {p for p, _ in r.provenance}
    done = set(certified)
    stack = list(done)
    while stack:
        n = stack.pop()
        for p in parents.get(n, ()):
            if p not in done:
                done.add(p)
                stack.append(p)
    return done


def conjecture_probe(K: SimplicialComplex) -> dict:
    """Compare the codimension-2 link hypothesis with T^2 = 0."""
    d = K.dim
    sizes = [link_mask(K, m).n_vertices for m in K.faces_by_dim.get(d - 2, [])]
    hyp = is_flag(K) and all(s in (4, 5) for s in sizes)
    cert = t2_is_zero(K)
    return {
        "hypothesis": hyp,
        "conclusion": cert["all_zero"],
        "agrees": (not hyp) or cert["all_zero"],
        "nonzero_pairs": [p for p in cert["pairs"] if p["dim"]],
    }


def hilbert_check(K: SimplicialComplex) -> bool:
    return hilbert_poly_fano4(K) == cone_hilbert_polynomial(K)
