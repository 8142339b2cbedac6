"""Command-line front end.

Complex specifiers::

    assoc:N              dual associahedron of the N-gon
    deltahedron:TN       member of the deltahedra series, 4 <= N <= 11
    simplex:M            full simplex on M+1 vertices y0..yM (M = -1: {empty})
    file:PATH            JSON written by ``srdef build``
    join:(SPEC,SPEC,...) join of the listed complexes

Exit status is 0 when every requested check passes, 1 when a
certification fails (a JSON report is still written) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import associahedron as assoc
from . import cotangent, groebner, spheres
from .canon import canonical_hash
from .complex import ComplexError, SimplicialComplex, empty_complex, join_all, link, simplex, vertex_key
from .stanley_reisner import cone_hilbert_polynomial, hilbert_poly_fano4, hilbert_polynomial, poly_to_strings, sr_ideal


class SpecError(ValueError):
    pass


class CheckFailed(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__("certification failed")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if depth:
        raise SpecError(f"unbalanced parentheses in {text!r}")
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_spec(text: str) -> SimplicialComplex:
    kind, _, arg = text.strip().partition(":")
    if not arg:
        raise SpecError(f"specifier {text!r} needs the form kind:argument")
    try:
        if kind == "assoc":
            return assoc.build(int(arg))
        if kind == "deltahedron":
            series = spheres.deltahedra_series()
            name = arg if arg.startswith("T") else f"T{arg}"
            if name not in series:
                raise SpecError(f"no deltahedron {name}; choose from {sorted(series, key=vertex_key)}")
            return series[name]
        if kind == "simplex":
            m = int(arg)
            return simplex([f"y{k}" for k in range(m + 1)]) if m >= 0 else empty_complex()
        if kind == "file":
            with open(arg) as fh:
                return SimplicialComplex.from_json(fh.read())
        if kind == "join":
            if not (arg.startswith("(") and arg.endswith(")")):
                raise SpecError("join needs parenthesised arguments: join:(a,b)")
            return join_all(*(parse_spec(p) for p in _split_top(arg[1:-1])))
    except (ValueError, OSError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"bad specifier {text!r}: {exc}") from exc
    raise SpecError(f"unknown complex kind {kind!r}")


def _dump(obj, out: str | None) -> str:
    text = json.dumps(obj, indent=1, sort_keys=True, default=str) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    return text


# ---------------------------------------------------------------------------
# verbs


def cmd_build(args):
    K = parse_spec(args.complex)
    rep = K.to_dict()
    rep["f_vector"] = list(K.f_vector)
    rep["canonical_hash"] = canonical_hash(K)
    rep["minimal_nonfaces"] = sr_ideal(K).sorted_generators()
    return rep


def cmd_link(args):
    K = parse_spec(args.complex)
    face = [f for f in args.face.split(",") if f] if args.face else []
    L = link(K, face)
    rep = L.to_dict()
    rep["face"] = face
    return rep


def cmd_t1(args):
    K = parse_spec(args.complex)
    dim = cotangent.t1_degree_zero_dim(K)
    rep = {"complex": args.complex, "t1_degree_zero_dim": dim}
    if args.expect is not None:
        rep["expected"] = args.expect
        if dim != args.expect:
            raise CheckFailed(rep)
    return rep


def cmd_t2(args):
    K = parse_spec(args.complex)
    cert = cotangent.t2_is_zero(K, workers=args.jobs)
    rep = {
        "complex": args.complex,
        "complex_hash": cert["complex_hash"],
        "pairs_checked": len(cert["pairs"]),
        "nonzero_pairs": [p for p in cert["pairs"] if p["dim"]],
        "all_zero": cert["all_zero"],
        "t2_degree_zero_dim": cotangent.t2_degree_zero_dim(K) if not cert["all_zero"] else 0,
    }
    if not cert["all_zero"]:
        raise CheckFailed(rep)
    return rep


def _search(seed_text: str):
    seed = parse_spec(seed_text)
    return seed, spheres.star_search(seed)


def cmd_search(args):
    seed, records = _search(args.seed)
    rep = {
        "seed": args.seed,
        "classes": len(records),
        "terminal": sorted((r.name for r in records if r.final), key=vertex_key),
    }
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(spheres.records_to_csv(records))
    if args.records:
        spheres.save_records(records, args.records)
    if args.expect == "table1":
        match = spheres.match_table(records, seed)
        rep["matched"] = match["matched"]
        rep["mismatches"] = match["mismatches"]
        rep["names"] = match["names"]
        if not match["matched"]:
            raise CheckFailed(rep)
    return rep


def _verify(payload):
    rec = spheres.SphereRecord.from_dict(payload[0])
    try:
        return spheres.verify_record(rec, full=payload[1])
    except spheres.CertificationFailed as exc:
        return {"name": rec.name, "error": str(exc)}


def cmd_certify(args):
    if args.records:
        records = spheres.load_records(args.records)
    else:
        _, records = _search(args.seed)
    finals = [r for r in records if r.final]
    jobs = [(r.to_dict(), not args.quick) for r in finals]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            certs = list(ex.map(_verify, jobs))
    else:
        certs = [_verify(j) for j in jobs]
    certs.sort(key=lambda c: vertex_key(c["name"]))
    rep = {"terminal": len(finals), "certificates": certs, "passed": all("error" not in c for c in certs)}
    if not rep["passed"]:
        raise CheckFailed(rep)
    return rep


def _parse_bits(text):
    if text is None:
        return None
    bits = [int(c) for c in text.strip()]
    if any(b not in (0, 1) for b in bits):
        raise SpecError(f"choices must be a string of 0/1, got {text!r}")
    return bits


def cmd_degen(args):
    if args.action == "certify":
        try:
            return groebner.certify(args.genus, _parse_bits(args.choices))
        except groebner.CertFailed as exc:
            raise CheckFailed({"genus": args.genus, "passed": False, "reason": exc.reason, "detail": exc.detail})
        except groebner.GroebnerError as exc:
            raise SpecError(str(exc))
    rows = groebner.choice_enumeration(args.genus)
    return {
        "genus": args.genus,
        "count": len(rows),
        "iso_to_target": sum(r["iso_to_target"] for r in rows),
        "rows": [
            {
                "choices": "".join(map(str, r["choices"])),
                "iso_to_target": r["iso_to_target"],
                "complex_hash": canonical_hash(r["complex"]),
                "initial_monomials": sorted(groebner.mono_str(m) for m in set(r["initial"])),
            }
            for r in rows
        ],
    }


def cmd_table(args):
    rows = spheres.table_reference(corrected=not args.raw)
    out = ["Vertices,Name,Facets,Comes from,-chi(Theta)"]
    for r in rows:
        src = "; ".join(f"{{{', '.join(e)}}} in {p}" for p, e in r.comes_from)
        out.append(f'{r.vertices},{r.name}{"*" if r.final else ""},{r.facets},"{src}",{r.minus_chi_theta}')
    text = "\n".join(out) + "\n"
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    return {"rows": len(rows), "terminal": sum(r.final for r in rows), "csv": text}


def cmd_hilbert(args):
    K = parse_spec(args.complex)
    rep = {
        "complex": args.complex,
        "hilbert_polynomial": poly_to_strings(hilbert_polynomial(K)),
        "cone_hilbert_polynomial": poly_to_strings(cone_hilbert_polynomial(K)),
    }
    if K.dim == 3:
        fano = hilbert_poly_fano4(K)
        rep["fano4_formula"] = poly_to_strings(fano)
        rep["agrees"] = fano == cone_hilbert_polynomial(K)
        if not rep["agrees"]:
            raise CheckFailed(rep)
    return rep


def cmd_unstar(args):
    plan = assoc.UnstarPlan(args.n, args.r)
    seq = assoc.unstar_sequence(plan)
    counts = [len(K.facet_masks) for K in seq]
    rep = {
        "plan": plan.to_dict(),
        "facet_counts": counts,
        "formula_counts": assoc.unstar_facet_counts(plan),
        "terminal_hash": canonical_hash(seq[-1]),
    }
    if args.check_t2:
        rep["t2_all_zero"] = [cotangent.t2_is_zero(K)["all_zero"] for K in seq]
    ok = counts == rep["formula_counts"] and all(rep.get("t2_all_zero", [True]))
    if not ok:
        raise CheckFailed(rep)
    return rep


# ---------------------------------------------------------------------------


def _complex_arg(s):
    # the complex may be given positionally or as --complex
    s.add_argument("complex", nargs="?", help="complex specifier")
    s.add_argument("--complex", dest="complex_flag", metavar="SPEC", help="same as the positional argument")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srdef", description="Stanley-Reisner degenerations toolkit")
    p.add_argument("--out", help="write the JSON report here as well as to stdout")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (results do not depend on it)")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("build", help="build a complex and print it as JSON")
    _complex_arg(s)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("link", help="link of a face")
    _complex_arg(s)
    s.add_argument("--face", default="", help="comma-separated vertex labels")
    s.set_defaults(func=cmd_link)

    s = sub.add_parser("t1", help="dimension of T^1 in degree 0")
    _complex_arg(s)
    s.add_argument("--expect", type=int)
    s.set_defaults(func=cmd_t1)

    s = sub.add_parser("t2", help="certify that every graded piece of T^2 vanishes")
    _complex_arg(s)
    s.set_defaults(func=cmd_t2)

    s = sub.add_parser("search", help="legal-edge starring search")
    s.add_argument("--seed", default="assoc:7")
    s.add_argument("--expect", choices=["table1"])
    s.add_argument("--csv", help="write the table of classes as CSV")
    s.add_argument("--records", help="write the records as JSON")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("certify", help="certify T^2 = 0 on terminal search classes")
    s.add_argument("--seed", default="assoc:7")
    s.add_argument("--records", help="records JSON from 'search --records'")
    s.add_argument("--quick", action="store_true", help="skip the full T^2 pipeline")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("degen", help="monomial degenerations of Mukai varieties")
    s.add_argument("action", choices=["certify", "enumerate"])
    s.add_argument("--genus", type=int, required=True, choices=range(6, 11), metavar="{6..10}")
    s.add_argument("--choices", help="bit string resolving the free comparisons (g = 9, 10)")
    s.set_defaults(func=cmd_degen)

    s = sub.add_parser("table", help="print the reference table of 74 spheres")
    s.add_argument("--raw", action="store_true", help="as printed, without corrections")
    s.add_argument("--csv")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("hilbert", help="Hilbert polynomials from the f-vector")
    _complex_arg(s)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("unstar", help="unstarring chain from the n-gon associahedron")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--check-t2", action="store_true")
    s.set_defaults(func=cmd_unstar)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "complex_flag"):
        if args.complex and args.complex_flag and args.complex != args.complex_flag:
            parser.error("give the complex once")
        args.complex = args.complex or args.complex_flag
        if not args.complex:
            parser.error(f"{args.verb} needs a complex specifier")
    if args.verb == "degen" and args.action == "enumerate" and args.genus not in (9, 10):
        parser.error("enumerate needs --genus 9 or 10")
    try:
        rep = args.func(args)
        code = 0
    except CheckFailed as exc:
        rep, code = exc.report, 1
    except (SpecError, ComplexError) as exc:
        print(f"srdef: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(_dump(rep, args.out))
    return code


if __name__ == "__main__":
    sys.exit(main())
