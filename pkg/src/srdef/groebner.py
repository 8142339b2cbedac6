"""Monomial degenerations of the Mukai varieties of genus 6 to 10.

Polynomials are dicts mapping a monomial to a nonzero integer coefficient.
A monomial is a sorted tuple of ``(variable, exponent)`` pairs.  Term
orders are integer weight vectors found by integer linear programming and
re-checked against every declared constraint; a generator whose top weight
is attained twice raises :class:`TieDetected` instead of silently falling
back to a tiebreak.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from . import associahedron as assoc
from .canon import canonical_form, isomorphic
from .complex import SimplicialComplex, join, simplex, vertex_key
from .stanley_reisner import SquarefreeMonomialIdeal, complex_of_ideal, minimal_transversals


class GroebnerError(ValueError):
    pass


class Infeasible(GroebnerError):
    pass


class TieDetected(GroebnerError):
    def __init__(self, generator, monomials):
        self.generator = generator
        self.monomials = monomials
        super().__init__(f"weight tie among {[mono_str(m) for m in monomials]}")


class CertFailed(GroebnerError):
    def __init__(self, reason: str, detail=None):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}")


# ---------------------------------------------------------------------------
# polynomial arithmetic

Monomial = tuple
Polynomial = dict


def mono(*vars_: str) -> Monomial:
    counts: dict[str, int] = {}
    for v in vars_:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.items(), key=lambda kv: vertex_key(kv[0])))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    counts = dict(a)
    for v, e in b:
        counts[v] = counts.get(v, 0) + e
    return tuple(sorted(counts.items(), key=lambda kv: vertex_key(kv[0])))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_support(m: Monomial) -> frozenset:
    return frozenset(v for v, _ in m)


def is_squarefree(m: Monomial) -> bool:
    return all(e == 1 for _, e in m)


def mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def var(name: str) -> Polynomial:
    return {mono(name): 1}


def const(c) -> Polynomial:
    return {(): c} if c else {}


def padd(*ps: Polynomial) -> Polynomial:
    out: dict = {}
    for p in ps:
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def pscale(p: Polynomial, c) -> Polynomial:
    return {m: c * v for m, v in p.items()} if c else {}


def pneg(p: Polynomial) -> Polynomial:
    return pscale(p, -1)


def psub(p: Polynomial, q: Polynomial) -> Polynomial:
    return padd(p, pneg(q))


def pmul(*ps: Polynomial) -> Polynomial:
    out: Polynomial = {(): 1}
    for p in ps:
        acc: dict = {}
        for m1, c1 in out.items():
            for m2, c2 in p.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        out = {m: c for m, c in acc.items() if c}
    return out


def poly_variables(p: Polynomial) -> set[str]:
    return {v for m in p for v, _ in m}


def is_homogeneous(p: Polynomial, variables: Iterable[str] | None = None) -> bool:
    keep = set(variables) if variables is not None else None
    degs = {sum(e for v, e in m if keep is None or v in keep) for m in p}
    return len(degs) <= 1


def poly_str(p: Polynomial) -> str:
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=_mono_sort_key):
        c = p[m]
        body = mono_str(m)
        if body == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


def _mono_sort_key(m: Monomial):
    return [(vertex_key(v), e) for v, e in m]


def parse_entry(text: str) -> Polynomial:
    """Parse a linear entry such as ``0``, ``x12``, ``-x12`` or ``-w-r``."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return {}
    out: Polynomial = {}
    for sign, name in _split_terms(text):
        out = padd(out, pscale(var(name), sign))
    return out


def _split_terms(text: str):
    sign, cur = 1, ""
    for ch in text:
        if ch in "+-":
            if cur:
                yield sign, cur
            sign, cur = (1 if ch == "+" else -1), ""
        else:
            cur += ch
    if cur:
        yield sign, cur


# ---------------------------------------------------------------------------
# matrices and Pfaffians


def antisymmetric_matrix(n: int, prefix: str = "x") -> list[list[Polynomial]]:
    M = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = var(f"{prefix}{i + 1}{j + 1}")
            M[i][j] = v
            M[j][i] = pneg(v)
    return M


def pfaffian4(M: Sequence[Sequence[Polynomial]], rows: Sequence[int]) -> Polynomial:
    """4x4 Pfaffian on 1-based rows i<j<k<l."""
    i, j, k, l = rows
    if not (1 <= i < j < k < l <= len(M)):
        raise GroebnerError(f"rows {rows} must be increasing within 1..{len(M)}")
    m = lambda a, b: M[a - 1][b - 1]  # noqa: E731
    return padd(
        pmul(m(i, j), m(k, l)),
        pneg(pmul(m(i, k), m(j, l))),
        pmul(m(i, l), m(j, k)),
    )


def all_pfaffians(M) -> list[Polynomial]:
    return [pfaffian4(M, rows) for rows in itertools.combinations(range(1, len(M) + 1), 4)]


def _sym_matrix(prefix: str) -> list[list[Polynomial]]:
    return [[var(f"{prefix}{min(i, j)}{max(i, j)}") for j in range(1, 4)] for i in range(1, 4)]


def _det2(a, b, c, d) -> Polynomial:
    return psub(pmul(a, d), pmul(b, c))


def cofactor(M, i: int, j: int) -> Polynomial:
    """Signed (i, j) cofactor of a 3x3 polynomial matrix, 1-based."""
    rows = [r for r in range(3) if r != i - 1]
    cols = [c for c in range(3) if c != j - 1]
    minor = _det2(M[rows[0]][cols[0]], M[rows[0]][cols[1]], M[rows[1]][cols[0]], M[rows[1]][cols[1]])
    return minor if (i + j) % 2 == 0 else pneg(minor)


# The displayed 7x7 matrix whose Pfaffians cut out the G2 Grassmannian.
G2_MATRIX_TEXT = [
    ["0", "-x10", "x11", "w", "y11", "y10", "u"],
    ["x10", "0", "-v", "y00", "r", "z0", "x00"],
    ["-x11", "v", "0", "y01", "z1", "-w-r", "x01"],
    ["-w", "-y00", "-y01", "0", "x01", "-x00", "v"],
    ["-y11", "-r", "-z1", "-x01", "0", "u", "x11"],
    ["-y10", "-z0", "w+r", "x00", "-u", "0", "x10"],
    ["-u", "-x00", "-x01", "-v", "-x11", "-x10", "0"],
]


def g2_matrix() -> list[list[Polynomial]]:
    M = [[parse_entry(t) for t in row] for row in G2_MATRIX_TEXT]
    for i in range(7):
        for j in range(7):
            if M[i][j] != pneg(M[j][i]):
                raise GroebnerError(f"matrix entry ({i + 1},{j + 1}) breaks antisymmetry")
    return M


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class Constraint:
    """``big`` must strictly outweigh ``small``."""

    big: Monomial
    small: Monomial
    note: str = ""

    def to_dict(self) -> dict:
        return {"big": mono_str(self.big), "small": mono_str(self.small), "note": self.note}


@dataclass
class TermOrder:
    weights: dict
    constraints: list = field(default_factory=list)
    certificate: dict = field(default_factory=dict)

    def weight(self, m: Monomial) -> int:
        return sum(self.weights[v] * e for v, e in m)

    def check(self) -> list[Constraint]:
        return [c for c in self.constraints if self.weight(c.big) <= self.weight(c.small)]

    def to_dict(self) -> dict:
        return {
            "weights": {v: self.weights[v] for v in sorted(self.weights, key=vertex_key)},
            "n_constraints": len(self.constraints),
            "certificate": self.certificate,
        }


def solve_order(constraints: Sequence[Constraint], variables: Iterable[str], max_weight: int = 10_000) -> TermOrder:
    """Smallest positive integer weights satisfying every constraint strictly."""
    names = sorted(set(variables), key=vertex_key)
    idx = {v: i for i, v in enumerate(names)}
    n = len(names)
    if not constraints:
        return _certify(TermOrder({v: 1 for v in names}, []))
    A = np.zeros((len(constraints), n))
    for r, c in enumerate(constraints):
        for v, e in c.big:
            A[r, idx[v]] += e
        for v, e in c.small:
            A[r, idx[v]] -= e
    res = milp(
        c=np.ones(n),
        constraints=[LinearConstraint(A, lb=np.ones(len(constraints)), ub=np.full(len(constraints), np.inf))],
        integrality=np.ones(n),
        bounds=Bounds(np.ones(n), np.full(n, max_weight)),
    )
    if res.status != 0 or res.x is None:
        raise Infeasible(f"no integer weights up to {max_weight}: {res.message}")
    order = TermOrder({v: int(round(res.x[idx[v]])) for v in names}, list(constraints))
    return _certify(order)


def _certify(order: TermOrder) -> TermOrder:
    bad = order.check()
    if bad:
        raise Infeasible(f"solver weights violate {[c.to_dict() for c in bad[:3]]}")
    order.certificate = {"constraints_checked": len(order.constraints), "violations": 0}
    return order


def circular_constraints(n: int, name=lambda i, j: f"x{i}{j}") -> list[Constraint]:
    """x_ik x_jl beats both other terms of every 4x4 Pfaffian."""
    out = []
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        lead = mono(name(i, k), name(j, l))
        out.append(Constraint(lead, mono(name(i, j), name(k, l)), "circular"))
        out.append(Constraint(lead, mono(name(i, l), name(j, k)), "circular"))
    return out


def group_constraints(groups: Sequence[Sequence[str]]) -> list[Constraint]:
    """Every variable of a later group beats every variable of an earlier one."""
    out = []
    for lo, hi in zip(groups, groups[1:]):
        for a in lo:
            for b in hi:
                out.append(Constraint(mono(b), mono(a), "group"))
    return out


def product_constraints(left, middle, right) -> list[Constraint]:
    """Product of two middle variables beats right times left."""
    out = []
    for b1, b2 in itertools.combinations_with_replacement(middle, 2):
        for c in right:
            for a in left:
                out.append(Constraint(mono(b1, b2), mono(c, a), "product"))
    return out


def tier_constraints(gens: Sequence[Polynomial], levels: Sequence[dict]) -> list[Constraint]:
    """Inside each generator the lexicographically larger level profile wins.

    ``levels`` is a list of variable -> integer maps compared in turn; the
    first one reads a chain of variable groups as a block order, so the
    group profile of a monomial is compared before anything else.
    """
    out = []
    for g in gens:
        ms = sorted(g, key=_mono_sort_key)
        for a, b in itertools.combinations(ms, 2):
            for lv in levels:
                ta = sum(lv.get(v, 0) * e for v, e in a)
                tb = sum(lv.get(v, 0) * e for v, e in b)
                if ta != tb:
                    out.append(Constraint(a, b, "tier") if ta > tb else Constraint(b, a, "tier"))
                    break
    return out


def check_tiers(tiers: dict, constraints: Sequence[Constraint]) -> None:
    """Tier values must respect every declared group and product constraint."""
    for c in constraints:
        if c.note in ("group", "product"):
            tb = sum(tiers[v] * e for v, e in c.big)
            ts = sum(tiers[v] * e for v, e in c.small)
            if tb <= ts:
                raise Infeasible(f"tiers contradict {c.to_dict()}")


def resolve_order(gens: Sequence[Polynomial], constraints: Sequence[Constraint], variables, max_rounds: int = 64):
    """Solve, and on a tie let the first tied monomial win and re-solve."""
    cons = list(constraints)
    added = []
    for _ in range(max_rounds):
        order = solve_order(cons, variables)
        try:
            init = initial_monomials(gens, order)
        except TieDetected as tie:
            win = tie.monomials[0]
            extra = [Constraint(win, o, "tiebreak") for o in tie.monomials[1:]]
            added.extend(c.to_dict() for c in extra)
            cons.extend(extra)
            continue
        order.certificate["tiebreaks"] = added
        return order, init
    raise Infeasible(f"ties persist after {max_rounds} rounds")


def _feasible(rows: list, names: list) -> bool:
    if not rows:
        return True
    A = np.array(rows, dtype=float)
    res = linprog(np.zeros(len(names)), A_ub=-A, b_ub=-np.ones(len(rows)),
                  bounds=[(0, None)] * len(names), method="highs")
    return res.status == 0


def lead_alternatives(gens: Sequence[Polynomial], constraints: Sequence[Constraint], variables) -> list[frozenset]:
    """Every initial ideal reachable by a weight order obeying ``constraints``.

    Depth-first over generators; a branch survives when the strict
    inequalities stay feasible.  Returns the distinct sets of initial
    monomial supports (minimalized), sorted for stability.
    """
    names = sorted(set(variables), key=vertex_key)
    idx = {v: i for i, v in enumerate(names)}

    def row(big, small):
        r = [0] * len(names)
        for v, e in big:
            r[idx[v]] += e
        for v, e in small:
            r[idx[v]] -= e
        return r

    base = [row(c.big, c.small) for c in constraints]
    gens = [sorted(g, key=_mono_sort_key) for g in gens if g]
    options = []
    for g in gens:
        opts = [m for m in g if _feasible(base + [row(m, o) for o in g if o != m], names)]
        options.append(opts)
    # forced generators first, then the rest by number of options
    order = sorted(range(len(gens)), key=lambda k: len(options[k]))
    found: set = set()

    def dfs(pos, rows, chosen):
        if pos == len(order):
            found.add(_minimal_supports(chosen))
            return
        k = order[pos]
        for m in options[k]:
            extra = [row(m, o) for o in gens[k] if o != m]
            nxt = rows + extra
            if len(options[k]) == 1 or _feasible(nxt, names):
                dfs(pos + 1, nxt, chosen + [m])

    dfs(0, base, [])
    return sorted(found, key=lambda s: sorted(sorted(map(vertex_key, x)) for x in s))


def _minimal_supports(monomials) -> frozenset:
    sups = sorted({mono_support(m) for m in monomials}, key=len)
    keep = []
    for s in sups:
        if not any(k <= s for k in keep):
            keep.append(s)
    return frozenset(keep)


def initial_monomials(gens: Sequence[Polynomial], order: TermOrder) -> list[Monomial]:
    out = []
    for g in gens:
        if not g:
            continue
        ws = {m: order.weight(m) for m in g}
        top = max(ws.values())
        lead = [m for m, w in ws.items() if w == top]
        if len(lead) > 1:
            raise TieDetected(g, sorted(lead, key=_mono_sort_key))
        if not is_squarefree(lead[0]):
            raise GroebnerError(f"initial term {mono_str(lead[0])} is not squarefree")
        out.append(lead[0])
    return out


# ---------------------------------------------------------------------------
# generator sets

INDEX = {6: 2, 7: 7, 8: 5, 9: 3, 10: 2}


@dataclass
class GeneratorSet:
    name: str
    genus: int
    polynomials: list
    variables: tuple
    degree: int
    simplex_dim: int
    constraints: list
    levels: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def checksum(self) -> str:
        text = json.dumps([poly_str(p) for p in self.polynomials])
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def _x(i: int, j: int) -> str:
    return f"x{min(i, j)}{max(i, j)}"


def _grassmann_vars(n: int) -> list[str]:
    return [_x(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]


def _g6_quadric(initial: Iterable[Monomial], variables: Sequence[str], pair=None) -> tuple[str, str]:
    used = set().union(*(mono_support(m) for m in initial))
    free = [v for v in variables if v not in used]
    if pair is not None:
        pair = tuple(pair)
        if not set(pair) <= set(free) or len(set(pair)) != 2:
            raise GroebnerError(f"{pair} must be two variables unused by the Pfaffian leads {free}")
        return pair
    return free[0], free[1]


def generator_set(g: int, choices: Sequence[int] | None = None, quadric=None) -> GeneratorSet:
    """Generators and order constraints for the Mukai variety of genus ``g``.

    ``choices`` resolves the free comparisons for g = 9 (four bits) and
    g = 10 (three bits); bit 1 makes the left side of the comparison bigger.
    """
    if g not in INDEX:
        raise GroebnerError(f"genus {g} is not in 6..10")
    builder = {6: _gen6, 7: _gen7, 8: _gen8, 9: _gen9, 10: _gen10}[g]
    gs = builder(choices, quadric) if g == 6 else builder(choices)
    gs.degree = 2 * (g - 1)
    gs.simplex_dim = INDEX[g]
    if gs.levels:
        check_tiers(gs.levels[0], gs.constraints)
        gs.constraints = gs.constraints + tier_constraints(gs.polynomials, gs.levels)
    return gs


def circular_weight(n: int) -> dict:
    """The classical circular weight d(n-d) on x_ij with d = j - i."""
    return {_x(i, j): (j - i) * (n - (j - i)) for i, j in itertools.combinations(range(1, n + 1), 2)}


def _tiers(*groups: Sequence[str], values: Sequence[int]) -> dict:
    return {v: t for grp, t in zip(groups, values) for v in grp}


def _gen6(choices, quadric) -> GeneratorSet:
    variables = _grassmann_vars(5)
    pf = all_pfaffians(antisymmetric_matrix(5))
    cons = circular_constraints(5)
    order = solve_order(cons, variables)
    a, b = _g6_quadric(initial_monomials(pf, order), variables, quadric)
    gens = pf + [pmul(var(a), var(b))]
    return GeneratorSet("g6", 6, gens, tuple(variables), 0, 0, cons, notes={"quadric": [a, b]})


def _gen7(choices) -> GeneratorSet:
    xs = _grassmann_vars(5)
    ys = [f"y{k}" for k in range(1, 6)]
    variables = ["u"] + xs + ys
    M = antisymmetric_matrix(5)
    gens = []
    for i in range(1, 6):
        phi = pfaffian4(M, [r for r in range(1, 6) if r != i])
        sign = 1 if i % 2 == 0 else -1
        gens.append(psub(pmul(var("u"), var(f"y{i}")), pscale(phi, sign)))
    for i in range(5):
        gens.append(padd(*(pmul(M[i][j], var(f"y{j + 1}")) for j in range(5))))
    groups = [["u", "y2", "y3", "y4"], ["y1", "y5"], xs]
    cons = circular_constraints(5) + group_constraints(groups)
    # group profile first, then the circular weight of the x part
    levels = [_tiers(*groups, values=(0, 1, 2)), circular_weight(5)]
    return GeneratorSet("g7", 7, gens, tuple(variables), 0, 0, cons, levels)


def _gen8(choices) -> GeneratorSet:
    variables = _grassmann_vars(6)
    gens = all_pfaffians(antisymmetric_matrix(6))
    return GeneratorSet("g8", 8, gens, tuple(variables), 0, 0, circular_constraints(6))


LG_LEFT = ["u", "v", "y13", "z13"]
LG_MIDDLE = ["y12", "y23", "z12", "z23"]
LG_RIGHT = ["y11", "y22", "y33", "z11", "z22", "z33"]

G2_LEFT = ["u", "v"]
G2_MIDDLE = ["r", "w", "x00", "x01", "x10", "x11"]
G2_RIGHT = ["y00", "y01", "y10", "y11", "z0", "z1"]

# free comparisons (lhs, rhs); a choice bit of 1 makes lhs the larger side
LG_FREE = [
    (("y11", "z12"), ("y12", "z22")),
    (("y22", "z12"), ("y12", "z11")),
    (("y22", "z23"), ("y23", "z33")),
    (("y33", "z23"), ("y23", "z22")),
]

G2_FREE = [
    (("x00", "x11"), ("x01", "x10")),
    (("x00", "y01"), ("x01", "y00")),
    (("x10", "y11"), ("x11", "y10")),
]


def _choice_constraints(free, choices) -> list[Constraint]:
    if choices is None:
        return []
    if len(choices) != len(free):
        raise GroebnerError(f"expected {len(free)} choice bits, got {len(choices)}")
    out = []
    for (lhs, rhs), bit in zip(free, choices):
        big, small = (lhs, rhs) if bit else (rhs, lhs)
        out.append(Constraint(mono(*big), mono(*small), "choice"))
    return out


def lg_diagonal_condition() -> list[Constraint]:
    """y_ii, z_ii below y_jj, z_jj whenever i < j."""
    out = []
    for i, j in itertools.combinations((1, 2, 3), 2):
        for a in (f"y{i}{i}", f"z{i}{i}"):
            for b in (f"y{j}{j}", f"z{j}{j}"):
                out.append(Constraint(mono(b), mono(a), "diagonal"))
    return out


def _gen9(choices) -> GeneratorSet:
    sym = [f"{i}{j}" for i in range(1, 4) for j in range(i, 4)]
    variables = ["u", "v"] + [f"y{s}" for s in sym] + [f"z{s}" for s in sym]
    Y, Z = _sym_matrix("y"), _sym_matrix("z")
    u, v = var("u"), var("v")
    gens = []
    for i in range(1, 4):
        for j in range(i, 4):
            gens.append(psub(cofactor(Y, i, j), pmul(v, var(f"z{i}{j}"))))
    for i in range(1, 4):
        for j in range(i, 4):
            gens.append(psub(cofactor(Z, i, j), pmul(u, var(f"y{i}{j}"))))
    for i in range(3):
        for j in range(3):
            prod = padd(*(pmul(Y[i][k], Z[k][j]) for k in range(3)))
            gens.append(psub(prod, pmul(u, v)) if i == j else prod)
    cons = group_constraints([LG_LEFT, LG_MIDDLE, LG_RIGHT]) + product_constraints(LG_LEFT, LG_MIDDLE, LG_RIGHT)
    cons += _choice_constraints(LG_FREE, choices)
    levels = [_tiers(LG_LEFT, LG_MIDDLE, LG_RIGHT, values=(0, 2, 3))]
    return GeneratorSet("g9", 9, gens, tuple(variables), 0, 0, cons, levels, {"choices": list(choices or [])})


def _gen10(choices) -> GeneratorSet:
    variables = G2_LEFT + G2_MIDDLE + G2_RIGHT
    gens = all_pfaffians(g2_matrix())
    cons = group_constraints([G2_LEFT, G2_MIDDLE, G2_RIGHT]) + product_constraints(G2_LEFT, G2_MIDDLE, G2_RIGHT)
    cons += _choice_constraints(G2_FREE, choices)
    levels = [_tiers(G2_LEFT, G2_MIDDLE, G2_RIGHT, values=(0, 2, 3))]
    return GeneratorSet("g10", 10, gens, tuple(variables), 0, 0, cons, levels, {"choices": list(choices or [])})


# ---------------------------------------------------------------------------
# targets and certification


def target_complex(g: int) -> SimplicialComplex:
    """T_{g+1} joined with a simplex of dimension i_g."""
    from .spheres import deltahedra_series

    T = deltahedra_series()[f"T{g + 1}"]
    return join(T, simplex([f"s{k}" for k in range(INDEX[g] + 1)]))


def initial_complex(monomials: Iterable[Monomial], variables: Sequence[str]) -> SimplicialComplex:
    ideal = SquarefreeMonomialIdeal(frozenset(mono_support(m) for m in monomials), tuple(variables))
    return complex_of_ideal(ideal)


def sz_certify(monomials: Sequence[Monomial], expected: SimplicialComplex | None, d: int, variables: Sequence[str] | None = None) -> dict:
    """Check the Sturmfels-Zelevinsky transversal criterion.

    Minimal transversals must all have cardinality equal to the codimension
    and number at most ``d``; the complex they cut out must match
    ``expected`` up to isomorphism.
    """
    if not all(is_squarefree(m) for m in monomials):
        raise CertFailed("not-squarefree", [mono_str(m) for m in monomials if not is_squarefree(m)])
    supports = [mono_support(m) for m in monomials]
    if variables is None:
        variables = sorted(set().union(*supports), key=vertex_key)
    trans = minimal_transversals(supports, variables)
    sizes = sorted({len(t) for t in trans})
    K = initial_complex(monomials, variables)
    codim = len(variables) - (K.dim + 1)
    cert = {
        "n_variables": len(variables),
        "n_monomials": len(set(supports)),
        "transversal_count": len(trans),
        "transversal_sizes": sizes,
        "codimension": codim,
        "degree_bound": d,
        "dim": K.dim,
    }
    if sizes != [codim]:
        raise CertFailed("mixed-cardinality", cert)
    if len(trans) > d:
        raise CertFailed("count>d", cert)
    if expected is not None:
        if not isomorphic(K, expected):
            raise CertFailed("wrong-complex", cert)
        cert["target_canonical_form"] = [list(f) for f in canonical_form(expected)]
    cert["passed"] = True
    return cert


def degenerate(g: int, choices: Sequence[int] | None = None, quadric=None, extra: Sequence[Constraint] = ()) -> dict:
    """Solve the order, take lead terms and return the initial complex data."""
    gs = generator_set(g, choices, quadric)
    if extra:
        gs.constraints = gs.constraints + list(extra)
    order, init = resolve_order(gs.polynomials, gs.constraints, gs.variables)
    K = initial_complex(init, gs.variables)
    return {"generators": gs, "order": order, "initial": init, "complex": K}


def certify(g: int, choices: Sequence[int] | None = None, quadric=None) -> dict:
    """Full certificate for genus ``g``; raises CertFailed on any failure."""
    if g in (9, 10) and choices is None:
        choices = DEFAULT_CHOICES[g] or _default_g10()
    data = degenerate(g, choices, quadric)
    gs = data["generators"]
    cert = sz_certify(data["initial"], target_complex(g), gs.degree, gs.variables)
    return {
        "genus": g,
        "simplex_dim": gs.simplex_dim,
        "choices": list(choices) if choices is not None else None,
        "generator_count": len(gs.polynomials),
        "generator_checksum": gs.checksum(),
        "order": data["order"].to_dict(),
        "initial_monomials": sorted(mono_str(m) for m in set(data["initial"])),
        "transversals": cert,
        "passed": True,
    }


def choice_enumeration(g: int) -> list[dict]:
    """Every resolution of the free comparisons for g = 9 or 10."""
    free = {9: LG_FREE, 10: G2_FREE}.get(g)
    if free is None:
        raise GroebnerError("choice enumeration exists for g = 9 and 10 only")
    target = target_complex(g)
    out = []
    for bits_ in itertools.product((0, 1), repeat=len(free)):
        data = degenerate(g, bits_)
        K = data["complex"]
        out.append({
            "choices": list(bits_),
            "complex": K,
            "initial": data["initial"],
            "iso_to_target": isomorphic(K, target),
        })
    return out


def admissible_ideals(g: int, choices: Sequence[int] | None = None) -> list[dict]:
    """All initial ideals over every weight order obeying the declared constraints."""
    gs = generator_set(g, choices)
    target = target_complex(g)
    out = []
    for sups in lead_alternatives(gs.polynomials, gs.constraints, gs.variables):
        K = initial_complex([mono(*s) for s in sups], gs.variables)
        out.append({"supports": sups, "complex": K, "iso_to_target": isomorphic(K, target)})
    return out


# g = 9: the resolution forced by lg_diagonal_condition(); g = 10: the first
# vector in enumeration order reaching T11.  Tests re-derive both.
DEFAULT_CHOICES = {9: (0, 1, 0, 1), 10: None}


def _default_g10() -> tuple[int, ...]:
    for bits_ in itertools.product((0, 1), repeat=len(G2_FREE)):
        if isomorphic(degenerate(10, bits_)["complex"], target_complex(10)):
            return bits_
    raise CertFailed("wrong-complex", "no choice vector reaches T11")


# ---------------------------------------------------------------------------
# versal family of the hexagon associahedron


def _hx(i: int, j: int) -> str:
    a, b = (i - 1) % 6 + 1, (j - 1) % 6 + 1
    return assoc.diag(min(a, b), max(a, b))


@dataclass
class VersalParameters:
    m: int
    t: dict
    r: dict
    u: dict
    s: dict

    @classmethod
    def zero(cls, m: int) -> "VersalParameters":
        return cls(
            m,
            {(i, l): 0 for i in range(1, 7) for l in range(1, 4)},
            {(i, k): 0 for i in range(1, 7) for k in range(m + 1)},
            {i: 0 for i in range(1, 7)},
            {i: 0 for i in range(1, 4)},
        )

    @classmethod
    def random(cls, m: int, rng, low: int = -3, high: int = 3) -> "VersalParameters":
        p = cls.zero(m)
        for d in (p.t, p.r, p.u, p.s):
            for k in d:
                d[k] = int(rng.integers(low, high + 1))
        return p


def _h(p: VersalParameters, a: int, b: int) -> Polynomial:
    """Linear form h_{k,k+1}; index pairs are unordered and taken mod 6."""
    a, b = (a - 1) % 6 + 1, (b - 1) % 6 + 1
    if (b - a) % 6 == 1:
        i = a
    elif (a - b) % 6 == 1:
        i = b
    else:
        raise GroebnerError(f"h needs adjacent indices, got {a},{b}")
    terms = [
        pscale(var(_hx(i - 1, i + 2)), p.t[(i, 1)]),
        pscale(var(_hx(i - 1, i + 3)), p.t[(i, 2)]),
        pscale(var(_hx(i - 2, i + 2)), p.t[(i, 3)]),
    ]
    terms += [pscale(var(f"y{k}"), p.r[(i, k)]) for k in range(p.m + 1)]
    return padd(*terms)


def versal_terms(m: int, params: VersalParameters | None = None) -> list[list[Polynomial]]:
    """The displayed terms of each of the fifteen equations, in display order."""
    p = params if params is not None else VersalParameters.zero(m)
    if p.m != m:
        raise GroebnerError("parameter block was built for a different m")
    x = lambda a, b: var(_hx(a, b))  # noqa: E731
    h = lambda a, b: _h(p, a, b)  # noqa: E731
    u = lambda i: p.u[(i - 1) % 6 + 1]  # noqa: E731
    s = lambda i: p.s[(i - 1) % 3 + 1]  # noqa: E731
    sc = pscale
    eqs = []
    for i in range(1, 7):
        head = [
            pmul(x(i, i + 2), x(i + 1, i - 1)),
            pmul(h(i, i + 1), x(i + 2, i - 1)),
            sc(pmul(h(i + 1, i + 2), h(i, i - 1)), s(i + 1)),
        ]
        tail = [
            sc(pmul(h(i + 1, i + 2), x(i + 3, i - 1)), -u(i)),
            sc(pmul(h(i, i - 1), x(i + 2, i - 2)), -u(i + 1)),
            sc(pmul(h(i - 2, i - 1), h(i + 2, i + 3)), -u(i) * u(i + 1)),
        ]
        eqs.append(head + tail)
    for i in range(1, 7):
        head = [
            pmul(x(i, i + 3), x(i + 1, i - 1)),
            sc(pmul(h(i, i + 1), x(i + 3, i - 1)), -s(i)),
            sc(pmul(x(i + 1, i + 3), h(i, i - 1)), -s(i + 1)),
        ]
        tail = [
            sc(pmul(x(i + 1, i + 3), x(i + 3, i - 1)), u(i)),
            sc(pmul(h(i, i + 1), x(i, i + 2)), u(i + 3) * u(i - 1)),
            sc(pmul(h(i, i - 1), x(i, i - 2)), u(i + 3) * u(i + 1)),
            sc(pmul(h(i, i - 1), h(i + 3, i - 2)), -u(i + 1) * s(i)),
            sc(pmul(h(i, i + 1), h(i, i - 1)), -u(i + 3) * s(i + 2)),
            sc(pmul(h(i, i + 1), h(i + 2, i + 3)), -u(i - 1) * s(i + 1)),
            sc(pmul(h(i + 2, i + 3), h(i + 3, i - 2)), -u(i) * u(i + 1) * u(i - 1)),
        ]
        eqs.append(head + tail)
    for i in range(1, 4):
        head = [
            pmul(x(i, i + 3), x(i + 2, i - 1)),
            sc(pmul(x(i, i + 2), x(i + 3, i - 1)), s(i)),
            sc(pmul(h(i, i - 1), h(i + 2, i + 3)), -s(i + 1) * s(i + 2)),
        ]
        tail = [
            sc(pmul(x(i + 3, i - 1), x(i + 3, i - 1)), -u(i) * u(i + 2)),
            sc(pmul(x(i, i + 2), x(i, i + 2)), -u(i + 3) * u(i - 1)),
            sc(pmul(x(i + 3, i - 1), h(i + 2, i + 3)), u(i) * s(i + 2)),
            sc(pmul(x(i + 3, i - 1), h(i, i - 1)), u(i + 2) * s(i + 1)),
            sc(pmul(x(i, i + 2), h(i, i - 1)), u(i + 3) * s(i + 2)),
            sc(pmul(x(i, i + 2), h(i + 2, i + 3)), u(i - 1) * s(i + 1)),
            sc(pmul(h(i + 2, i + 3), h(i, i - 1)), -s(i) * u(i + 1) * u(i - 2)),
            sc(pmul(h(i, i - 1), h(i, i - 1)), -u(i + 1) * u(i - 2) * u(i + 3) * u(i + 2)),
            sc(pmul(h(i + 2, i + 3), h(i + 2, i + 3)), -u(i + 1) * u(i - 2) * u(i - 1) * u(i)),
        ]
        eqs.append(head + tail)
    return eqs


def versal_a6(m: int, params: VersalParameters | None = None, heads_only: bool = False) -> list[Polynomial]:
    """The fifteen equations of the versal family over the smooth base.

    With ``heads_only`` each equation keeps only its first three terms.
    """
    return [padd(*(t[:3] if heads_only else t)) for t in versal_terms(m, params)]


def versal_special_fiber(m: int) -> SimplicialComplex:
    ys = [f"y{k}" for k in range(m + 1)]
    A6 = assoc.build(6)
    return join(A6, simplex(ys)) if ys else A6


def versal_variables(m: int) -> list[str]:
    return assoc.diagonals(6) + [f"y{k}" for k in range(m + 1)]
