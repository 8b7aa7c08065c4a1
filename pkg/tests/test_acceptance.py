"""Acceptance criteria 1-11; each test prints one PASS/FAIL line."""

import random
from fractions import Fraction

import pytest

from coxgrowth.coxeter import CoxeterMatrix, steinberg_growth, tits_bfs_sphere_sizes
from coxgrowth.errors import AndreevFailure
from coxgrowth.growth3d import (
    conjugate_pair_modulus_sq,
    deformation_sweep,
    derivative_identity_check,
    floyd_relation_check,
    ideal_limit_difference,
    ideal_structure_check,
    parry_growth,
    polyhedral_growth,
    ridge_pair_difference,
    vertex_derivative_at_one,
)
from coxgrowth.polyalg import ONE, IntPoly, RatFunc, parse_poly, product, qint, substitute_inverse, taylor_coeffs
from coxgrowth.polyhedron import (
    DODECAHEDRON_MARKED_EDGE as E,
    RidgeDescriptor,
    andreev_check,
    brute_force_circuits,
    contract_ridge,
    contraction_inverse,
    corpus,
    four_circuits,
    gen_cube,
    gen_dodecahedron,
    gen_ideal3_dodecahedron,
    gen_lambert_cube,
    gen_loebell,
    insert_edge,
    loebell_vertical_edges,
    ridge_at,
    three_circuits,
    validate,
)
from coxgrowth.roots import classify, strip_cyclotomic

RESULTS: dict[int, tuple[bool, str]] = {}
t = IntPoly([0, 1])


def record(n: int, failures: list[str], summary: str):
    ok = not failures
    detail = summary if ok else "; ".join(failures)
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def P(*factors: str) -> IntPoly:
    return product([parse_poly(f) for f in factors])


@pytest.fixture(scope="module")
def d_inf():
    return contract_ridge(gen_dodecahedron(2), E)


def test_criterion_01_dodecahedron_closed_forms(d_inf):
    fails = []
    for m in range(2, 9):
        expected = RatFunc((ONE + t) ** 3 * qint(m), P(f"1 - 8t + 8t^{m + 1} - t^{m + 2}"))
        if parry_growth(gen_dodecahedron(m)) != expected:
            fails.append(f"m={m}")
    if polyhedral_growth(d_inf).f != RatFunc((ONE + t) ** 3, P("1 - t", "1 - 8t")):
        fails.append("contracted")
    record(1, fails, "m=2..8 and the contracted limit match exactly")


def test_criterion_02_growth_rate_anchors(d_inf):
    fails = []
    tol = Fraction(5, 10**6)
    for m, anchor in ((2, "7.87298"), (3, "7.98453")):
        tau = polyhedral_growth(gen_dodecahedron(m)).tau.refine(Fraction(1, 10**9))
        if not (abs(tau.lo - Fraction(anchor)) <= tol and abs(tau.hi - Fraction(anchor)) <= tol):
            fails.append(f"m={m}: {tau.decimal(8)}")
    if polyhedral_growth(d_inf).tau.exact != 8:
        fails.append("tau_inf is not exactly 8")
    record(2, fails, "tau(2)=7.87298.., tau(3)=7.98453.., tau_inf=8")


def test_criterion_03_ideal3_example():
    fails = []
    rep = polyhedral_growth(gen_ideal3_dodecahedron())
    if rep.f != RatFunc((ONE + t) ** 3 * P("1 + t + t^2"), P("9t^4 - 2t^2 - 8t + 1")):
        fails.append("f differs")
    tau = rep.tau.refine(Fraction(1, 10**12))
    if abs(tau.midpoint - Fraction("8.2269405")) > Fraction(1, 10**6):
        fails.append(f"tau={tau.decimal(8)}")
    if rep.tau_class.kind != "Neither":
        fails.append(f"class={rep.tau_class.kind}")
    lo, hi = conjugate_pair_modulus_sq(rep.tau_class.factor, tau)
    target = Fraction("1.0939668")
    if max(abs(lo - target), abs(hi - target)) > Fraction(1, 10**6):
        fails.append(f"modulus^2 in [{float(lo)}, {float(hi)}]")
    record(3, fails, f"tau={tau.decimal(7)}, Neither, |z|^2={float(lo):.7f}")


def test_criterion_04_method_equivalence():
    fails = []
    polys = [(f"dodecahedron m={m}", gen_dodecahedron(m)) for m in range(2, 9)]
    for p in (3, 4, 5):
        for q in (3, 4, 5):
            for r in (3, 4, 5):
                C = gen_lambert_cube(p, q, r)
                if andreev_check(C).ok:
                    polys.append((f"lambert {p},{q},{r}", C))
    for name, X in polys:
        f = polyhedral_growth(X).f
        if parry_growth(X) != f:
            fails.append(f"{name}: Parry != Steinberg")
        if substitute_inverse(f) != -f:
            fails.append(f"{name}: not anti-reciprocal")
    record(4, fails, f"{len(polys)} compact polyhedra agree and are anti-reciprocal")


def _R(*h):
    return RidgeDescriptor.of(*h)


TABLE_ROWS = [
    ((2, 2, 2, 2, 3), (2, 2, 3, 2, 3), P("t^2", "1 - t"), P("1 + 3t + 3t^2 + t^3", "1 + t^2")),
    ((2, 2, 3, 2, 3), (2, 2, 4, 2, 3), P("t^3", "1 - t"), P("1 + 3t + 3t^2 + t^3", "1 - t + t^2", "1 + t + t^2")),
    ((2, 2, 4, 2, 3), (2, 2, 5, 2, 3), P("t^4", "1 - t", "1 - t + t^2", "1 + t + t^2"),
     P("1 + 3t + 3t^2 + t^3", "1 + t^2", "1 - t + t^2 - t^3 + t^4", "1 + t + t^2 + t^3 + t^4")),
    ((2, 2, 2, 2, 4), (2, 2, 3, 2, 4), P("t^2", "1 - t", "1 + t^2"), P("1 + 3t + 3t^2 + t^3", "1 - t + t^2", "1 + t + t^2")),
    ((2, 2, 2, 2, 5), (2, 2, 3, 2, 5), P("t^2", "1 - t", "1 + 2t^2 + t^3 + 2t^4 + t^5 + 2t^6 + t^7 + 2t^8 + t^10"),
     P("1 + 3t + 3t^2 + t^3", "1 + 2t^2 + 3t^4 + 3t^6 + 3t^8 + 2t^10 + t^12")),
    ((2, 3, 2, 2, 3), (2, 3, 3, 2, 3), P("t^2", "1 - t"), P("1 + t", "1 + t^2", "1 + t + t^2")),
    ((2, 3, 3, 2, 3), (2, 3, 4, 2, 3), P("t^3", "1 - t"), P("1 + 3t + 3t^2 + t^3", "1 + t^2", "1 - t + t^2")),
    ((2, 3, 4, 2, 3), (2, 3, 5, 2, 3), P("t^4", "1 - t"), P("1 + 3t + 3t^2 + t^3", "1 + t^2", "1 - t + t^2 - t^3 + t^4")),
    ((2, 3, 2, 2, 4), (2, 3, 3, 2, 4), P("t^2", "1 - t", "1 + t + t^2 + t^3 + t^4"),
     P("1 + 3t + 3t^2 + t^3", "1 + t^2", "1 - t + t^2", "1 + t + t^2")),
    ((2, 3, 2, 2, 5), (2, 3, 3, 2, 5), P("t^2", "1 - t", "1 + t^2", "1 + t^3 + t^6"),
     P("1 + 3t + 3t^2 + t^3", "1 + 3t^2 + 5t^4 + 6t^6 + 6t^8 + 5t^10 + 3t^12 + t^14")),
    ((2, 4, 2, 2, 4), (2, 4, 3, 2, 4), P("t^2", "1 - t"), P("1 + 3t + 3t^2 + t^3", "1 - t + t^2")),
    ((2, 4, 2, 2, 5), (2, 4, 3, 2, 5), P("t^2", "1 - t", "1 + t^2", "1 + t^3 + t^6"),
     P("1 + 3t + 3t^2 + t^3", "1 - t + t^2", "1 - t + t^2 - t^3 + t^4", "1 + t + t^2 + t^3 + t^4")),
    ((2, 5, 2, 2, 5), (2, 5, 3, 2, 5), P("t^2", "1 - t", "1 + t^2 + 2t^3 - t^4 + 2t^5 + t^6 + t^8"),
     P("1 + 3t + 3t^2 + t^3", "1 - t + t^2", "1 - t + t^2 - t^3 + t^4", "1 + t + t^2 + t^3 + t^4")),
]


def test_criterion_05_ridge_pair_tables():
    fails = []
    for n in range(2, 13):
        expected = RatFunc(
            IntPoly.monomial(n) * (ONE - t) ** 3,
            (ONE - IntPoly.monomial(n)) * (ONE - IntPoly.monomial(n + 1)) * (ONE + t) ** 2,
        )
        if ridge_pair_difference(_R(2, 2, n, 2, 2), _R(2, 2, n + 1, 2, 2)) != expected:
            fails.append(f"row <2,2,n,2,2> at n={n}")
    for h1, h2, num, den in TABLE_ROWS:
        if ridge_pair_difference(_R(*h1), _R(*h2)) != RatFunc(num, den):
            fails.append("row <{}> does not match the printed form".format(",".join(map(str, h1))))
    record(5, fails, "all 14 rows match")


def test_criterion_06_vertex_derivatives():
    fails = []
    for n in range(2, 30):
        if vertex_derivative_at_one((2, 2, n)) != -Fraction(1, 8) * (1 - Fraction(1, n)):
            fails.append(f"(2,2,{n})")
    for v, val in (((2, 3, 3), Fraction(-1, 8)), ((2, 3, 4), Fraction(-5, 32)), ((2, 3, 5), Fraction(-3, 16))):
        if vertex_derivative_at_one(v) != val:
            fails.append(str(v))
    record(6, fails, "-(1/8)(1-1/n), -1/8, -5/32, -3/16")


def test_criterion_07_ideal_limit_identity(d_inf):
    fails = []
    f_inf = polyhedral_growth(d_inf).f
    for m in range(2, 9):
        f_m = polyhedral_growth(gen_dodecahedron(m)).f
        if RatFunc(1) / f_m - RatFunc(1) / f_inf != ideal_limit_difference(m):
            fails.append(f"difference m={m}")
        v = derivative_identity_check(gen_dodecahedron(m), d_inf, m)
        if v.difference != Fraction(1, 4 * m):
            fails.append(f"derivative m={m}: {v.difference}")
    record(7, fails, "1/f_n - 1/f_inf and dF difference 1/(4n) exact for n=2..8")


def test_criterion_08_floyd_structure(d_inf):
    fails = []
    rep = polyhedral_growth(d_inf)
    cert = ideal_structure_check(rep, strict=False)
    if not cert.ok:
        fails.append(f"clauses {cert.failed}")
    if cert.P_inf != parse_poly("t - 8") or cert.Q_inf != (t + ONE) ** 3 or cert.P_inf(1) != -7:
        fails.append(f"P_inf={cert.P_inf}, Q_inf={cert.Q_inf}")
    for n in range(2, 21):
        v = floyd_relation_check(cert, polyhedral_growth(gen_dodecahedron(n)).F, n)
        if not v.match or not v.p_at_one_zero:
            fails.append(f"numerator n={n}")
        _, rest = strip_cyclotomic(v.P_formula)
        if not classify(rest).is_paper_salem:
            fails.append(f"n={n} remainder not Salem")
    if rep.tau_class.kind != "Pisot" or rep.tau_class.factor != parse_poly("t - 8"):
        fails.append("limit not Pisot t-8")
    record(8, fails, "P_inf=t-8, Q_inf=(t+1)^3, Floyd relation n=2..20, Salem members, Pisot limit")


def test_criterion_09_oracle_equivalence():
    fails = []
    for labels in ((2, 3, 7), (2, 4, 5)):
        M = CoxeterMatrix.triangle(*labels)
        bfs = tits_bfs_sphere_sizes(M, 10)
        taylor = [int(c) for c in taylor_coeffs(steinberg_growth(M), 11)]
        if bfs != taylor:
            fails.append(f"{labels}: {bfs} vs {taylor}")
    for labels, exps, order in (((3, 5, 2), (2, 6, 10), 120), ((3, 4, 2), (2, 4, 6), 48)):
        M = CoxeterMatrix.triangle(*labels)
        sizes = tits_bfs_sphere_sizes(M, 40)
        expected = list(product([qint(e) for e in exps]).coeffs)
        while sizes and sizes[-1] == 0:
            sizes.pop()
        if sizes != expected or sum(sizes) != order:
            fails.append(f"{labels}: {sizes}")
    record(9, fails, "BFS = Taylor to depth 10; H3 and B3 fully enumerated")


def _round_trip_instances(count=50, seed=20240917):
    rnd = random.Random(seed)
    bases = [gen_dodecahedron(2), gen_loebell(5), gen_loebell(6), gen_loebell(7), gen_lambert_cube(3, 3, 3)]
    out = []
    while len(out) < count:
        X = rnd.choice(bases)
        e = rnd.choice(X.edges)
        n = rnd.randint(2, 9)
        Q = X.relabel(e, n)
        r = ridge_at(Q, e) if validate(Q).ok else None
        if r is None or r.type != (2, 2, n, 2, 2) or not andreev_check(Q).ok:
            continue
        out.append((Q, e))
    return out


def test_criterion_10_andreev_suite():
    fails = []
    if andreev_check(gen_cube()).failed != ["m3"]:
        fails.append("all-right cube")
    for m in range(2, 11):
        if not andreev_check(gen_dodecahedron(m)).ok:
            fails.append(f"dodecahedron m={m}")
    for X, e in _round_trip_instances():
        Q = contract_ridge(X, e)
        if insert_edge(Q, **contraction_inverse(X, e)) != X:
            fails.append(f"insert after contract at {e}")
        kw = contraction_inverse(X, e)
        try:
            R = insert_edge(Q, kw["v"], kw["mode"], kw["n"])
        except AndreevFailure:
            fails.append(f"insert rejected at {e}")
            continue
        if contract_ridge(R, (kw["v"], max(R.vertices))) != Q:
            fails.append(f"contract after insert at {e}")
    polys = corpus(14)
    for name, X in polys.items():
        if {frozenset(c) for c in three_circuits(X)} != brute_force_circuits(X, 3):
            fails.append(f"3-circuits {name}")
        if {frozenset(c) for c in four_circuits(X)} != brute_force_circuits(X, 4):
            fails.append(f"4-circuits {name}")
    record(10, fails, f"cube fails m3 only, m=2..10 pass, 50 round trips, {len(polys)} circuit checks")


def test_criterion_11_monotone_sweeps():
    fails = []
    L = gen_loebell(6)
    for name, X, e in (
        ("dodecahedron", gen_dodecahedron(2), E),
        ("L(6)", L, loebell_vertical_edges(6)[0]),
    ):
        tab = deformation_sweep(X, e, 2, 12, digits=8)
        for flag in ("monotone", "below_limit", "members_salem", "limit_pisot"):
            if not getattr(tab, flag):
                fails.append(f"{name}: {flag}")
    record(11, fails, "n=2..12 increasing, below tau_inf, Salem members, Pisot limits")
