"""Growth functions of reflection groups of hyperbolic 3-polyhedra.

Two independent routes to the growth function (Steinberg's subset sum on
the face Coxeter matrix, and Parry's vertex sum for compact polyhedra),
structural certificates for polyhedra with one ideal 4-valent vertex, the
ridge-pair difference formulas, and label sweeps along a ridge.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .coxeter import INF, CoxeterMatrix, finite_type, growth_poly_finite, steinberg_virgin
from .errors import AndreevFailure, NotAdmissible, NotCompact, PreconditionError
from .polyalg import ONE, T, IntPoly, RatFunc, exact_div, format_poly, qint, reciprocal_poly, substitute_inverse
from .polyhedron import (
    CombPolyhedron,
    RidgeDescriptor,
    andreev_check,
    contract_ridge,
    edge_key,
    require_valid,
    ridge_at,
)
from .roots import AlgebraicClass, IsolatingInterval, classify, growth_rate, strip_cyclotomic


def _require_andreev(P: CombPolyhedron):
    require_valid(P)
    rep = andreev_check(P)
    if not rep.ok:
        raise AndreevFailure(f"Andreev condition(s) {rep.failed} fail", rep)
    return rep


def coxeter_matrix(P: CombPolyhedron) -> CoxeterMatrix:
    """Faces in face order; adjacent faces get their edge label, others inf."""
    names = list(P.faces)
    n = len(names)
    m = [[1 if i == j else INF for j in range(n)] for i in range(n)]
    idx = {f: i for i, f in enumerate(names)}
    for (a, b), lab in P.face_adjacency().items():
        i, j = idx[a], idx[b]
        m[i][j] = m[j][i] = lab
    return CoxeterMatrix(tuple(tuple(r) for r in m))


def vertex_triangle(P: CombPolyhedron, v: int) -> CoxeterMatrix:
    a, b, c = P.vertex_labels(v)
    return CoxeterMatrix.triangle(a, b, c)


def _vertex_term(exponents: Sequence[int]) -> RatFunc:
    g = RatFunc(T * (ONE - T), IntPoly([2]))
    for m in exponents:
        g = g * RatFunc(qint(m), qint(m + 1))  # (t^m - 1)/(t^(m+1) - 1)
    return g


def parry_F(P: CombPolyhedron) -> RatFunc:
    _require_andreev(P)
    if not P.is_compact:
        raise NotCompact("vertex-sum formula needs a compact polyhedron")
    F = RatFunc(IntPoly([-1, 1]), IntPoly([1, 1]))
    for v in P.vertices:
        F = F + _vertex_term(finite_type(vertex_triangle(P, v)).exponents)
    return F


def parry_growth(P: CombPolyhedron) -> RatFunc:
    return RatFunc(1) / substitute_inverse(parry_F(P))


@dataclass
class GrowthReport:
    f: RatFunc
    F: RatFunc
    virgin_num: IntPoly
    virgin_den: IntPoly
    tau: IsolatingInterval
    tau_class: AlgebraicClass
    anti_reciprocal: bool
    compact: bool
    n_ideal4: int = 0
    n_ideal3: int = 0
    method: str = "steinberg"

    @property
    def minimal_polynomial(self) -> Optional[IntPoly]:
        return self.tau_class.factor

    def to_json(self, digits: int = 20) -> dict:
        def rf(num, den):
            return {"num": list(num.coeffs), "den": list(den.coeffs)}

        return {
            "f": rf(self.f.num, self.f.den),
            "F": rf(self.F.num, self.F.den),
            "virgin": rf(self.virgin_num, self.virgin_den),
            "tau": self.tau.to_json(digits),
            "class": self.tau_class.to_json(),
            "anti_reciprocal": self.anti_reciprocal,
            "compact": self.compact,
            "method": self.method,
        }

    def text(self, digits: int = 10) -> str:
        exact = " (exact)" if self.tau.exact is not None else ""
        return "\n".join([
            f"f(t) = {format_ratfunc(self.f)}",
            f"F(t) = {format_ratfunc(self.F)}",
            f"virgin denominator = {format_poly(self.virgin_den)}",
            f"tau = {self.tau.decimal(digits)}{exact}",
            f"class = {self.tau_class.describe()}",
            f"anti_reciprocal = {str(self.anti_reciprocal).lower()}",
            f"compact = {str(self.compact).lower()}",
        ])


def format_ratfunc(f: RatFunc) -> str:
    """Human form with a positive constant term in the denominator when possible."""
    num, den = f.num, f.den
    if den[0] < 0 or (den[0] == 0 and den.lc < 0):
        num, den = -num, -den
    return f"({format_poly(num)}) / ({format_poly(den)})"


def tau_minimal_polynomial(f: RatFunc) -> IntPoly:
    """Reversed denominator of f, sign-normalized; classify strips cyclotomics."""
    p = f.den.reverse()
    return -p if p.lc < 0 else p


def is_anti_reciprocal(f: RatFunc) -> bool:
    return substitute_inverse(f) == -f


def report_from_F(num: IntPoly, den: IntPoly, compact: bool, digits: int = 20, method: str = "steinberg") -> GrowthReport:
    F = RatFunc(num, den)
    f = RatFunc(1) / substitute_inverse(F)
    tau = growth_rate(f, digits)
    return GrowthReport(
        f=f,
        F=F,
        virgin_num=num,
        virgin_den=den,
        tau=tau,
        tau_class=classify(tau_minimal_polynomial(f)),
        anti_reciprocal=is_anti_reciprocal(f),
        compact=compact,
        method=method,
    )


def polyhedral_growth(P: CombPolyhedron, digits: int = 20) -> GrowthReport:
    """Growth data of the reflection group of P via Steinberg's formula."""
    _require_andreev(P)
    num, den = steinberg_virgin(coxeter_matrix(P))
    rep = report_from_F(num, den, P.is_compact, digits)
    rep.n_ideal4 = sum(1 for v in P.ideal_vertices() if P.valence(v) == 4)
    rep.n_ideal3 = sum(1 for v in P.ideal_vertices() if P.valence(v) == 3)
    return rep


# -- polyhedra with one ideal 4-valent vertex ------------------------------

@dataclass
class StructureCertificate:
    P_inf: Optional[IntPoly]
    Q_inf: IntPoly
    clauses: dict[str, bool]
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]

    def to_json(self) -> dict:
        return {
            "P_inf": list(self.P_inf.coeffs) if self.P_inf is not None else None,
            "Q_inf": list(self.Q_inf.coeffs),
            "clauses": self.clauses,
            "ok": self.ok,
        }


class StructureFailure(PreconditionError):
    def __init__(self, message, certificate: StructureCertificate):
        super().__init__(message)
        self.certificate = certificate


def ideal_structure_check(report: GrowthReport, strict: bool = True) -> StructureCertificate:
    """Split the virgin F as t(t-1)P_inf/Q_inf and certify its shape."""
    if report.compact:
        raise PreconditionError("structure certificate needs a polyhedron with an ideal vertex")
    if report.n_ideal4 != 1 or report.n_ideal3:
        raise PreconditionError("structure certificate needs exactly one ideal vertex, 4-valent")
    num, Q = report.virgin_num, report.virgin_den
    if Q.lc < 0:
        num, Q = -num, -Q
    clauses: dict[str, bool] = {}
    tt1 = IntPoly([0, -1, 1])
    try:
        P = exact_div(num, tt1)
        clauses["divisible_by_t(t-1)"] = True
    except ArithmeticError:
        P = None
        clauses["divisible_by_t(t-1)"] = False
    _, rest = strip_cyclotomic(Q)
    clauses["Q_inf_cyclotomic"] = rest.degree == 0 and abs(rest[0]) == 1
    if P is not None:
        clauses["degree_gap_2"] = Q.degree - P.degree == 2
        clauses["P_inf(0)_nonzero"] = P[0] != 0
        clauses["P_inf(1)_negative"] = P(1) < 0
    cert = StructureCertificate(P, Q, clauses)
    if strict and not cert.ok:
        raise StructureFailure(f"structure clause(s) fail: {cert.failed}", cert)
    return cert


@dataclass
class FloydVerdict:
    n: int
    P_formula: IntPoly
    P_numerator: Optional[IntPoly]
    match: bool
    p_at_one_zero: bool
    p_class: Optional[AlgebraicClass]

    @property
    def ok(self) -> bool:
        return self.match and self.p_at_one_zero and self.p_class is not None and self.p_class.is_paper_salem

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "P_formula": list(self.P_formula.coeffs),
            "P_numerator": list(self.P_numerator.coeffs) if self.P_numerator is not None else None,
            "match": self.match,
            "P(1)=0": self.p_at_one_zero,
            "class": self.p_class.to_json() if self.p_class else None,
        }


def floyd_relation_check(cert: StructureCertificate, F_n: RatFunc, n: int) -> FloydVerdict:
    """Compare t^(n+1) P_inf - reverse(P_inf) with the numerator P of
    F_n = (t-1) P / ((t^n - 1) Q_inf)."""
    if cert.P_inf is None:
        raise PreconditionError("certificate has no P_inf")
    Pi = cert.P_inf
    formula = IntPoly.monomial(n + 1) * Pi - reciprocal_poly(Pi)
    scaled = F_n * RatFunc(IntPoly.monomial(n) - ONE, ONE) * RatFunc(cert.Q_inf, IntPoly([-1, 1]))
    numerator = scaled.as_poly() if scaled.is_polynomial() else None
    match = numerator is not None and (numerator == formula or numerator == -formula)
    p_class = None
    if formula.lc in (1, -1) and formula[0] != 0:
        p_class = classify(formula)
    return FloydVerdict(n, formula, numerator, match, formula(1) == 0, p_class)


# -- ridge pair differences ------------------------------------------------

def _ridge_F_part(h: RidgeDescriptor) -> RatFunc:
    k1, k2, n, l1, l2 = h.type
    out = RatFunc(1, qint(2) * qint(n))
    for a, b in ((k1, k2), (l1, l2)):
        M = CoxeterMatrix.triangle(a, b, n)
        if finite_type(M) is None:
            raise NotAdmissible(f"vertex triple ({a},{b},{n}) of {h} is not of finite type")
        out = out - RatFunc(1, growth_poly_finite(M))
    return out


def ridge_pair_difference(h1: RidgeDescriptor, h2: RidgeDescriptor) -> RatFunc:
    """1/f_1 - 1/f_2 for polyhedra differing only in the label of one ridge."""
    if h1.with_label(0).type != h2.with_label(0).type and h1.with_label(0).type != h2.with_label(0).type[::-1]:
        raise NotAdmissible(f"{h1} and {h2} differ outside the middle label")
    if not h1.n < h2.n:
        raise NotAdmissible(f"middle labels must increase: {h1.n} -> {h2.n}")
    return substitute_inverse(_ridge_F_part(h1) - _ridge_F_part(h2))


def ideal_limit_difference(n: int) -> RatFunc:
    """1/f_n - 1/f_inf = t^n/(1 - t^n) ((1 - t)/(1 + t))^2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    one_minus_tn = ONE - IntPoly.monomial(n)
    return RatFunc(IntPoly.monomial(n), one_minus_tn) * RatFunc(ONE - T, ONE + T) ** 2


def vertex_derivative_at_one(v_type) -> Fraction:
    """d/dt of the vertex term at t = 1 for a finite triangle group.

    v_type is a triple of labels or a rank-3 CoxeterMatrix.
    """
    M = v_type if isinstance(v_type, CoxeterMatrix) else CoxeterMatrix.triangle(*v_type)
    if M.rank != 3:
        raise ValueError("vertex type must be a triangle group")
    ft = finite_type(M)
    if ft is None:
        raise ValueError(f"triangle group {v_type} is not finite")
    return _vertex_term(ft.exponents).derivative_at(1)


@dataclass
class DerivativeVerdict:
    n: int
    dF_n: Fraction
    dF_inf: Fraction
    vertex_sum: Fraction

    @property
    def difference(self) -> Fraction:
        return self.dF_n - self.dF_inf

    @property
    def difference_ok(self) -> bool:
        return self.difference == Fraction(1, 4 * self.n)

    @property
    def vertex_sum_ok(self) -> bool:
        return self.vertex_sum == self.dF_n

    @property
    def negative(self) -> bool:
        return self.dF_n < 0

    @property
    def ok(self) -> bool:
        return self.difference_ok and self.vertex_sum_ok and self.negative


def derivative_identity_check(P_n: CombPolyhedron, P_inf: CombPolyhedron, n: int) -> DerivativeVerdict:
    F_n = polyhedral_growth(P_n).F
    F_inf = polyhedral_growth(P_inf).F
    vs = Fraction(1, 2) + sum(vertex_derivative_at_one(vertex_triangle(P_n, v)) for v in P_n.vertices)
    return DerivativeVerdict(n, F_n.derivative_at(1), F_inf.derivative_at(1), vs)


# -- sweeps ---------------------------------------------------------------

@dataclass
class SweepRow:
    n: Optional[int]          # None for the contracted limit
    tau: IsolatingInterval
    tau_class: AlgebraicClass

    def to_json(self, digits: int) -> dict:
        return {
            "n": "inf" if self.n is None else self.n,
            "tau": self.tau.to_json(digits),
            "tau_decimal": self.tau.decimal(digits),
            "class": self.tau_class.to_json(),
        }


@dataclass
class SweepTable:
    rows: list[SweepRow]
    limit: SweepRow
    monotone: bool
    below_limit: bool
    members_salem: bool
    limit_pisot: bool

    @property
    def ok(self) -> bool:
        return self.monotone and self.below_limit and self.members_salem and self.limit_pisot

    def to_json(self, digits: int = 10) -> dict:
        return {
            "rows": [r.to_json(digits) for r in self.rows + [self.limit]],
            "monotone": self.monotone,
            "below_limit": self.below_limit,
            "members_salem": self.members_salem,
            "limit_pisot": self.limit_pisot,
        }

    def text(self, digits: int = 10) -> str:
        width = digits + 4
        lines = [f"{'n':>4}  {'tau':<{width}}  class"]
        for r in self.rows + [self.limit]:
            label = "inf" if r.n is None else str(r.n)
            lines.append(f"{label:>4}  {r.tau.decimal(digits):<{width}}  {r.tau_class.describe()}")
        lines.append(
            f"monotone={str(self.monotone).lower()} below_limit={str(self.below_limit).lower()} "
            f"members_salem={str(self.members_salem).lower()} limit_pisot={str(self.limit_pisot).lower()}"
        )
        return "\n".join(lines)


def _sweep_member(args) -> SweepRow:
    P, e, n, digits = args
    Q = P.relabel(e, n)
    r = ridge_at(Q, e)
    if r is None or r.type != (2, 2, n, 2, 2):
        raise PreconditionError(f"edge {e[0]}-{e[1]} is not a <2,2,n,2,2> ridge at n={n}")
    rep = polyhedral_growth(Q, digits)
    return SweepRow(n, rep.tau, rep.tau_class)


def deformation_sweep(P: CombPolyhedron, e, n_from: int, n_to: int, digits: int = 10, jobs: int = 1) -> SweepTable:
    """tau_n along one ridge for n in [n_from, n_to], plus the contracted limit."""
    if n_from < 2 or n_to < n_from:
        raise ValueError("need 2 <= n_from <= n_to")
    e = edge_key(*e)
    tasks = [(P, e, n, digits + 2) for n in range(n_from, n_to + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_member, tasks))
    else:
        rows = [_sweep_member(t) for t in tasks]
    limit_poly = contract_ridge(P.relabel(e, n_from), e)
    lim = polyhedral_growth(limit_poly, digits + 2)
    limit = SweepRow(None, lim.tau, lim.tau_class)

    chain = [r.tau for r in rows] + [limit.tau]
    monotone = True
    below = True
    for i in range(len(chain) - 1):
        a, b, less = chain[i].separate(chain[i + 1])
        chain[i], chain[i + 1] = a, b
        if not less:
            if i == len(chain) - 2:
                below = False
            else:
                monotone = False
    for i, r in enumerate(rows):
        r.tau = chain[i]
    limit.tau = chain[-1]
    return SweepTable(
        rows=rows,
        limit=limit,
        monotone=monotone,
        below_limit=below,
        members_salem=all(r.tau_class.is_paper_salem for r in rows),
        limit_pisot=limit.tau_class.kind == "Pisot" and not limit.tau_class.paper_salem_vacuous,
    )


def conjugate_pair_modulus_sq(cubic: IntPoly, tau: IsolatingInterval) -> tuple[Fraction, Fraction]:
    """Bounds on |z|^2 for the complex pair of a monic cubic with real root tau.

    The product of all roots is -c0, so |z|^2 = -c0 / tau.
    """
    if cubic.degree != 3 or cubic.lc != 1:
        raise ValueError("expected a monic cubic")
    prod = Fraction(-cubic[0])
    lo, hi = prod / tau.hi, prod / tau.lo
    return (lo, hi) if lo <= hi else (hi, lo)
