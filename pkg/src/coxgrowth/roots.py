"""Certified real-root isolation and Salem/Pisot classification.

No floating point is used anywhere on the certified path: real roots are
isolated with Sturm sequences and refined by bisection over rationals,
roots inside the unit disc are counted with the Schur-Cohn Hermitian form,
and unit-circle questions are turned into real-interval questions through
the trace polynomial y = t + 1/t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    InternalInconsistency,
    NotFound,
    NotGrowthFunction,
    NotMonic,
    PreconditionError,
    ZeroRoot,
)
from .polyalg import (
    IntPoly,
    RatFunc,
    cyclotomic,
    divides,
    exact_div,
    format_coeffs,
    poly_gcd,
    pseudo_rem,
    reciprocal_poly,
    squarefree_part,
)

SALEM = "Salem"
PISOT = "Pisot"
CYCLOTOMIC_ONLY = "CyclotomicOnly"
NEITHER = "Neither"

_INF = math.inf


# -- Sturm machinery --------------------------------------------------------

def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of a squarefree polynomial, each member scaled by a positive constant."""
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = pseudo_rem(a, b)
        if r.is_zero():
            break
        delta = a.degree - b.degree
        # prem = lc(b)^(delta+1) * rem; keep only the sign of that factor
        if b.lc < 0 and (delta + 1) % 2 == 1:
            r = -r
        r = -r
        c = r.content()
        seq.append(IntPoly([x // c for x in r.coeffs]))
    return seq


def _sign_at(p: IntPoly, x) -> int:
    if x == _INF:
        return (p.lc > 0) - (p.lc < 0)
    if x == -_INF:
        s = (p.lc > 0) - (p.lc < 0)
        return s if p.degree % 2 == 0 else -s
    return p.sign_at(x)


def _variations(seq: list[IntPoly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _count(seq: list[IntPoly], lo, hi) -> int:
    return _variations(seq, lo) - _variations(seq, hi)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi]; lo/hi may be +-inf."""
    p = IntPoly.coerce(p)
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    if p.degree == 0:
        return 0
    return _count(sturm_sequence(squarefree_part(p)), _rat(lo), _rat(hi))


def _rat(x):
    return x if x in (_INF, -_INF) else Fraction(x)


def cauchy_bound(p: IntPoly) -> Fraction:
    """All complex roots satisfy |z| < bound."""
    lc = abs(p.lc)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lc)


# -- isolating intervals ----------------------------------------------------

@dataclass(frozen=True)
class IsolatingInterval:
    """A real algebraic number as a rational interval (lo, hi].

    `poly` has exactly one real root in (lo, hi]; if that root is rational
    it is stored in `exact`.
    """

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None
    poly: Optional[IntPoly] = field(default=None, compare=False, repr=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo < x <= self.hi

    def refine(self, width) -> "IsolatingInterval":
        """Bisect until hi - lo < width."""
        if self.exact is not None or self.width < width:
            return self
        if self.poly is None:
            raise ValueError("interval carries no polynomial to refine against")
        lo, hi, exact = _bisect(self.poly, self.lo, self.hi, lambda a, b: b - a < width)
        return IsolatingInterval(lo, hi, exact, self.poly)

    def separate(self, other: "IsolatingInterval", max_rounds: int = 1000):
        """Refine both until disjoint; returns (self', other', self < other)."""
        a, b = self, other
        for _ in range(max_rounds):
            if a.exact is not None and b.exact is not None and a.exact == b.exact:
                raise InternalInconsistency(f"equal roots {a.exact}")
            if a.hi <= b.lo or (b.exact is not None and a.hi < b.exact) or (
                a.exact is not None and a.exact <= b.lo
            ):
                return a, b, True
            if b.hi <= a.lo or (a.exact is not None and b.hi < a.exact) or (
                b.exact is not None and b.exact <= a.lo
            ):
                return a, b, False
            a = a.refine(a.width / 2) if a.exact is None else a
            b = b.refine(b.width / 2) if b.exact is None else b
        raise InternalInconsistency(f"intervals not separated after {max_rounds} rounds")

    def less_than(self, other: "IsolatingInterval") -> bool:
        return self.separate(other)[2]

    def decimal(self, digits: int) -> str:
        """Truncated decimal expansion in which every printed digit is certified."""
        if self.exact is not None:
            return _truncate(self.exact, digits, exact=True)
        iv = self
        scale = 10**digits
        for _ in range(4 * digits + 200):
            if math.floor(iv.lo * scale) == math.floor(iv.hi * scale) and iv.hi * scale != math.floor(iv.hi * scale):
                return _truncate(iv.lo, digits)
            if iv.poly is None:
                break
            iv = iv.refine(iv.width / 2)
        return _truncate(iv.midpoint, digits)

    def to_json(self, digits: int = 20) -> dict:
        out = {"lo": _truncate(self.lo, digits), "hi": _ceil_str(self.hi, digits)}
        if self.exact is not None:
            out["exact"] = str(self.exact)
        return out


def _truncate(x: Fraction, digits: int, exact: bool = False) -> str:
    x = Fraction(x)
    if exact and x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = math.floor(x * 10**digits)
    whole, frac = divmod(scaled, 10**digits)
    s = f"{sign}{whole}.{frac:0{digits}d}" if digits > 0 else f"{sign}{whole}"
    if exact and x * 10**digits == scaled:
        s = s.rstrip("0").rstrip(".")
    return s


def _ceil_str(x: Fraction, digits: int) -> str:
    x = Fraction(x)
    scaled = math.ceil(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _bisect(p: IntPoly, lo: Fraction, hi: Fraction, done) -> tuple[Fraction, Fraction, Optional[Fraction]]:
    """Shrink (lo, hi] around the single root of squarefree p inside it."""
    seq = sturm_sequence(p)
    while not done(lo, hi):
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            return lo, hi, mid
        if _count(seq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if p.sign_at(hi) == 0:
        return lo, hi, hi
    return lo, hi, None


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_in(p: IntPoly, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
    """The rational root of p in (lo, hi], if any; denominators divide lc(p)."""
    for q in _divisors(p.lc):
        first = math.floor(lo * q) + 1
        last = math.floor(hi * q)
        if last - first > 64:
            continue
        for num in range(first, last + 1):
            x = Fraction(num, q)
            if p.sign_at(x) == 0:
                return x
    return None


def _smallest_root(s: IntPoly, lo: Fraction, hi: Fraction, include_hi: bool):
    """Isolate the smallest root of squarefree s in (lo, hi] (or (lo, hi))."""
    seq = sturm_sequence(s)

    def count(a, b):
        n = _count(seq, a, b)
        if b == hi and not include_hi and s.sign_at(hi) == 0:
            n -= 1
        return n

    if count(lo, hi) == 0:
        raise NotFound(f"{s} has no root in ({lo}, {hi}{']' if include_hi else ')'}")
    a, b = lo, hi
    while count(a, b) > 1:
        mid = (a + b) / 2
        if count(a, mid) >= 1:
            b = mid
        else:
            a = mid
    if b == hi and not include_hi:
        # the unique root sits strictly below hi; pull hi inside
        mid = (a + b) / 2
        while count(a, mid) == 0:
            a = mid
            mid = (a + b) / 2
        b = mid
    return a, b


def _finish(s: IntPoly, a: Fraction, b: Fraction, width) -> IsolatingInterval:
    lc = abs(s.lc)
    lo, hi, exact = _bisect(s, a, b, lambda x, y: y - x < min(width, Fraction(1, 4 * lc * lc)))
    if exact is None:
        exact = _rational_root_in(s, lo, hi)
    return IsolatingInterval(lo, hi, exact, s)


def smallest_root_in_unit_interval(p: IntPoly, digits: int = 10) -> IsolatingInterval:
    """Isolate the smallest real root of p in the open interval (0, 1)."""
    p = IntPoly.coerce(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    s = squarefree_part(p)
    a, b = _smallest_root(s, Fraction(0), Fraction(1), include_hi=False)
    return _finish(s, a, b, Fraction(1, 10**digits))


def real_roots(p: IntPoly, lo=-_INF, hi=_INF, width=Fraction(1, 10**6)) -> list[IsolatingInterval]:
    """All distinct real roots of p in (lo, hi], in increasing order."""
    s = squarefree_part(IntPoly.coerce(p))
    if s.degree < 1:
        return []
    bound = cauchy_bound(s)
    a = max(Fraction(-bound), _rat(lo)) if lo != -_INF else -bound
    b = min(bound, _rat(hi)) if hi != _INF else bound
    out = []
    while True:
        try:
            x, y = _smallest_root(s, a, b, include_hi=True)
        except NotFound:
            return out
        iv = _finish(s, x, y, width)
        out.append(iv)
        a = iv.exact if iv.exact is not None else iv.hi


def growth_rate(f: RatFunc, digits: int = 10) -> IsolatingInterval:
    """tau = 1/r for the least positive pole r of the growth function f.

    The returned interval is for tau itself (its polynomial is the
    reversed squarefree denominator) and is narrower than 10^-digits.
    """
    f = RatFunc.coerce(f)
    if f.den[0] == 0 or f.num[0] != f.den[0]:
        raise NotGrowthFunction(f"f(0) != 1 for {f}")
    s = squarefree_part(f.den)
    try:
        a, b = _smallest_root(s, Fraction(0), Fraction(1), include_hi=False)
    except NotFound as exc:
        raise NotFound(f"growth function has no pole in (0, 1): {f}") from exc
    r = _finish(s, a, b, Fraction(1, 2))
    rev = s.reverse().primitive()
    if r.exact is not None:
        tau = 1 / r.exact
        delta = Fraction(1, 10**digits)
        while sturm_count(rev, tau - delta, tau) != 1:
            delta /= 2
        return IsolatingInterval(tau - delta, tau, tau, rev)
    lo, hi = r.lo, r.hi
    target = Fraction(1, 10**digits)
    seq = sturm_sequence(s)
    while lo == 0 or 1 / lo - 1 / hi >= target:
        mid = (lo + hi) / 2
        if _count(seq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return IsolatingInterval(1 / hi, 1 / lo, None, rev)


# -- cyclotomic stripping ---------------------------------------------------

def totient(k: int) -> int:
    result, n, p = k, k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def strip_cyclotomic(p: IntPoly) -> tuple[list[tuple[int, int]], IntPoly]:
    """Divide out every cyclotomic factor; returns ([(k, multiplicity)], remainder)."""
    p = IntPoly.coerce(p)
    if p.is_zero():
        raise ValueError("strip_cyclotomic of the zero polynomial")
    rem = p
    factors = []
    # phi(k) <= d forces k < 6d for any d of practical size
    for k in range(1, 6 * max(p.degree, 1) + 7):
        if totient(k) > rem.degree:
            continue
        phi_k = cyclotomic(k)
        mult = 0
        while rem.degree >= phi_k.degree and divides(phi_k, rem):
            rem = exact_div(rem, phi_k)
            mult += 1
        if mult:
            factors.append((k, mult))
    return factors, rem


# -- unit disc counting -----------------------------------------------------

def _charpoly(m: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(xI - M), ascending coefficients (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(m[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(m[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise InternalInconsistency("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -tr // k
    return coeffs


def schur_cohn_matrix(p: IntPoly) -> list[list[int]]:
    """A^T A - B^T B with A, B the lower-triangular Toeplitz matrices of p and its reversal."""
    n = p.degree
    a = p.coeffs
    rev = a[::-1]
    A = [[a[i - j] if i >= j else 0 for j in range(n)] for i in range(n)]
    B = [[rev[i - j] if i >= j else 0 for j in range(n)] for i in range(n)]
    return [
        [sum(A[k][i] * A[k][j] - B[k][i] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def unit_circle_free(p: IntPoly) -> bool:
    """Certificate: gcd(p, reversed p) = 1 rules out roots on |z| = 1."""
    return poly_gcd(p, p.reverse()).degree == 0


def schur_cohn_inside(p: IntPoly) -> int:
    """Number of roots of p in the open unit disc, counted with multiplicity.

    Requires gcd(p, reversed p) = 1, which makes the Schur-Cohn form
    nonsingular; its negative inertia is then the count. The inertia is
    read off the characteristic polynomial with Descartes' rule, which is
    exact for real-rooted polynomials.
    """
    p = IntPoly.coerce(p)
    if p.degree < 1:
        return 0
    if not unit_circle_free(p):
        raise PreconditionError(f"{p} shares a root with its reciprocal")
    chi = _charpoly(schur_cohn_matrix(p))
    if chi[0] == 0:
        raise InternalInconsistency(f"singular Schur-Cohn form for {p}")
    flipped = [c if k % 2 == 0 else -c for k, c in enumerate(chi)]
    signs = [c > 0 for c in flipped if c]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def trace_polynomial(r: IntPoly) -> IntPoly:
    """T with r(t) = t^k T(t + 1/t), for reciprocal r of even degree 2k."""
    if not r.is_reciprocal() or r.degree % 2:
        raise ValueError(f"{r} is not reciprocal of even degree")
    k = r.degree // 2
    y = IntPoly([0, 1])
    v_prev, v = IntPoly([2]), y
    out = IntPoly([r[k]])
    for j in range(1, k + 1):
        out = out + r[k + j] * v
        v_prev, v = v, y * v - v_prev
    return out


# -- classification ---------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicClass:
    """Verdict on the non-cyclotomic part of an integer polynomial.

    `factor` is the remainder after stripping cyclotomics (None only for
    CyclotomicOnly). `paper_salem_vacuous` marks a quadratic reciprocal unit
    such as 4 + sqrt(15): Pisot here, yet it meets the Salem definition with
    no unit-circle conjugates at all.
    """

    kind: str
    factor: Optional[IntPoly]
    cyclotomic_factors: tuple[tuple[int, int], ...] = ()
    paper_salem_vacuous: bool = False

    @property
    def is_paper_salem(self) -> bool:
        return self.kind == SALEM or self.paper_salem_vacuous

    def describe(self) -> str:
        if self.paper_salem_vacuous:
            return f"{self.kind} (quadratic unit; Salem only vacuously)"
        return self.kind

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "factor": list(self.factor.coeffs) if self.factor is not None else None,
            "cyclotomic": [list(kv) for kv in self.cyclotomic_factors],
            "paper_salem_vacuous": self.paper_salem_vacuous,
        }


def _is_salem_factor(r: IntPoly) -> bool:
    if r.degree < 4 or r.degree % 2 or not r.is_reciprocal():
        return False
    tr = trace_polynomial(r)
    if poly_gcd(tr, tr.derivative()).degree > 0:
        return False
    if tr.sign_at(2) == 0 or tr.sign_at(-2) == 0:
        return False
    k = tr.degree
    return sturm_count(tr, 2, _INF) == 1 and sturm_count(tr, -2, 2) == k - 1


def classify(p: IntPoly) -> AlgebraicClass:
    """Salem / Pisot / CyclotomicOnly / Neither for a monic integer polynomial."""
    p = IntPoly.coerce(p)
    if p.is_zero():
        raise ValueError("classify of the zero polynomial")
    if p.lc < 0:
        p = -p
    if p[0] == 0:
        raise ZeroRoot(f"{p} vanishes at 0")
    if p.lc != 1:
        raise NotMonic(f"{p} is not monic")
    cyc, r = strip_cyclotomic(p)
    cyc = tuple(cyc)
    if r.degree == 0:
        return AlgebraicClass(CYCLOTOMIC_ONLY, None, cyc)
    if _is_salem_factor(r):
        return AlgebraicClass(SALEM, r, cyc)
    if r.degree == 2 and r.is_reciprocal():
        # t^2 - c t + 1 with |c| > 2 (|c| <= 2 would be cyclotomic)
        c = -r[1]
        if c > 2:
            return AlgebraicClass(PISOT, r, cyc, paper_salem_vacuous=True)
        return AlgebraicClass(NEITHER, r, cyc)
    if unit_circle_free(r) and sturm_count(r, 1, _INF) == 1:
        if schur_cohn_inside(r) == r.degree - 1:
            return AlgebraicClass(PISOT, r, cyc)
    return AlgebraicClass(NEITHER, r, cyc)


@dataclass
class FloydRow:
    m: int
    quotient: Optional[IntPoly]
    verdict: Optional[AlgebraicClass]
    error: Optional[str] = None

    @property
    def cyclotomic_times_salem(self) -> bool:
        return self.verdict is not None and self.verdict.is_paper_salem


@dataclass
class FloydReport:
    p: IntPoly
    p_class: AlgebraicClass
    rows: list[FloydRow]

    @property
    def all_salem(self) -> bool:
        return all(r.cyclotomic_times_salem for r in self.rows)


def floyd_family_check(p: IntPoly, m_range: Iterable[int]) -> FloydReport:
    """Classify (t^m P - P~)/(t - 1) over a range of m, and P itself."""
    p = IntPoly.coerce(p)
    if p.lc != 1:
        raise PreconditionError(f"{p} is not monic")
    if p[0] == 0:
        raise PreconditionError("P(0) must be nonzero")
    if not p(1) < 0:
        raise PreconditionError(f"P(1) = {p(1)} is not negative")
    if p.is_reciprocal():
        raise PreconditionError(f"{p} is reciprocal")
    rev = reciprocal_poly(p)
    t_minus_1 = IntPoly([-1, 1])
    rows = []
    for m in m_range:
        top = IntPoly.monomial(m) * p - rev
        try:
            q = exact_div(top, t_minus_1)
        except ArithmeticError:
            rows.append(FloydRow(m, None, None, "t - 1 does not divide t^m P - P~"))
            continue
        rows.append(FloydRow(m, q, classify(q)))
    return FloydReport(p, classify(p), rows)


def class_report(verdict: AlgebraicClass, tau: Optional[IsolatingInterval] = None, digits: int = 20) -> dict:
    out = verdict.to_json()
    if tau is not None:
        out["tau_interval"] = [_truncate(tau.lo, digits), _ceil_str(tau.hi, digits)]
        out["exact"] = str(tau.exact) if tau.exact is not None else None
    return out


__all__ = [
    "AlgebraicClass",
    "IsolatingInterval",
    "classify",
    "class_report",
    "floyd_family_check",
    "format_coeffs",
    "growth_rate",
    "real_roots",
    "schur_cohn_inside",
    "smallest_root_in_unit_interval",
    "strip_cyclotomic",
    "sturm_count",
    "trace_polynomial",
]
