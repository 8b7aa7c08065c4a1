"""Coxeter systems given by Coxeter matrices.

Finite-type recognition against the classification, growth polynomials of
finite groups from their exponents, Steinberg's formula for the growth
function of an arbitrary Coxeter system, and a breadth-first word-growth
oracle in the Tits representation with exact entries in Z[2cos(pi/L)].
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from .errors import NotFinite, OracleTooLarge
from .polyalg import ONE, IntPoly, RatFunc, exact_div, poly_lcm, product, qint, substitute_inverse

INF = math.inf


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of labels; diagonal 1, off-diagonal int >= 2 or INF."""

    entries: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if i == j:
                    if m != 1:
                        raise ValueError(f"diagonal entry ({i},{i}) must be 1, got {m}")
                elif m != INF and (not isinstance(m, int) or m < 2):
                    raise ValueError(f"entry ({i},{j}) must be an integer >= 2 or inf, got {m}")
                if self.entries[j][i] != m:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")

    @classmethod
    def from_labels(cls, rank: int, labels: Iterable[tuple[int, int, object]] = ()) -> "CoxeterMatrix":
        """Pairs not listed default to 2 (commuting generators)."""
        m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for i, j, lab in labels:
            lab = _parse_label(lab)
            m[i][j] = m[j][i] = lab
        return cls(tuple(tuple(r) for r in m))

    @classmethod
    def triangle(cls, a, b, c) -> "CoxeterMatrix":
        """Rank 3 with m01 = a, m12 = b, m02 = c."""
        return cls.from_labels(3, [(0, 1, a), (1, 2, b), (0, 2, c)])

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def sub(self, idx: Sequence[int]) -> "CoxeterMatrix":
        return CoxeterMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def permute(self, perm: Sequence[int]) -> "CoxeterMatrix":
        return self.sub(perm)

    def to_json(self) -> dict:
        labels = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.entries[i][j]
                if m != 2:
                    labels.append([i, j, "inf" if m == INF else m])
        return {"rank": self.rank, "labels": labels}

    @classmethod
    def from_json(cls, data) -> "CoxeterMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_labels(int(data["rank"]), [tuple(x) for x in data.get("labels", [])])


def _parse_label(lab):
    if lab in ("inf", "infinity", "oo") or lab == INF:
        return INF
    return int(lab)


# -- finite type recognition -------------------------------------------------

_EXPONENTS_EXCEPTIONAL = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
}


@dataclass(frozen=True)
class Component:
    family: str          # "A", "B", "D", "E", "F", "H" or "I2"
    rank: int
    nodes: tuple[int, ...]
    param: Optional[int] = None   # m for I2(m)

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.param})"
        return f"{self.family}{self.rank}"

    @property
    def exponents(self) -> tuple[int, ...]:
        n, fam = self.rank, self.family
        if fam == "A":
            return tuple(range(1, n + 1))
        if fam == "B":
            return tuple(range(1, 2 * n, 2))
        if fam == "D":
            return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        if fam == "I2":
            return (1, self.param - 1)
        return _EXPONENTS_EXCEPTIONAL[(fam, n)]


@dataclass(frozen=True)
class FiniteType:
    components: tuple[Component, ...]

    @property
    def name(self) -> str:
        return " x ".join(c.name for c in self.components) if self.components else "trivial"

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(e for c in self.components for e in c.exponents))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(c.name for c in self.components))

    def __str__(self):
        return self.name


def _components(M: CoxeterMatrix) -> list[list[int]]:
    n = M.rank
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(n):
                if v not in seen and v != u and M[u, v] != 2:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _classify_component(M: CoxeterMatrix, nodes: list[int]) -> Optional[Component]:
    r = len(nodes)
    if r == 1:
        return Component("A", 1, tuple(nodes))
    edges = [(u, v, M[u, v]) for i, u in enumerate(nodes) for v in nodes[i + 1:] if M[u, v] != 2]
    if any(m == INF for _, _, m in edges):
        return None
    if r == 2:
        m = edges[0][2]
        if m == 3:
            return Component("A", 2, tuple(nodes))
        if m == 4:
            return Component("B", 2, tuple(nodes))
        return Component("I2", 2, tuple(nodes), param=m)
    if len(edges) != r - 1:
        return None  # a cycle: affine or hyperbolic
    heavy = [(u, v, m) for u, v, m in edges if m > 3]
    if any(m > 5 for _, _, m in heavy) or len(heavy) > 1:
        return None
    deg = {u: 0 for u in nodes}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    branch = [u for u in nodes if deg[u] >= 3]
    if any(deg[u] > 3 for u in nodes) or len(branch) > 1:
        return None
    if heavy:
        if branch:
            return None
        u, v, m = heavy[0]
        at_end = deg[u] == 1 or deg[v] == 1
        if m == 5:
            return Component("H", r, tuple(nodes)) if at_end and r in (3, 4) else None
        if at_end:
            return Component("B", r, tuple(nodes))
        return Component("F", 4, tuple(nodes)) if r == 4 else None
    if not branch:
        return Component("A", r, tuple(nodes))
    arms = sorted(_arm_lengths(branch[0], edges))
    if arms[0] == 1 and arms[1] == 1:
        return Component("D", r, tuple(nodes))
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return Component("E", r, tuple(nodes))
    return None


def _arm_lengths(center: int, edges) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v, _ in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    lengths = []
    for start in adj[center]:
        prev, cur, length = center, start, 1
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur, length = cur, nxt[0], length + 1
        lengths.append(length)
    return lengths


def finite_type(M: CoxeterMatrix) -> Optional[FiniteType]:
    """Decompose into irreducible finite types, or None if the group is infinite."""
    comps = []
    for nodes in _components(M):
        c = _classify_component(M, nodes)
        if c is None:
            return None
        comps.append(c)
    comps.sort(key=lambda c: (c.rank, c.name, c.nodes))
    return FiniteType(tuple(comps))


def growth_poly_finite(M: CoxeterMatrix) -> IntPoly:
    """Solomon's formula: product of [m_i + 1] over the exponents."""
    ft = finite_type(M)
    if ft is None:
        raise NotFinite("Coxeter group is infinite")
    return product([qint(e + 1) for e in ft.exponents])


def growth_poly_of_type(ft: FiniteType) -> IntPoly:
    return product([qint(e + 1) for e in ft.exponents])


# -- Steinberg ----------------------------------------------------------------

def finite_subsets(M: CoxeterMatrix) -> list[tuple[tuple[int, ...], IntPoly]]:
    """All T with W_T finite, paired with their growth polynomials.

    The family is closed under taking subsets, so a depth-first search that
    stops at the first infinite subset visits exactly the finite ones.
    """
    n = M.rank
    out: list[tuple[tuple[int, ...], IntPoly]] = [((), ONE)]

    def extend(subset: tuple[int, ...]):
        for s in range(subset[-1] + 1 if subset else 0, n):
            if any(M[s, u] == INF for u in subset):
                continue
            cand = subset + (s,)
            ft = finite_type(M.sub(cand))
            if ft is None:
                continue
            out.append((cand, growth_poly_of_type(ft)))
            extend(cand)

    extend(())
    return out


def steinberg_virgin(M: CoxeterMatrix) -> tuple[IntPoly, IntPoly]:
    """F(t) = 1/f(1/t) = sum (-1)^|T| / f_T(t) over the common denominator lcm f_T.

    Returns (numerator, lcm) without cancellation: the virgin form.
    """
    terms = finite_subsets(M)
    den = reduce(poly_lcm, (p for _, p in terms), ONE)
    num = IntPoly()
    for subset, p in terms:
        part = exact_div(den, p)
        num = num - part if len(subset) % 2 else num + part
    return num, den


def steinberg_F(M: CoxeterMatrix) -> RatFunc:
    num, den = steinberg_virgin(M)
    return RatFunc(num, den)


def steinberg_growth(M: CoxeterMatrix) -> RatFunc:
    """Growth function f(t) of the Coxeter system, canonicalized."""
    return RatFunc(1) / substitute_inverse(steinberg_F(M))


# -- Tits representation oracle ---------------------------------------------

class _CosRing:
    """Z[c] / (psi(c)) with c = 2cos(pi/L) and psi its minimal polynomial."""

    def __init__(self, L: int):
        from .polyalg import cyclotomic
        from .roots import trace_polynomial

        self.L = L
        self.psi = trace_polynomial(cyclotomic(2 * L)).primitive()
        if self.psi.lc != 1:
            raise ArithmeticError("minimal polynomial of 2cos(pi/L) must be monic")
        self.d = self.psi.degree
        self.zero = (0,) * self.d
        self.one = self.reduce(IntPoly([1]))

    def reduce(self, p: IntPoly) -> tuple[int, ...]:
        c = list(p.coeffs)
        psi = self.psi.coeffs
        d = self.d
        for k in range(len(c) - 1, d - 1, -1):
            a = c[k]
            if a:
                for j in range(d + 1):
                    c[k - d + j] -= a * psi[j]
        c = c[:d] + [0] * (d - len(c[:d]))
        return tuple(c)

    def two_cos(self, m: int) -> tuple[int, ...]:
        """2cos(pi/m) = V_{L/m}(c), V_0 = 2, V_1 = c, V_{k+1} = c V_k - V_{k-1}."""
        k = self.L // m
        c = IntPoly([0, 1])
        v_prev, v = IntPoly([2]), c
        if k == 0:
            return self.reduce(v_prev)
        for _ in range(k - 1):
            v_prev, v = v, c * v - v_prev
        return self.reduce(v)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        if not any(a) or not any(b):
            return self.zero
        prod = [0] * (2 * self.d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self.reduce(IntPoly(prod))


def tits_bfs_sphere_sizes(M: CoxeterMatrix, depth: int, max_elements: int = 500_000) -> list[int]:
    """a_0, ..., a_depth by breadth-first search in the Tits representation.

    Group elements are matrices over Z[2cos(pi/L)], L = lcm of the labels,
    and are de-duplicated by exact equality.
    """
    n = M.rank
    labels = [M[i, j] for i in range(n) for j in range(n) if i != j]
    if any(m == INF for m in labels):
        raise ValueError("the Tits oracle needs finite labels")
    L = reduce(math.lcm, labels, 2)
    R = _CosRing(L)
    coef = [[R.two_cos(M[i, j]) if i != j else None for j in range(n)] for i in range(n)]
    neg_one = tuple(-x for x in R.one)

    def right_mul(g, i):
        # columns of g*s_i: col_j + 2cos(pi/m_ij) col_i, and -col_i
        cols = list(zip(*g))
        ci = cols[i]
        new = []
        for j in range(n):
            if j == i:
                new.append(tuple(R.mul(neg_one, x) for x in ci))
            elif any(coef[i][j]):
                new.append(tuple(R.add(x, R.mul(coef[i][j], y)) for x, y in zip(cols[j], ci)))
            else:
                new.append(cols[j])
        return tuple(zip(*new))

    identity = tuple(tuple(R.one if i == j else R.zero for j in range(n)) for i in range(n))
    seen = {identity}
    sphere = [identity]
    sizes = [1]
    for _ in range(depth):
        nxt = []
        for g in sphere:
            for i in range(n):
                h = right_mul(g, i)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if len(seen) > max_elements:
            raise OracleTooLarge(f"more than {max_elements} elements enumerated")
        sizes.append(len(nxt))
        sphere = nxt
    return sizes
