"""Andreev's conditions m0-m5 for angle-labelled combinatorial polyhedra.

Angles are pi/m, so every inequality is checked on sums of 1/m with exact
rationals.  A k-circuit is a cyclic sequence of faces, consecutive ones
adjacent, all others non-adjacent, with no three of them sharing a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import IDEAL, CombPolyhedron, require_valid


@dataclass
class ConditionResult:
    name: str
    passed: bool
    checked: int = 0
    witnesses: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "witnesses": self.witnesses}


@dataclass
class AndreevReport:
    conditions: dict[str, ConditionResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, c in self.conditions.items() if not c.passed]

    def to_json(self) -> dict:
        return {"ok": self.ok, "failed": self.failed, "conditions": {k: c.to_json() for k, c in self.conditions.items()}}

    def summary(self) -> str:
        lines = []
        for k, c in self.conditions.items():
            status = "pass" if c.passed else "FAIL"
            line = f"{k}: {status} ({c.checked} checked)"
            if c.witnesses:
                line += "; witness " + _fmt_witness(c.witnesses[0])
            lines.append(line)
        return "\n".join(lines)


def _fmt_witness(w: dict) -> str:
    parts = []
    for k, v in w.items():
        parts.append(f"{k}={v}")
    return ", ".join(parts)


def _no_three_share_vertex(P: CombPolyhedron, faces) -> bool:
    fv = P.face_vertex_sets()
    return all(not (fv[a] & fv[b] & fv[c]) for a, b, c in combinations(faces, 3))


def three_circuits(P: CombPolyhedron) -> list[tuple[str, str, str]]:
    nb = P.face_neighbours()
    order = {f: i for i, f in enumerate(P.faces)}
    out = []
    for a in P.faces:
        for b in nb[a]:
            if order[b] <= order[a]:
                continue
            for c in nb[a] & nb[b]:
                if order[c] <= order[b]:
                    continue
                if _no_three_share_vertex(P, (a, b, c)):
                    out.append((a, b, c))
    return sorted(out, key=lambda t: [order[x] for x in t])


def four_circuits(P: CombPolyhedron) -> list[tuple[str, str, str, str]]:
    """Cycles (a, b, c, d) with a !~ c and b !~ d, each face set reported once."""
    nb = P.face_neighbours()
    order = {f: i for i, f in enumerate(P.faces)}
    seen = set()
    out = []
    for a, c in combinations(P.faces, 2):
        if c in nb[a]:
            continue
        common = sorted(nb[a] & nb[c], key=order.__getitem__)
        for b, d in combinations(common, 2):
            if d in nb[b]:
                continue
            key = frozenset((a, b, c, d))
            if key in seen or not _no_three_share_vertex(P, (a, b, c, d)):
                continue
            seen.add(key)
            out.append((a, b, c, d))
    return out


def brute_force_circuits(P: CombPolyhedron, k: int) -> set[frozenset[str]]:
    """Literal definition over all k-tuples of faces; slow, used as an oracle."""
    from itertools import permutations

    fv = P.face_vertex_sets()
    out = set()
    for combo in combinations(P.faces, k):
        if any(fv[a] & fv[b] & fv[c] for a, b, c in combinations(combo, 3)):
            continue
        first = combo[0]
        for rest in permutations(combo[1:]):
            cyc = (first,) + rest
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    consecutive = j == i + 1 or (i == 0 and j == k - 1)
                    if P.adjacent(cyc[i], cyc[j]) != consecutive:
                        ok = False
            if ok:
                out.add(frozenset(combo))
                break
    return out


def _inv(m: int) -> Fraction:
    return Fraction(1, m)


def _triangular_prism_bases(P: CombPolyhedron):
    if len(P.faces) != 5:
        return None
    sizes = sorted(len(c) for c in P.faces.values())
    if sizes != [3, 3, 4, 4, 4]:
        return None
    return [f for f, c in P.faces.items() if len(c) == 3]


def andreev_check(P: CombPolyhedron, max_witnesses: int = 5) -> AndreevReport:
    require_valid(P)
    res: dict[str, ConditionResult] = {}

    m0 = ConditionResult("m0", True, len(P.angles))
    for e, m in P.angles.items():
        if m < 2:
            m0.passed = False
            m0.witnesses.append({"edge": f"{e[0]}-{e[1]}", "label": m})
    res["m0"] = m0

    m1 = ConditionResult("m1", True)
    for v in P.vertices:
        labels = P.vertex_labels(v)
        m1.checked += 1
        if len(labels) == 3:
            good = sum(map(_inv, labels)) >= 1
        else:
            good = len(labels) == 4 and all(m == 2 for m in labels)
        if not good:
            m1.passed = False
            m1.witnesses.append({"vertex": v, "labels": labels})
    res["m1"] = m1

    m2 = ConditionResult("m2", True)
    for a, b, c in three_circuits(P):
        m2.checked += 1
        labels = [P.shared_label(a, b), P.shared_label(b, c), P.shared_label(c, a)]
        s = sum(map(_inv, labels))
        if not s < 1:
            m2.passed = False
            m2.witnesses.append({"circuit": [a, b, c], "labels": labels, "sum_over_pi": str(s)})
    res["m2"] = m2

    m3 = ConditionResult("m3", True)
    for cyc in four_circuits(P):
        m3.checked += 1
        labels = [P.shared_label(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
        s = sum(map(_inv, labels))
        if not s < 2:
            m3.passed = False
            m3.witnesses.append({"circuit": list(cyc), "labels": labels, "sum_over_pi": str(s)})
    res["m3"] = m3

    m4 = ConditionResult("m4", True)
    bases = _triangular_prism_bases(P)
    if bases:
        m4.checked = 1
        base_edges = []
        for f in bases:
            c = P.faces[f]
            base_edges += [(c[i], c[(i + 1) % 3]) for i in range(3)]
        labels = [P.angles[tuple(sorted(e))] for e in base_edges]
        s = sum(map(_inv, labels))
        if not s < 3:
            m4.passed = False
            m4.witnesses.append({"bases": bases, "labels": labels, "sum_over_pi": str(s)})
    res["m4"] = m4

    m5 = ConditionResult("m5", True)
    fv = P.face_vertex_sets()
    nb = P.face_neighbours()
    ideal = set(P.ideal_vertices())
    for a, c in combinations(P.faces, 2):
        if c in nb[a]:
            continue
        shared = (fv[a] & fv[c]) & ideal
        if not shared:
            continue
        for b in sorted(nb[a] & nb[c], key=list(P.faces).index):
            if not any(v not in fv[b] for v in shared):
                continue
            m5.checked += 1
            labels = [P.shared_label(a, b), P.shared_label(b, c)]
            s = sum(map(_inv, labels))
            if not s < 1:
                m5.passed = False
                m5.witnesses.append({"faces": [a, b, c], "vertex": sorted(shared)[0], "labels": labels, "sum_over_pi": str(s)})
    res["m5"] = m5

    for r in res.values():
        del r.witnesses[max_witnesses:]
    return AndreevReport(res)
