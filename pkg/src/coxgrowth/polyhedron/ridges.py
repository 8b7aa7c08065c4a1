"""Ridges, their contraction to 4-valent ideal vertices, and the inverse insertion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..errors import AndreevFailure, InternalInconsistency, NotContractible, PreconditionError, ValidationError
from .andreev import andreev_check
from .core import COMPACT, IDEAL, CombPolyhedron, Edge, edge_key, require_valid, validate

RidgeType = tuple[int, int, int, int, int]


def canonical_type(k1: int, k2: int, n: int, l1: int, l2: int) -> RidgeType:
    """Least representative under k1<->k2, l1<->l2 and swapping the two endpoints."""
    reps = []
    for a in ((k1, k2), (k2, k1)):
        for b in ((l1, l2), (l2, l1)):
            reps.append((a[0], a[1], n, b[0], b[1]))
            reps.append((b[0], b[1], n, a[0], a[1]))
    return min(reps)


def type_symmetries(h: RidgeType) -> list[RidgeType]:
    k1, k2, n, l1, l2 = h
    out = []
    for a in ((k1, k2), (k2, k1)):
        for b in ((l1, l2), (l2, l1)):
            out.append((a[0], a[1], n, b[0], b[1]))
            out.append((b[0], b[1], n, a[0], a[1]))
    return out


@dataclass(frozen=True, order=True)
class RidgeDescriptor:
    type: RidgeType
    edge: Optional[Edge] = None

    @classmethod
    def of(cls, k1, k2, n, l1, l2, edge: Optional[Edge] = None) -> "RidgeDescriptor":
        return cls(canonical_type(k1, k2, n, l1, l2), edge)

    @property
    def n(self) -> int:
        return self.type[2]

    @property
    def k(self) -> tuple[int, int]:
        return self.type[0], self.type[1]

    @property
    def l(self) -> tuple[int, int]:
        return self.type[3], self.type[4]

    def with_label(self, n: int) -> "RidgeDescriptor":
        k1, k2, _, l1, l2 = self.type
        return RidgeDescriptor.of(k1, k2, n, l1, l2, self.edge)

    def __str__(self):
        s = "<" + ",".join(map(str, self.type)) + ">"
        if self.edge is not None:
            s += f" at {self.edge[0]}-{self.edge[1]}"
        return s

    def to_json(self) -> dict:
        return {"edge": f"{self.edge[0]}-{self.edge[1]}" if self.edge else None, "type": list(self.type)}


def _other_labels(P: CombPolyhedron, v: int, e: Edge) -> list[int]:
    return [P.angles[f] for f in P.incident_edges(v) if f != e]


def ridge_at(P: CombPolyhedron, e: Edge) -> Optional[RidgeDescriptor]:
    """The ridge descriptor of edge e, or None if e is not a ridge."""
    e = edge_key(*e)
    if e not in P.angles:
        return None
    u, w = e
    if P.valence(u) != 3 or P.valence(w) != 3:
        return None
    if P.vertex_kind(u) != COMPACT or P.vertex_kind(w) != COMPACT:
        return None
    if any(len(P.faces[f]) < 4 for f in P.edge_faces()[e]):
        return None
    k1, k2 = _other_labels(P, u, e)
    l1, l2 = _other_labels(P, w, e)
    return RidgeDescriptor.of(k1, k2, P.angles[e], l1, l2, e)


def find_ridges(P: CombPolyhedron) -> list[RidgeDescriptor]:
    require_valid(P)
    return [r for r in (ridge_at(P, e) for e in P.edges) if r is not None]


def _faces_at_edge(P: CombPolyhedron, e: Edge):
    """(A, C, B, D): A, C share e; B touches e at u only, D at w only."""
    u, w = e
    A, C = P.edge_faces()[e]
    vf = P.vertex_faces()
    B = next(f for f in vf[u] if f not in (A, C))
    D = next(f for f in vf[w] if f not in (A, C))
    return A, C, B, D


def _mode_for(P: CombPolyhedron, sharing: Iterable[str], others: Iterable[str]) -> int:
    order = list(P.faces)
    first = min(list(sharing) + list(others), key=order.index)
    return 1 if first in sharing else 2


def contraction_mode(P: CombPolyhedron, e: Edge) -> int:
    """The insert_edge mode that undoes contract_ridge(P, e)."""
    e = edge_key(*e)
    A, C, B, D = _faces_at_edge(P, e)
    return _mode_for(P, (A, C), (B, D))


def contraction_inverse(P: CombPolyhedron, e: Edge) -> dict:
    """Keyword arguments making insert_edge undo contract_ridge(P, e) exactly."""
    e = edge_key(*e)
    A, C, B, D = _faces_at_edge(P, e)
    order = list(P.faces)
    return {
        "v": e[0],
        "mode": _mode_for(P, (A, C), (B, D)),
        "n": P.angles[e],
        "new_id": e[1],
        "swap": order.index(B) > order.index(D),
    }


def contract_ridge(P: CombPolyhedron, e: Edge, check: bool = True) -> CombPolyhedron:
    """Collapse a <2,2,n,2,2> ridge to a 4-valent ideal vertex.

    The merged vertex keeps the smaller of the two ids and the edge label
    disappears.  With check=True the result must satisfy Andreev's
    conditions; a failure there is an internal inconsistency.
    """
    e = edge_key(*e)
    rep = validate(P)
    if not rep.ok:
        raise ValidationError("invalid polyhedron: " + "; ".join(rep.errors), rep)
    if len(P.faces) < 5:
        raise NotContractible("contraction needs at least 5 faces")
    r = ridge_at(P, e)
    if r is None:
        raise NotContractible(f"edge {e[0]}-{e[1]} is not a ridge")
    if r.type != (2, 2, r.n, 2, 2):
        raise NotContractible(f"edge {e[0]}-{e[1]} is a ridge of type {r}, not <2,2,n,2,2>")
    keep, drop = e
    shrinking = set(P.edge_faces()[e])
    faces = {}
    for f, c in P.faces.items():
        if f in shrinking:
            faces[f] = tuple(x for x in c if x != drop)
        else:
            faces[f] = tuple(keep if x == drop else x for x in c)
    angles = {}
    for (a, b), m in P.angles.items():
        if (a, b) == e:
            continue
        angles[edge_key(keep if a == drop else a, keep if b == drop else b)] = m
    Q = CombPolyhedron(faces, angles)
    if check:
        rep = validate(Q)
        if not rep.ok:
            raise InternalInconsistency("contraction produced an invalid polyhedron: " + "; ".join(rep.errors))
        ar = andreev_check(Q)
        if not ar.ok:
            raise InternalInconsistency(f"contraction violates Andreev condition(s) {ar.failed}")
    return Q


def contract_edges(P: CombPolyhedron, edges: Iterable[Edge], check: bool = True) -> CombPolyhedron:
    """Sequential contraction, each edge renamed through earlier merges."""
    merged: dict[int, int] = {}

    def find(x):
        while x in merged:
            x = merged[x]
        return x

    for u, w in edges:
        a, b = find(u), find(w)
        P = contract_ridge(P, (a, b), check=check)
        merged[max(a, b)] = min(a, b)
    return P


def insert_edge(P: CombPolyhedron, v: int, mode: int, n: int, new_id: Optional[int] = None, swap: bool = False, check: bool = True) -> CombPolyhedron:
    """Replace the ideal 4-valent vertex v by an edge labelled n.

    The four faces at v form two opposite pairs.  The pair that will share
    the new edge is the one containing the first face (in face order) for
    mode 1, the other pair for mode 2.  Of the two new vertices, the one on
    the earlier face of the non-sharing pair keeps the id v (the later one
    with swap=True); the other gets new_id (default: one more than the
    largest vertex id).
    """
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    if n < 2:
        raise ValueError("label must be >= 2")
    require_valid(P)
    if v not in P.vertices or P.valence(v) != 4 or P.vertex_kind(v) != IDEAL:
        raise PreconditionError(f"vertex {v} is not a 4-valent ideal vertex")
    ring = P.faces_around(v)
    pairs = [(ring[0], ring[2]), (ring[1], ring[3])]
    order = list(P.faces)
    first = min(ring, key=order.index)
    share_idx = 0 if first in pairs[0] else 1
    if mode == 2:
        share_idx = 1 - share_idx
    A, C = pairs[share_idx]
    B, D = sorted(pairs[1 - share_idx], key=order.index, reverse=swap)
    v2 = new_id if new_id is not None else max(P.vertices) + 1
    if v2 in P.vertices:
        raise ValueError(f"vertex id {v2} already in use")
    side = {B: v, D: v2}
    darts = P.darts()

    faces = {}
    for f, c in P.faces.items():
        if v not in c:
            faces[f] = c
        elif f in side:
            faces[f] = tuple(side[f] if x == v else x for x in c)
        else:
            i = c.index(v)
            p, q = c[i - 1], c[(i + 1) % len(c)]
            # the other face on edge p-v sees the dart v -> p
            first_v = side[darts[(v, p)]]
            second_v = v2 if first_v == v else v
            faces[f] = c[:i] + (first_v, second_v) + c[i + 1:]
    angles = {}
    for (a, b), m in P.angles.items():
        if v in (a, b):
            x = b if a == v else a
            owner = v if x in P.faces[B] else v2
            angles[edge_key(owner, x)] = m
        else:
            angles[(a, b)] = m
    angles[edge_key(v, v2)] = n
    Q = CombPolyhedron(faces, angles)
    if check:
        require_valid(Q)
        ar = andreev_check(Q)
        if not ar.ok:
            raise AndreevFailure(f"inserting an edge labelled {n} at vertex {v} (mode {mode}) violates {ar.failed}", ar)
    return Q


def smallest_insertion_label(P: CombPolyhedron, v: int, mode: int, labels: Iterable[int]) -> tuple[int, CombPolyhedron]:
    """First label in the given range for which insertion passes Andreev's conditions."""
    last = None
    for n in labels:
        try:
            return n, insert_edge(P, v, mode, n)
        except AndreevFailure as exc:
            last = exc
    if last is None:
        raise ValueError("empty label range")
    raise AndreevFailure(f"no label in range works at vertex {v} (mode {mode}); last failure: {last}", last.report)
