"""Angle-labelled combinatorial 3-polyhedra.

A polyhedron is a set of oriented face cycles (a rotation system) plus a
label m >= 2 on every edge, meaning the dihedral angle pi/m.  Instances are
treated as values: every operation returns a new polyhedron.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from ..errors import ValidationError

Edge = tuple[int, int]

COMPACT, IDEAL, INVALID = "compact", "ideal", "invalid"


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _rotate_min(cycle: Iterable[int]) -> tuple[int, ...]:
    c = tuple(cycle)
    if not c:
        return c
    k = c.index(min(c))
    return c[k:] + c[:k]


def face_sort_key(name: str):
    """Natural order: F2 before F10."""
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


class CombPolyhedron:
    """Faces as oriented vertex cycles, labels on unordered vertex pairs."""

    __slots__ = ("faces", "angles", "_cache")

    def __init__(self, faces: Mapping[str, Iterable[int]], angles: Mapping[Edge, int]):
        self.faces: dict[str, tuple[int, ...]] = {
            str(k): _rotate_min(int(x) for x in v) for k, v in sorted(faces.items(), key=lambda kv: face_sort_key(str(kv[0])))
        }
        self.angles: dict[Edge, int] = {edge_key(*e): int(m) for e, m in sorted(angles.items())}
        self._cache: dict = {}

    # -- value semantics --------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, CombPolyhedron):
            return NotImplemented
        return self.faces == other.faces and self.angles == other.angles

    def __hash__(self):
        return hash((tuple(self.faces.items()), tuple(self.angles.items())))

    def __repr__(self):
        return f"CombPolyhedron(V={len(self.vertices)}, E={len(self.edges)}, F={len(self.faces)})"

    def with_angles(self, updates: Mapping[Edge, int]) -> "CombPolyhedron":
        angles = dict(self.angles)
        for e, m in updates.items():
            k = edge_key(*e)
            if k not in angles:
                raise KeyError(f"{k} is not an edge")
            angles[k] = int(m)
        return CombPolyhedron(self.faces, angles)

    def relabel(self, e: Edge, m: int) -> "CombPolyhedron":
        return self.with_angles({e: m})

    # -- derived structure ------------------------------------------------
    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def face_ids(self) -> list[str]:
        return list(self.faces)

    @property
    def vertices(self) -> list[int]:
        return self._memo("V", lambda: sorted({v for c in self.faces.values() for v in c}))

    @property
    def edges(self) -> list[Edge]:
        def build():
            es = set()
            for c in self.faces.values():
                for i, v in enumerate(c):
                    es.add(edge_key(v, c[(i + 1) % len(c)]))
            return sorted(es)
        return self._memo("E", build)

    def darts(self) -> dict[tuple[int, int], str]:
        """Directed edge (u, w) -> the face traversing it from u to w."""
        def build():
            out = {}
            for name, c in self.faces.items():
                for i, v in enumerate(c):
                    out.setdefault((v, c[(i + 1) % len(c)]), name)
            return out
        return self._memo("darts", build)

    def edge_faces(self) -> dict[Edge, list[str]]:
        def build():
            out: dict[Edge, list[str]] = {}
            for name, c in self.faces.items():
                for i, v in enumerate(c):
                    out.setdefault(edge_key(v, c[(i + 1) % len(c)]), []).append(name)
            return out
        return self._memo("edge_faces", build)

    def vertex_faces(self) -> dict[int, list[str]]:
        def build():
            out: dict[int, list[str]] = {}
            for name, c in self.faces.items():
                for v in c:
                    out.setdefault(v, []).append(name)
            return out
        return self._memo("vertex_faces", build)

    def neighbours(self, v: int) -> list[int]:
        return sorted({w for e in self.edges if v in e for w in e if w != v})

    def incident_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edges if v in e]

    def valence(self, v: int) -> int:
        return len(self.incident_edges(v))

    def face_adjacency(self) -> dict[tuple[str, str], int]:
        """Label of the edge shared by each adjacent face pair (ordered by face order)."""
        def build():
            order = {f: i for i, f in enumerate(self.faces)}
            out = {}
            for e, fs in self.edge_faces().items():
                if len(fs) == 2:
                    a, b = sorted(fs, key=order.__getitem__)
                    out[(a, b)] = self.angles.get(e)
            return out
        return self._memo("adj", build)

    def adjacent(self, f: str, g: str) -> bool:
        adj = self.face_adjacency()
        return (f, g) in adj or (g, f) in adj

    def shared_label(self, f: str, g: str) -> Optional[int]:
        adj = self.face_adjacency()
        return adj.get((f, g), adj.get((g, f)))

    def face_neighbours(self) -> dict[str, set[str]]:
        def build():
            out = {f: set() for f in self.faces}
            for a, b in self.face_adjacency():
                out[a].add(b)
                out[b].add(a)
            return out
        return self._memo("fn", build)

    def face_vertex_sets(self) -> dict[str, frozenset[int]]:
        return self._memo("fvs", lambda: {f: frozenset(c) for f, c in self.faces.items()})

    def vertex_labels(self, v: int) -> list[int]:
        return [self.angles[e] for e in self.incident_edges(v)]

    def vertex_kind(self, v: int) -> str:
        labels = self.vertex_labels(v)
        if len(labels) == 4:
            return IDEAL if all(m == 2 for m in labels) else INVALID
        if len(labels) != 3:
            return INVALID
        s = sum(Fraction(1, m) for m in labels)
        if s > 1:
            return COMPACT
        return IDEAL if s == 1 else INVALID

    def ideal_vertices(self) -> list[int]:
        return [v for v in self.vertices if self.vertex_kind(v) == IDEAL]

    @property
    def is_compact(self) -> bool:
        return all(self.vertex_kind(v) == COMPACT for v in self.vertices)

    def faces_around(self, v: int) -> list[str]:
        """Faces at v in rotation order, following darts around the vertex."""
        darts = self.darts()
        nbrs = self.neighbours(v)
        if not nbrs:
            return []
        out = []
        w = nbrs[0]
        for _ in range(len(nbrs)):
            f = darts[(v, w)]
            out.append(f)
            c = self.faces[f]
            # the face leaving v towards w enters v from its predecessor
            w = c[(c.index(v) - 1) % len(c)]
        return out

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "faces": {f: list(c) for f, c in self.faces.items()},
            "angles": {f"{u}-{v}": m for (u, v), m in self.angles.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data) -> "CombPolyhedron":
        if isinstance(data, str):
            data = json.loads(data)
        if "faces" not in data or "angles" not in data:
            raise ValidationError("polyhedron file needs 'faces' and 'angles'")
        angles = {}
        for key, m in data["angles"].items():
            try:
                u, v = (int(x) for x in str(key).split("-"))
            except ValueError as exc:
                raise ValidationError(f"bad edge key {key!r}; expected 'v-w'") from exc
            angles[edge_key(u, v)] = int(m)
        P = cls(data["faces"], angles)
        missing = [e for e in P.edges if e not in P.angles]
        extra = [e for e in P.angles if e not in set(P.edges)]
        if missing or extra:
            parts = []
            if missing:
                parts.append("missing labels for " + ", ".join(f"{u}-{v}" for u, v in missing))
            if extra:
                parts.append("labels for non-edges " + ", ".join(f"{u}-{v}" for u, v in extra))
            raise ValidationError("; ".join(parts))
        return P

    @classmethod
    def load(cls, path) -> "CombPolyhedron":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps() + "\n")


def orient_faces(cycles: Mapping[str, Iterable[int]]) -> dict[str, tuple[int, ...]]:
    """Flip face cycles so that every edge is traversed once in each direction.

    The first face keeps its direction; the rest follow by propagation.
    """
    cycles = {k: tuple(v) for k, v in cycles.items()}
    names = list(cycles)
    by_edge: dict[Edge, list[str]] = {}
    for name, c in cycles.items():
        for i, v in enumerate(c):
            by_edge.setdefault(edge_key(v, c[(i + 1) % len(c)]), []).append(name)
    out = {names[0]: cycles[names[0]]}
    stack = [names[0]]
    while stack:
        f = stack.pop()
        c = out[f]
        for i, v in enumerate(c):
            w = c[(i + 1) % len(c)]
            for g in by_edge[edge_key(v, w)]:
                if g == f or g in out:
                    continue
                d = cycles[g]
                fwd = any(d[j] == v and d[(j + 1) % len(d)] == w for j in range(len(d)))
                out[g] = tuple(reversed(d)) if fwd else d
                stack.append(g)
    if len(out) != len(cycles):
        raise ValueError("face cycles do not form a connected surface")
    return {k: out[k] for k in names}


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    n_vertices: int = 0
    n_edges: int = 0
    n_faces: int = 0
    ideal_vertices: list[int] = field(default_factory=list)
    compact: bool = False

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def simplex(self) -> bool:
        return any(f.startswith("simplex") for f in self.flags)

    @property
    def deformable(self) -> bool:
        return self.ok and self.n_faces >= 5

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "errors": self.errors,
            "flags": self.flags,
            "V": self.n_vertices,
            "E": self.n_edges,
            "F": self.n_faces,
            "ideal_vertices": self.ideal_vertices,
            "compact": self.compact,
        }


def validate(P: CombPolyhedron) -> ValidationReport:
    rep = ValidationReport(n_vertices=len(P.vertices), n_edges=len(P.edges), n_faces=len(P.faces))
    for f, c in P.faces.items():
        if len(c) < 3 or len(set(c)) != len(c):
            rep.errors.append(f"face {f}: cycle {list(c)} must have >= 3 distinct vertices")
    counts: dict[tuple[int, int], int] = {}
    for c in P.faces.values():
        for i, v in enumerate(c):
            d = (v, c[(i + 1) % len(c)])
            counts[d] = counts.get(d, 0) + 1
    for (u, v) in P.edges:
        fs = P.edge_faces()[(u, v)]
        if len(fs) != 2:
            rep.errors.append(f"edge {u}-{v}: lies on {len(fs)} faces, expected 2")
        elif counts.get((u, v), 0) != 1 or counts.get((v, u), 0) != 1:
            rep.errors.append(f"edge {u}-{v}: faces {fs[0]} and {fs[1]} traverse it in the same direction (rotation system not oriented)")
    euler = rep.n_vertices - rep.n_edges + rep.n_faces
    if euler != 2:
        rep.errors.append(f"Euler characteristic V - E + F = {euler}, expected 2")
    for e in P.edges:
        if e not in P.angles:
            rep.errors.append(f"edge {e[0]}-{e[1]}: missing label")
        elif P.angles[e] < 2:
            rep.errors.append(f"edge {e[0]}-{e[1]}: label {P.angles[e]} < 2")
    for e in P.angles:
        if e not in P.edge_faces():
            rep.errors.append(f"label given for non-edge {e[0]}-{e[1]}")
    if rep.errors:
        return rep
    for v in P.vertices:
        k = P.valence(v)
        if k not in (3, 4):
            rep.errors.append(f"vertex {v}: valence {k}, expected 3 or 4")
            continue
        labels = P.vertex_labels(v)
        kind = P.vertex_kind(v)
        if kind == INVALID:
            if k == 4:
                rep.errors.append(f"vertex {v}: 4-valent with labels {labels}, all must be 2")
            else:
                rep.errors.append(f"vertex {v}: labels {labels} have angle sum < pi")
        elif kind == IDEAL:
            rep.ideal_vertices.append(v)
    rep.compact = not rep.ideal_vertices and not rep.errors
    if rep.n_faces == 4:
        rep.flags.append("simplex: Andreev theorem inapplicable")
    elif rep.n_faces < 5:
        rep.flags.append("fewer than 5 faces: deformations unavailable")
    return rep


def require_valid(P: CombPolyhedron) -> ValidationReport:
    rep = validate(P)
    if not rep.ok:
        raise ValidationError("invalid polyhedron: " + "; ".join(rep.errors), rep)
    return rep


# -- isomorphism -----------------------------------------------------------

def _dart_structure(faces: Mapping[str, tuple[int, ...]]):
    nxt = {}
    for c in faces.values():
        for i, v in enumerate(c):
            w, x = c[(i + 1) % len(c)], c[(i + 2) % len(c)]
            nxt[(v, w)] = (w, x)
    return nxt


def _try_map(P, nxtP, Q, nxtQ, d0, e0, labels: bool) -> Optional[dict[int, int]]:
    vmap: dict[int, int] = {}
    inv: dict[int, int] = {}
    seen = {d0: e0}
    stack = [(d0, e0)]
    while stack:
        d, e = stack.pop()
        for a, b in ((d[0], e[0]), (d[1], e[1])):
            if vmap.setdefault(a, b) != b or inv.setdefault(b, a) != a:
                return None
        if labels and P.angles[edge_key(*d)] != Q.angles[edge_key(*e)]:
            return None
        for dd, ee in ((nxtP[d], nxtQ.get(e)), ((d[1], d[0]), (e[1], e[0]))):
            if ee is None or ee not in nxtQ:
                return None
            if dd in seen:
                if seen[dd] != ee:
                    return None
            else:
                seen[dd] = ee
                stack.append((dd, ee))
    if len(seen) != len(nxtP):
        return None
    return vmap


def find_isomorphism(P: CombPolyhedron, Q: CombPolyhedron, labels: bool = True, mirror: bool = True) -> Optional[dict[int, int]]:
    """Vertex bijection carrying P's faces (and labels) onto Q's, or None.

    With mirror=True orientation-reversing maps count as well.
    """
    if (len(P.vertices), len(P.edges), len(P.faces)) != (len(Q.vertices), len(Q.edges), len(Q.faces)):
        return None
    if labels and sorted(P.angles.values()) != sorted(Q.angles.values()):
        return None
    nxtP = _dart_structure(P.faces)
    d0 = next(iter(sorted(nxtP)))
    candidates = [Q]
    if mirror:
        candidates.append(CombPolyhedron({f: tuple(reversed(c)) for f, c in Q.faces.items()}, Q.angles))
    for QQ in candidates:
        nxtQ = _dart_structure(QQ.faces)
        for e0 in sorted(nxtQ):
            vmap = _try_map(P, nxtP, QQ, nxtQ, d0, e0, labels)
            if vmap is not None:
                return vmap
    return None


def isomorphic(P: CombPolyhedron, Q: CombPolyhedron, labels: bool = True) -> bool:
    return find_isomorphism(P, Q, labels) is not None
