"""Generators for the polyhedron families used throughout the package."""

from __future__ import annotations

import itertools

import networkx as nx

from .core import CombPolyhedron, edge_key, orient_faces

# The dodecahedron's labelled edge; vertex ids are 1-based.
DODECAHEDRON_MARKED_EDGE = (1, 2)
# Vertex of the dodecahedron whose three edges carry label 3 in the ideal variant.
IDEAL3_VERTEX = 1


def _faces_from_planar_graph(G: nx.Graph) -> list[tuple[int, ...]]:
    planar, emb = nx.check_planarity(G)
    if not planar:
        raise ValueError("graph is not planar")
    seen = set()
    faces = []
    for u, v in sorted(emb.edges()):
        if (u, v) in seen:
            continue
        cyc = emb.traverse_face(u, v, mark_half_edges=None)
        for i, x in enumerate(cyc):
            seen.add((x, cyc[(i + 1) % len(cyc)]))
        faces.append(tuple(cyc))
    return faces


def _from_cycles(cycles, labels=None, default: int = 2) -> CombPolyhedron:
    named = {f"F{i + 1}": c for i, c in enumerate(cycles)}
    faces = orient_faces(named)
    P = CombPolyhedron(faces, {})
    angles = {e: default for e in P.edges}
    for e, m in (labels or {}).items():
        k = edge_key(*e)
        if k not in angles:
            raise ValueError(f"{k} is not an edge")
        angles[k] = m
    return CombPolyhedron(faces, angles)


def _dodecahedron_cycles() -> list[tuple[int, ...]]:
    G = nx.relabel_nodes(nx.dodecahedral_graph(), lambda x: x + 1)
    faces = _faces_from_planar_graph(G)
    return sorted((_canon(c) for c in faces))


def _canon(c):
    k = c.index(min(c))
    return tuple(c[k:] + c[:k])


def gen_dodecahedron(m: int = 2) -> CombPolyhedron:
    """Dodecahedron with DODECAHEDRON_MARKED_EDGE labelled m, all other labels 2."""
    if m < 2:
        raise ValueError("label m must be >= 2")
    return _from_cycles(_dodecahedron_cycles(), {DODECAHEDRON_MARKED_EDGE: m})


def _loebell_ids(n: int):
    a = [1 + i for i in range(n)]
    b = [n + 1 + i for i in range(n)]
    c = [2 * n + 1 + i for i in range(n)]
    d = [3 * n + 1 + i for i in range(n)]
    return a, b, c, d


def _loebell_cycles(n: int) -> list[tuple[int, ...]]:
    a, b, c, d = _loebell_ids(n)
    cycles = [tuple(a)]
    for i in range(n):
        j = (i + 1) % n
        cycles.append((a[i], b[i], c[i], b[j], a[j]))
    for i in range(n):
        j = (i + 1) % n
        cycles.append((c[i], d[i], d[j], c[j], b[j]))
    cycles.append(tuple(d))
    return cycles


def loebell_vertical_edges(n: int) -> list[tuple[int, int]]:
    """The perfect matching whose contraction turns L(n) into its ideal version."""
    a, b, c, d = _loebell_ids(n)
    return [(a[i], b[i]) for i in range(n)] + [(c[i], d[i]) for i in range(n)]


def gen_loebell(n: int, allow_small: bool = False) -> CombPolyhedron:
    """Right-angled Loebell polyhedron: two n-gons and 2n pentagons.

    It is hyperbolic only for n >= 5; allow_small builds the combinatorial
    object for n = 3, 4 as well.
    """
    if n < (3 if allow_small else 5):
        raise ValueError("L(n) needs n >= 5")
    return _from_cycles(_loebell_cycles(n))


def gen_loebell_ideal(n: int) -> CombPolyhedron:
    """L(n) with every vertical edge collapsed: 2n ideal 4-valent vertices.

    Built directly; the merged vertices keep the smaller ids, as sequential
    contraction would.
    """
    if n < 3:
        raise ValueError("ideal Loebell polyhedron needs n >= 3")
    a, _, c, _ = _loebell_ids(n)
    cycles = [tuple(a)]
    for i in range(n):
        j = (i + 1) % n
        cycles.append((a[i], c[i], a[j]))
    for i in range(n):
        j = (i + 1) % n
        cycles.append((c[i], c[j], a[j]))
    cycles.append(tuple(c))
    return _from_cycles(cycles)


def _cube_id(x: int, y: int, z: int) -> int:
    return 1 + x + 2 * y + 4 * z


def _cube_cycles() -> list[tuple[int, ...]]:
    cycles = []
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    for axis in range(3):
        for side in (0, 1):
            cyc = []
            for s, t in square:
                pt = [s, t]
                pt.insert(axis, side)
                cyc.append(_cube_id(*pt))
            cycles.append(tuple(cyc))
    return cycles


LAMBERT_EDGES = (
    (_cube_id(0, 0, 0), _cube_id(1, 0, 0)),
    (_cube_id(0, 0, 1), _cube_id(0, 1, 1)),
    (_cube_id(1, 1, 0), _cube_id(1, 1, 1)),
)


def gen_cube(labels=None) -> CombPolyhedron:
    return _from_cycles(_cube_cycles(), labels)


def gen_lambert_cube(p: int, q: int, r: int) -> CombPolyhedron:
    """Cube with three pairwise skew essential edges labelled p, q, r."""
    if min(p, q, r) < 3:
        raise ValueError("compact Lambert cube needs p, q, r >= 3")
    return gen_cube(dict(zip(LAMBERT_EDGES, (p, q, r))))


def gen_ideal3_dodecahedron() -> CombPolyhedron:
    """Dodecahedron whose three edges at one vertex carry label 3."""
    P = gen_dodecahedron(2)
    return P.with_angles({e: 3 for e in P.incident_edges(IDEAL3_VERTEX)})


def gen_triangular_prism(labels=None) -> CombPolyhedron:
    cycles = [(1, 2, 3), (4, 6, 5), (1, 4, 5, 2), (2, 5, 6, 3), (3, 6, 4, 1)]
    return _from_cycles(cycles, labels)


def gen_tetrahedron() -> CombPolyhedron:
    return _from_cycles([(1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3)])


def gen_prism(k: int, labels=None) -> CombPolyhedron:
    """k-gonal prism, k >= 3."""
    top = tuple(range(1, k + 1))
    bottom = tuple(range(k + 1, 2 * k + 1))
    cycles = [top, bottom]
    for i in range(k):
        j = (i + 1) % k
        cycles.append((top[i], top[j], bottom[j], bottom[i]))
    return _from_cycles(cycles, labels)


def gen_square_pyramid(base_label: int = 3) -> CombPolyhedron:
    """Square pyramid; the apex (vertex 5) is ideal, base edges carry base_label."""
    cycles = [(1, 2, 5), (2, 3, 5), (3, 4, 5), (4, 1, 5), (1, 4, 3, 2)]
    base = {(1, 2): base_label, (2, 3): base_label, (3, 4): base_label, (1, 4): base_label}
    return _from_cycles(cycles, base)


GENERATORS = {
    "dodecahedron": gen_dodecahedron,
    "loebell": gen_loebell,
    "loebell-ideal": gen_loebell_ideal,
    "lambert": gen_lambert_cube,
    "ideal3-dodecahedron": gen_ideal3_dodecahedron,
}


def corpus(max_faces: int = 14):
    """Named small polyhedra used by the property tests."""
    out = {
        "cube": gen_cube(),
        "prism3": gen_triangular_prism(),
        "prism5": gen_prism(5),
        "dodecahedron": gen_dodecahedron(2),
        "dodecahedron-m5": gen_dodecahedron(5),
        "loebell-ideal-3": gen_loebell_ideal(3),
        "loebell-ideal-4": gen_loebell_ideal(4),
        "loebell-ideal-5": gen_loebell_ideal(5),
        "ideal3": gen_ideal3_dodecahedron(),
        "pyramid": gen_square_pyramid(3),
    }
    for p, q, r in itertools.product((3, 4), repeat=3):
        out[f"lambert-{p}{q}{r}"] = gen_lambert_cube(p, q, r)
    return {k: v for k, v in out.items() if len(v.faces) <= max_faces}
