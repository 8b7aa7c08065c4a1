"""Angle-labelled combinatorial polyhedra, Andreev's conditions and ridge deformations."""

from .andreev import AndreevReport, ConditionResult, andreev_check, brute_force_circuits, four_circuits, three_circuits
from .core import (
    COMPACT,
    IDEAL,
    CombPolyhedron,
    ValidationReport,
    edge_key,
    find_isomorphism,
    isomorphic,
    orient_faces,
    require_valid,
    validate,
)
from .families import (
    DODECAHEDRON_MARKED_EDGE,
    GENERATORS,
    LAMBERT_EDGES,
    corpus,
    gen_cube,
    gen_dodecahedron,
    gen_ideal3_dodecahedron,
    gen_lambert_cube,
    gen_loebell,
    gen_loebell_ideal,
    gen_prism,
    gen_square_pyramid,
    gen_tetrahedron,
    gen_triangular_prism,
    loebell_vertical_edges,
)
from .ridges import (
    RidgeDescriptor,
    canonical_type,
    contract_edges,
    contract_ridge,
    contraction_inverse,
    contraction_mode,
    find_ridges,
    insert_edge,
    ridge_at,
    smallest_insertion_label,
    type_symmetries,
)

__all__ = [name for name in dir() if not name.startswith("_")]
