"""Growth functions and growth rates of hyperbolic Coxeter groups."""

from .polyalg import IntPoly, RatFunc, parse_poly, taylor_coeffs
from .roots import AlgebraicClass, IsolatingInterval, classify, growth_rate
from .coxeter import CoxeterMatrix, finite_type, growth_poly_finite, steinberg_growth, tits_bfs_sphere_sizes
from .polyhedron import CombPolyhedron, andreev_check, contract_ridge, find_ridges, insert_edge, validate
from .growth3d import GrowthReport, deformation_sweep, parry_growth, polyhedral_growth

__version__ = "0.1.0"

__all__ = [
    "AlgebraicClass",
    "CombPolyhedron",
    "CoxeterMatrix",
    "GrowthReport",
    "IntPoly",
    "IsolatingInterval",
    "RatFunc",
    "andreev_check",
    "classify",
    "contract_ridge",
    "deformation_sweep",
    "find_ridges",
    "finite_type",
    "growth_poly_finite",
    "growth_rate",
    "insert_edge",
    "parry_growth",
    "parse_poly",
    "polyhedral_growth",
    "steinberg_growth",
    "taylor_coeffs",
    "tits_bfs_sphere_sizes",
    "validate",
]
