"""Quandles, branched covers, braid monodromy, and torus fibrations."""

from ._core import (
    CapacityError,
    Quandle,
    Slope,
    StructuralError,
    achiral_double,
    axiom_violations,
    axioms_ok,
    catalog,
    catalog_names,
    count_colorings,
    homology,
    homs,
    hurwitz_move,
    hurwitz_orbit,
    orbit_count,
    slope_rhd,
    slope_unrhd,
    subquandle,
    twist_matrix,
    validate_file,
)

__all__ = [
    "CapacityError",
    "Quandle",
    "Slope",
    "StructuralError",
    "achiral_double",
    "axiom_violations",
    "axioms_ok",
    "catalog",
    "catalog_names",
    "count_colorings",
    "homology",
    "homs",
    "hurwitz_move",
    "hurwitz_orbit",
    "orbit_count",
    "slope_rhd",
    "slope_unrhd",
    "subquandle",
    "twist_matrix",
    "validate_file",
]
