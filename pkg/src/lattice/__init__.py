"""
Lattice package: integer linear algebra and simplicial fans in Z^3.
"""

from .fan import (
    CYStructure,
    Cone3,
    Fan,
    HeightOnePolygon,
    LatticeVector,
    ValidationReport,
    compact_divisor_rays,
    cy_vector,
    divisor_fan_generators,
    fans_equivalent,
    height_one_polygon,
    is_calabi_yau,
    is_fano_surface,
    normal_form,
    primitive,
    random_unimodular,
    validate_fan,
)

__all__ = [
    "CYStructure",
    "Cone3",
    "Fan",
    "HeightOnePolygon",
    "LatticeVector",
    "ValidationReport",
    "compact_divisor_rays",
    "cy_vector",
    "divisor_fan_generators",
    "fans_equivalent",
    "height_one_polygon",
    "is_calabi_yau",
    "is_fano_surface",
    "normal_form",
    "primitive",
    "random_unimodular",
    "validate_fan",
]
