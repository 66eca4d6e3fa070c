"""Intersection matrices of pseudocircle arrangements.

Thin Python surface over the C++ core: parsing and validation of .psm
matrices, consistency and strict embeddability, genus via face tracing,
sphere-embeddability (direct and through 4-subarrangements), canonical
forms and isomorphism, small-n censuses, and the circle-arrangement
oracle.
"""

from ._pscirc import (
    DomainError,
    GeometryError,
    Matrix,
    ParseError,
    ValidationError,
    all_submatrices,
    are_isomorphic,
    canonical_form,
    check_consistency,
    classify_triple,
    enumerate_census,
    export_graph_dot,
    export_graph_json,
    face_count,
    face_walks,
    genus,
    inconsistent_triple,
    is_sphere_embeddable_direct,
    is_sphere_embeddable_via_quads,
    is_uniform_oriented_matroid,
    iso_via_quads,
    matrix_from_circles,
    mirror,
    parse_circles_text,
    parse_matrix,
    quad_profile,
    random_circles,
    relabel,
    reorient,
    reorient_all,
    serialize_matrix,
    strictly_embeddable,
    submatrix_delete,
    validate_text,
)

__all__ = [
    "DomainError",
    "GeometryError",
    "Matrix",
    "ParseError",
    "ValidationError",
    "all_submatrices",
    "are_isomorphic",
    "canonical_form",
    "check_consistency",
    "classify_triple",
    "enumerate_census",
    "export_graph_dot",
    "export_graph_json",
    "face_count",
    "face_walks",
    "genus",
    "inconsistent_triple",
    "is_sphere_embeddable_direct",
    "is_sphere_embeddable_via_quads",
    "is_uniform_oriented_matroid",
    "iso_via_quads",
    "matrix_from_circles",
    "mirror",
    "parse_circles_text",
    "parse_matrix",
    "quad_profile",
    "random_circles",
    "relabel",
    "reorient",
    "reorient_all",
    "serialize_matrix",
    "strictly_embeddable",
    "submatrix_delete",
    "validate_text",
]

__version__ = "0.1.0"
