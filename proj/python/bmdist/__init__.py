"""Exact-arithmetic toolkit for Banach-Mazur distance computations in small
dimensions: sandwich certification for cube/cross-polytope operators,
asymmetry constants and Minkowski centers of polygons, the equidistant
pentagon family, and a float search with exact re-certification.

Rationals cross this boundary as canonical "p/q" strings; no floats are
involved anywhere except the search entry points.
"""

from ._core import (
    __version__,
    asymmetry,
    certify,
    certify_equidistance,
    check_square_sandwich,
    claim3d,
    corner_classify,
    enumerate_nice_octahedra,
    find_lemma_counterexample,
    float_ratio,
    inner_radius,
    is_nice,
    normalize_columns,
    optimize,
    outer_radius,
    parallel_pair_ratio,
    pentagon,
    pentagon_center,
    ratio,
    rationalize,
    sample_valid_parallelogram,
    snap_to_nice,
)

__all__ = [
    "__version__",
    "asymmetry",
    "certify",
    "certify_equidistance",
    "check_square_sandwich",
    "claim3d",
    "corner_classify",
    "enumerate_nice_octahedra",
    "find_lemma_counterexample",
    "float_ratio",
    "inner_radius",
    "is_nice",
    "normalize_columns",
    "optimize",
    "outer_radius",
    "parallel_pair_ratio",
    "pentagon",
    "pentagon_center",
    "ratio",
    "rationalize",
    "sample_valid_parallelogram",
    "snap_to_nice",
]
