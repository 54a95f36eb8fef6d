"""Exact counting and verification toolkit for rhombus tilings of punctured hexagons.

Three independent counting routes — closed-form products, midpoint
determinants, and brute-force enumeration of non-intersecting path families —
plus exact checks of the symmetric-function and Pfaffian identities behind
them.  All arithmetic is exact (int / Fraction); nothing here floats.
"""

from .boxcount import (
    enumerate_plane_partitions,
    macmahon_box,
    theorem1_count,
    theorem4_count,
)
from .core import (
    Partition,
    binomial,
    conjugate,
    determinant,
    pfaffian,
    pfaffian_minor,
)
from .msf import (
    IndexSets,
    build_msf_instance,
    chain_5_3_check,
    conjecture5_check,
    lemma9_check,
    lemma10_check,
    minor_summation,
    moment_matrix,
    n_matrix_entry_check,
    structured_skew,
    sub_pfaffian_sign,
    theorem3_lhs,
    theorem3_rhs,
)
from .symfun import (
    RabIndex,
    RabPair,
    elementary_sym,
    generate_rab,
    lemma8_check,
    rect_product_decomposition_check,
    schur_bidet,
    schur_eval,
    schur_nk,
    seeded_points,
    vandermonde_product,
)
from .tiling import (
    LatticePoint,
    PathFamily,
    PuncturedHexagon,
    count_paths,
    count_via_path_determinants,
    enumerate_tilings,
    render_tiling_svg,
    start_end_points,
    tiling_families,
    validate_family,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "binomial",
    "conjugate",
    "determinant",
    "pfaffian",
    "pfaffian_minor",
    "macmahon_box",
    "enumerate_plane_partitions",
    "theorem1_count",
    "theorem4_count",
    "LatticePoint",
    "PathFamily",
    "PuncturedHexagon",
    "start_end_points",
    "count_paths",
    "enumerate_tilings",
    "tiling_families",
    "validate_family",
    "count_via_path_determinants",
    "render_tiling_svg",
    "elementary_sym",
    "schur_nk",
    "schur_bidet",
    "schur_eval",
    "seeded_points",
    "vandermonde_product",
    "RabIndex",
    "RabPair",
    "generate_rab",
    "lemma8_check",
    "rect_product_decomposition_check",
    "IndexSets",
    "moment_matrix",
    "structured_skew",
    "build_msf_instance",
    "minor_summation",
    "sub_pfaffian_sign",
    "lemma9_check",
    "theorem3_lhs",
    "theorem3_rhs",
    "conjecture5_check",
    "chain_5_3_check",
    "lemma10_check",
    "n_matrix_entry_check",
]
