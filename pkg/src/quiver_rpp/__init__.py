"""Quiver representations, minuscule posets and reverse plane partitions.

Exact toolkit: root systems and Coxeter numbers for the simply-laced
diagrams with minuscule vertices, AR quivers by knitting, the toggle
bijection between supported-at-m representation classes and reverse
plane partitions with its
inverse, generic Jordan data over a large prime field, the classical
Hillman-Grassl and Pak correspondences on rectangles, promotion
periodicity, and generating-function verification.
"""

from .arquiver import knit, opposite_compatible_order, tau_orbit
from .bijection import from_rpp, poset_of, to_rpp
from .dynamics import check_periodicity, orbit_toggle, promotion, random_rpp
from .dynkin import (
    DynkinDiagram,
    coxeter_number,
    minuscule_vertices,
    parse_diagram,
    positive_roots,
    reference_minuscule_poset,
)
from .genfun import count_rpps_by_weight, hook_product_series, verify_identity
from .jordan import gen_jf, generic_nilpotent_endo, jordan_to_rpp, jordan_type
from .poset import (
    RPP,
    Poset,
    chain_product,
    is_isomorphic,
    minuscule_poset,
    order_ideals,
    toggle,
    zero_rpp,
)
from .quiver import (
    Quiver,
    Representation,
    build_indecomposable,
    canonical_quiver,
    direct_sum,
    format_dimvec,
    format_repclass,
    hom_basis,
    indecomposable,
    injective_dims,
    linear_quiver,
    parse_dimvec,
    parse_quiver,
    parse_repclass,
    projective_dims,
    random_orientation,
)
from .typea import RectShape, dimvec_to_rimhook, hg_build, hg_extract, pak_map

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
