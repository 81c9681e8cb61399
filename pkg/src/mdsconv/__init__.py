"""MDS convolutional codes built from Vandermonde-type generators."""
from .codebuild import ConvCode, build_code, closed_form_entry, encode, singleton_bound, weight
from .distance import (
    StateGraph,
    WeightSeries,
    brute_force_distance,
    expand_rational,
    extended_row_distance,
    extended_row_distances,
    free_distance,
    is_atomic,
    slope_lower_bound,
    weight_enumerator,
)
from .errors import MdsConvError
from .gf import GF, FieldElement, FieldSpec, element_order, field_new, find_element_of_order
from .parity import build_H_full, build_H_general, build_H_min, verify_parity_pair
from .polyalg import (
    DensePoly,
    PolyMatrix,
    is_minimal_basis,
    is_right_invertible,
    max_minor_degree,
    module_membership,
    poly_gcd,
    poly_xgcd,
)
from .skewcyclic import (
    SkewPoly,
    all_automorphisms,
    build_ring,
    cyclicity_decision,
    is_sigma_cyclic,
    make_automorphism,
    p_inverse,
    p_map,
    reed_solomon_form,
    sigma_on_idempotents,
    skew_mul,
    unit_factorization,
)

__version__ = '0.1.0'
