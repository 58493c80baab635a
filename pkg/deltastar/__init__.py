"""
Delta-S Module - Δ_S 三角剖分与 K(r)

Everything specific to the Schenck–Stiller triangulation Δ_S: the shipped
document and its edge forms, the kernel space K(r), ε(r), the C_i/F_i
generators and executable checks of the statements about them.

## Components（组件列表）

### complex.py
- **delta_s()**: built-in Δ_S, validated against the expected edge-form list
- **CHANGE_OF_VARIABLES**: ℓ12 → x, ℓ67 → x+y, ℓ34 → z, ℓ23 → y+z, ℓ26 → y/2

### kspace.py
- **k_space(r)** → KSpace, **epsilon(r)**, **epsilon_transport(r)**
- **cf_generators(r)** / **cf_generators_b(r)**: minimal generators in A / B

### verifiers.py
- **verify_slicing / verify_symmetry / verify_derivative_map / verify_min_degree**
- **verify_complete_intersection / verify_hilbert_identity / verify_lower_bound**
- **verify_colon_exclusions / verify_support_bound / verify_k_dim**
"""

from .complex import (
    CHANGE_OF_VARIABLES,
    EXPECTED_FORMS,
    DeltaS,
    check_delta_s,
    decomposition_value,
    delta_s,
    original_forms,
)
from .kspace import (
    CFGenerators,
    KSpace,
    cf_generators,
    cf_generators_b,
    colon_first,
    colon_second,
    epsilon,
    epsilon_piece,
    epsilon_transport,
    expected_generator_degrees,
    expected_k_dim,
    half_index,
    intersection_colon_piece,
    k_space,
)
from .verifiers import (
    antisymmetric_part_dim,
    derivative_image_dim,
    expected_single_hilbert,
    hilbert_values,
    koszul_hilbert,
    symmetric_part_dim,
    verify_colon_exclusions,
    verify_complete_intersection,
    verify_derivative_map,
    verify_hilbert_identity,
    verify_k_dim,
    verify_lower_bound,
    verify_min_degree,
    verify_slicing,
    verify_support_bound,
    verify_symmetry,
)

__all__ = [
    "DeltaS",
    "delta_s",
    "check_delta_s",
    "original_forms",
    "decomposition_value",
    "EXPECTED_FORMS",
    "CHANGE_OF_VARIABLES",
    "KSpace",
    "k_space",
    "epsilon",
    "epsilon_piece",
    "epsilon_transport",
    "CFGenerators",
    "cf_generators",
    "cf_generators_b",
    "colon_first",
    "colon_second",
    "intersection_colon_piece",
    "half_index",
    "expected_k_dim",
    "expected_generator_degrees",
    "verify_slicing",
    "verify_symmetry",
    "verify_derivative_map",
    "verify_min_degree",
    "verify_complete_intersection",
    "verify_hilbert_identity",
    "verify_lower_bound",
    "verify_colon_exclusions",
    "verify_support_bound",
    "verify_k_dim",
    "symmetric_part_dim",
    "antisymmetric_part_dim",
    "derivative_image_dim",
    "hilbert_values",
    "expected_single_hilbert",
    "koszul_hilbert",
]
