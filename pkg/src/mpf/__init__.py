"""Exact analysis of modified planar functions and their components.

Everything is computed in exact integer arithmetic: field elements are
ints, truth tables are bit-packed ints, spectra are Gaussian-integer
vectors.  The package provides independent routes to the same planarity
verdict (shifted-derivative permutation tests, flat twisted spectra of
the components, relative-difference-set checks on the graph), so each
route can serve as an oracle for the others.
"""

from .boolfun import (
    TruthTable,
    from_values,
    is_balanced,
    pack_bits,
    shifted_derivative_mv,
    shifted_derivative_uv,
    table_from_json,
    table_to_json,
    weight,
)
from .errors import (
    FilterDisagreementError,
    ForbiddenSubgroupError,
    InvalidModulusError,
    MpfError,
    NonPowerOfTwoError,
    NotASubgroupError,
    SearchBoundsError,
    UnsupportedGroupLawError,
    ZeroComponentError,
    ZeroShiftError,
)
from .gf2n import (
    FieldSpec,
    default_modulus,
    dual_mask,
    fe_mul,
    field_from_json,
    field_to_json,
    make_field,
    poly_is_irreducible,
    sigma,
    trace_n,
)
from .planar import (
    DOPolynomial,
    PlanarVerdict,
    VectorialFunction,
    component_mv,
    component_uv,
    do_from_json,
    do_to_json,
    do_to_table,
    function_from_json,
    function_to_json,
    is_modified_planar,
    is_modified_planar_components,
    is_modified_planar_perm,
)
from .rds import (
    GroupSpec,
    RdsReport,
    character_eval,
    forbidden_subgroup,
    graph_of,
    group_elements,
    group_for,
    group_identity,
    group_inverse,
    group_op,
    rds_verify_bruteforce,
    rds_verify_characters,
)
from .search import (
    SearchJob,
    SearchReport,
    candidate_function,
    class_size,
    enumerate_class,
    run_search,
)
from .transforms import (
    GaussianInt,
    Spectrum,
    bent4_witnesses,
    fwht,
    inverse_twisted,
    is_flat,
    transform_U,
    transform_V,
)

__version__ = "0.1.0"

__all__ = [
    "TruthTable", "from_values", "is_balanced", "pack_bits",
    "shifted_derivative_mv", "shifted_derivative_uv", "table_from_json",
    "table_to_json", "weight",
    "MpfError", "InvalidModulusError", "ZeroShiftError", "ZeroComponentError",
    "NonPowerOfTwoError", "UnsupportedGroupLawError", "NotASubgroupError",
    "ForbiddenSubgroupError", "SearchBoundsError", "FilterDisagreementError",
    "FieldSpec", "default_modulus", "dual_mask", "fe_mul", "field_from_json",
    "field_to_json", "make_field", "poly_is_irreducible", "sigma", "trace_n",
    "DOPolynomial", "PlanarVerdict", "VectorialFunction", "component_mv",
    "component_uv", "do_from_json", "do_to_json", "do_to_table",
    "is_modified_planar", "is_modified_planar_components", "is_modified_planar_perm",
    "function_from_json", "function_to_json",
    "GroupSpec", "RdsReport", "character_eval", "forbidden_subgroup", "graph_of",
    "group_elements", "group_for", "group_identity", "group_inverse", "group_op",
    "rds_verify_bruteforce", "rds_verify_characters",
    "SearchJob", "SearchReport", "candidate_function", "class_size",
    "enumerate_class", "run_search",
    "GaussianInt", "Spectrum", "bent4_witnesses", "fwht", "inverse_twisted",
    "is_flat", "transform_U", "transform_V",
]
