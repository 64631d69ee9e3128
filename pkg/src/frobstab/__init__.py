"""Exact stable-module-category computations for finite-dimensional
Frobenius algebras: stable Hom and Ext, shift functors, stable centers,
and degree-zero Tate cohomology, all over the rationals or GF(p)."""

from .errors import FrobstabError
from .exactfield import Field, parse_scalar
from .linalg import Matrix, Subspace, kron, subspace_intersect, subspace_sum, unvec, vec
from .algebra import (
    StructureAlgebra,
    algebra_from_json,
    algebra_to_json,
    enveloping,
    opposite,
    tensor,
)
from .frobenius import (
    FrobeniusSystem,
    check_identities,
    derive_system,
    enveloping_system,
    frobenius_element,
    gram_matrix,
    twist,
)
from .modrep import (
    ModuleRep,
    bimodule_regular,
    canonical_embedding,
    direct_sum,
    free_module,
    hom_bimodule,
    module_from_json,
    module_to_json,
    multiplication_surjection,
    quotient_module,
    regular_module,
    submodule,
    validate_module,
)
from .stab import (
    StableCenterResult,
    StableHomResult,
    Tate0Result,
    enveloping_comparison,
    factoring_ideal_oracle,
    frobenius_ideal,
    hom_A,
    null_homotopy_operator,
    shift_minus,
    shift_plus,
    stable_center,
    stable_center_via_enveloping,
    stable_ext,
    stable_hom,
    tate0,
)
from .catalog import (
    AlgebraInstance,
    GroupTable,
    cyclic_group,
    group_algebra,
    group_from_string,
    klein_four_group,
    symmetric_group_3,
    trivial_module,
    truncated_module,
    truncated_polynomial,
    truncated_projection,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraInstance",
    "Field",
    "FrobeniusSystem",
    "FrobstabError",
    "GroupTable",
    "Matrix",
    "ModuleRep",
    "StableCenterResult",
    "StableHomResult",
    "StructureAlgebra",
    "Subspace",
    "Tate0Result",
    "algebra_from_json",
    "algebra_to_json",
    "bimodule_regular",
    "canonical_embedding",
    "check_identities",
    "cyclic_group",
    "derive_system",
    "direct_sum",
    "enveloping",
    "enveloping_comparison",
    "enveloping_system",
    "factoring_ideal_oracle",
    "free_module",
    "frobenius_element",
    "frobenius_ideal",
    "gram_matrix",
    "group_algebra",
    "group_from_string",
    "hom_A",
    "hom_bimodule",
    "klein_four_group",
    "kron",
    "module_from_json",
    "module_to_json",
    "multiplication_surjection",
    "null_homotopy_operator",
    "opposite",
    "parse_scalar",
    "quotient_module",
    "regular_module",
    "shift_minus",
    "shift_plus",
    "stable_center",
    "stable_center_via_enveloping",
    "stable_ext",
    "stable_hom",
    "submodule",
    "subspace_intersect",
    "subspace_sum",
    "symmetric_group_3",
    "tate0",
    "tensor",
    "trivial_module",
    "truncated_module",
    "truncated_polynomial",
    "truncated_projection",
    "twist",
    "unvec",
    "validate_module",
    "vec",
]
