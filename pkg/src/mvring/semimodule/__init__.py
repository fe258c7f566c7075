"""
Semimodule package.

1. Matrices (matrix.py): matrices and row vectors over a finite semiring,
   the product ⋆ and the idempotent scan.
2. Modules (module.py): finite semimodules, homomorphism enumeration,
   isomorphism search and brute-force projectivity.
3. Constructions (constructions.py): reducts, subreducts and quotients of
   an MV-algebra as semimodules.
4. Strongness (strong.py): the strong condition and its End(M) cross-check.
5. Tensors (tensor.py): M ⊗ N, bimorphisms and the universal property.
6. Scalars (scalars.py): restriction of scalars and matrices as
   endomorphisms of S^n.
7. Loader (loader.py): text descriptions of modules for the CLI.
"""

from .constructions import (
    Reduct,
    quotient_semimodule,
    reduct_semimodule,
    reduct_semiring,
    subreduct_semimodule,
)
from .loader import load_module
from .matrix import (
    FreeVector,
    SemimoduleError,
    SqMatrix,
    all_matrices,
    apply_matrix,
    characteristic,
    identity_matrix,
    idempotent_scan,
    is_idempotent,
    matrix_join,
    matrix_star,
    zero_matrix,
)
from .module import (
    FiniteSemimodule,
    ProjectivityResult,
    SemimoduleMap,
    basis_hom,
    brute_force_projective,
    enumerate_homs,
    find_isomorphism,
    free_semimodule,
    identity_hom,
    is_isomorphic,
    row_semimodule,
    vector,
)
from .scalars import (
    FullnessReport,
    HomSemiringCheck,
    hom_from_matrix,
    hom_semiring_check,
    is_full_embedding,
    matrix_from_hom,
    restrict_scalars,
)
from .strong import (
    EndomorphismCheck,
    StrongnessResult,
    is_strong,
    join_endomorphisms,
    strong_via_endomorphisms,
)
from .tensor import (
    TensorProduct,
    UniversalPropertyReport,
    bimorphism_violation,
    canonical_bimorphism,
    check_universal_property,
    enumerate_bimorphisms,
    tensor_product,
    tensor_swap_isomorphism,
)

__all__ = [
    # Matrices
    "FreeVector",
    "SemimoduleError",
    "SqMatrix",
    "all_matrices",
    "apply_matrix",
    "characteristic",
    "identity_matrix",
    "idempotent_scan",
    "is_idempotent",
    "matrix_join",
    "matrix_star",
    "zero_matrix",
    # Modules
    "FiniteSemimodule",
    "ProjectivityResult",
    "SemimoduleMap",
    "basis_hom",
    "brute_force_projective",
    "enumerate_homs",
    "find_isomorphism",
    "free_semimodule",
    "identity_hom",
    "is_isomorphic",
    "row_semimodule",
    "vector",
    # Constructions
    "Reduct",
    "quotient_semimodule",
    "reduct_semimodule",
    "reduct_semiring",
    "subreduct_semimodule",
    "load_module",
    # Strongness
    "EndomorphismCheck",
    "StrongnessResult",
    "is_strong",
    "join_endomorphisms",
    "strong_via_endomorphisms",
    # Tensors
    "TensorProduct",
    "UniversalPropertyReport",
    "bimorphism_violation",
    "canonical_bimorphism",
    "check_universal_property",
    "enumerate_bimorphisms",
    "tensor_product",
    "tensor_swap_isomorphism",
    # Scalars
    "FullnessReport",
    "HomSemiringCheck",
    "hom_from_matrix",
    "hom_semiring_check",
    "is_full_embedding",
    "matrix_from_hom",
    "restrict_scalars",
]
