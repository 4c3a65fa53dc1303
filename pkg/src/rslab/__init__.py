"""Exact index and kernel computations for the spin-3/2 operator.

The package has two legs.  One computes index-theoretic invariants of
complete intersections from characteristic classes, in exact rational
arithmetic throughout.  The other decomposes the spin-3/2 bundle under
the special holonomy groups and turns harmonic-theory statements into
Betti- and Hodge-number formulas for the kernel.  A checked-in
regression manifest ties every headline number to an independent route.
"""

from .charclass import (
    ChernProfile,
    euler_characteristic,
    product_rs_index,
    rs_index,
    verify_dimension_identities,
)
from .errors import ConsistencyError, InputError, NotApplicableError
from .holonomy import (
    HolonomyModel,
    TopologicalInput,
    family_index,
    holonomy_model,
    hyperkahler_kernel_identity,
    kernel_dimension,
    parallel_rs_dimension,
    parallel_spinor_dimension,
    product_parallel_from_models,
    product_parallel_rs,
    qk_kernel_analysis,
    sigma_three_half,
    sphere_check,
    spin7_betti_identity,
    symmetric_space_catalog,
)
from .intersections import (
    CIManifold,
    CISpec,
    ahat_survey,
    build_ci,
    ci_invariants,
    ci_rs_kernel,
    fermat_signature,
    hodge_numbers,
    quadric,
    rs_index_report,
)
from .lie import (
    RepSum,
    RootSystem,
    casimir,
    character_oracle,
    g2,
    irreducible,
    product_system,
    tensor_decompose,
    type_a,
    type_b,
    type_c,
    type_d,
    weight_multiplicities,
    weyl_dim,
)
from .manifest import RegressionManifest

__version__ = "0.1.0"

__all__ = [
    "ChernProfile",
    "CIManifold",
    "CISpec",
    "ConsistencyError",
    "HolonomyModel",
    "InputError",
    "NotApplicableError",
    "RegressionManifest",
    "RepSum",
    "RootSystem",
    "TopologicalInput",
    "ahat_survey",
    "build_ci",
    "casimir",
    "character_oracle",
    "ci_invariants",
    "ci_rs_kernel",
    "euler_characteristic",
    "family_index",
    "fermat_signature",
    "g2",
    "hodge_numbers",
    "holonomy_model",
    "hyperkahler_kernel_identity",
    "irreducible",
    "kernel_dimension",
    "parallel_rs_dimension",
    "parallel_spinor_dimension",
    "product_parallel_from_models",
    "product_parallel_rs",
    "product_rs_index",
    "product_system",
    "qk_kernel_analysis",
    "quadric",
    "rs_index",
    "rs_index_report",
    "sigma_three_half",
    "sphere_check",
    "spin7_betti_identity",
    "symmetric_space_catalog",
    "tensor_decompose",
    "type_a",
    "type_b",
    "type_c",
    "type_d",
    "verify_dimension_identities",
    "weight_multiplicities",
    "weyl_dim",
]
