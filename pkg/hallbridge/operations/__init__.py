"""
The core functions of `hallbridge`.

They are organised into modules by layer, from finite field arithmetic up to
the Hall algebras.

Each function is callable through its module or directly as an `operations`
function: `hallbridge.operations.modcat.hom_basis` is the same object as
`hallbridge.operations.hom_basis`.
"""

from . import algdef, cpx2, ffalg, hall, modcat
from .algdef import (
    AlgebraData,
    QuiverPresentation,
    canonical_algebra,
    load_presentation,
    path_basis,
    presentation_from_dict,
    standard_modules,
)
from .cpx2 import (
    Complex2,
    ComplexStore,
    c_of_module,
    c_of_module_padded,
    complex_class_id,
    ext1_with_middles_c2,
    hom_count_c2,
    homology,
    is_isomorphic_c2,
    k_acyclic,
    shift,
    strip_acyclics,
)
from .ffalg import TCoeff, rank, rref, solution_space, tcoeff_arith, tpow
from .hall import (
    HallContext,
    dh_mul,
    dhred_mul,
    e_of_module,
    hall_mul,
    i_minus,
    i_plus,
    linear_independence_check,
    normalize_dh,
    raw_c2_product,
    reduce_dh,
    shift_dh,
)
from .modcat import (
    ModuleUniverse,
    Representation,
    aut_order,
    enumerate_modules,
    euler_form,
    ext1_with_middles,
    ext_dims,
    gldim_certificate,
    hall_number_oracle,
    hom_basis,
    is_isomorphic,
    minimal_resolution,
    riedtmann_check,
)
