"""reflexa: exact homological condition checking for finite-dimensional algebras.

The library computes grades and strong grades, (l,n)-conditions,
dominant dimension, reflexive hulls, kernels/cokernels/conflations of
reflexive modules, Serre-subcategory exact structures, and endomorphism
algebras of generator-cogenerators, entirely in exact arithmetic over
prime fields or the rationals.
"""

from .algebra import FiniteDimAlgebra, Quiver, bound_quiver_algebra, from_table
from .errors import (
    BadIdempotentsError,
    BadUnitError,
    BudgetExceededError,
    ConditionFailsError,
    InfiniteDimensionalError,
    NonAssociativeError,
    NotBasicError,
    NotInDError,
    NotPairwiseNonisoError,
    PreconditionUnverifiedError,
    ReflexaError,
    SideMismatchError,
    TheoremViolationError,
    UndecidedError,
)
from .fields import FieldSpec, parse_field
from .homology import (
    AtLeast,
    FourTermSequence,
    Resolution,
    ab_sequence,
    evaluation,
    ext_dim,
    ext_regular_module,
    grade,
    min_inj_resolution_of_regular,
    min_proj_resolution,
    pd_at_most,
    projective_dimension,
    sgrade,
    sgrade_at_least,
    sgrade_oracle,
    star_dual,
    star_dual_map,
    tor,
    transpose,
)
from .linalg import Matrix, kernel_basis, rank, rref, solve
from .modules import (
    LEFT,
    RIGHT,
    Module,
    ModuleMap,
    cokernel,
    composition_factors,
    d_dual,
    direct_sum,
    enumerate_submodules,
    hom_space,
    image,
    injective,
    injective_envelope,
    is_indecomposable,
    is_isomorphic,
    kernel,
    module_from_arrows,
    module_from_generators,
    module_from_raw,
    projective,
    projective_cover,
    regular_module,
    simple,
    socle,
    top,
    zero_module,
)
from .morita import (
    EndAlgebra,
    SummandList,
    end_algebra,
    hom_functor,
    hom_functor_map,
    is_cogenerator,
    is_generator,
    reflexive_equivalence_check,
    verify_equivalence,
)
from .refl import (
    Budget,
    CertifyResult,
    ConditionReport,
    ConflationVerdict,
    HullResult,
    SerreStructure,
    certify_abelian,
    certify_quasi_abelian,
    condition_report,
    dominant_dimension,
    is_conflation,
    is_n_torsion_free,
    is_reflexive,
    is_torsion,
    is_torsion_free,
    ln_condition,
    refl_cokernel,
    refl_kernel,
    reflexive_hull,
    serre_exact_structure,
    two_sided_22,
)

__version__ = "0.1.0"
