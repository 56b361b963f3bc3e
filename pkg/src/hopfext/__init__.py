"""Exact verification of split extensions and actions of
(non-associative) bialgebras and Hopf algebras given by structure
constants over the rationals or a prime field."""

from .core import (
    CoreError,
    Field,
    LinMap,
    PrimeField,
    RationalField,
    ShapeError,
    SingularMapError,
    Space,
    Subspace,
    base_space,
    compose,
    equalizer,
    invert,
    parse_field,
    quotient,
    span,
    symmetry,
    tensor,
)
from .structures import (
    BialgebraData,
    Check,
    HopfData,
    StructureError,
    VerificationReport,
    Witness,
    linearize_magma,
    structural_flags,
    trivial_bialgebra,
    verify_structure,
)
from .actions import (
    ActionData,
    ActionError,
    ThetaMap,
    build_theta,
    trivial_action,
    verify_action,
    verify_assoc_conditions,
    verify_hopf_action,
    verify_theta_identities,
)
from .extensions import (
    CleftData,
    ExtensionError,
    FactorizationError,
    HypothesisError,
    MorphismTriple,
    SemidirectProduct,
    SplitExtensionData,
    SplitShortFiveResult,
    build_iso_pair,
    check_reexpressed_action,
    induce_action,
    kernel,
    lambda_from_antipode,
    reconstruct_lambda,
    semidirect,
    split_short_five,
    verify_cleft_exact,
    verify_kernel_cokernel,
    verify_morphism_triple,
    verify_split_extension,
)
from .catalog import CatalogEntry, CatalogError, build, monoid_semidirect_eval

__version__ = "0.1.0"
