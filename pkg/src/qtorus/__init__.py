"""Exact dimension computations for quantum tori and their tensor products."""

from .elements import TwistedElement, cocycle, commutator_units, multiply, support
from .harness import (
    CampaignConfig,
    Report,
    Verdict,
    check_additivity,
    check_strict,
    check_superadditivity,
    check_upper_bound,
    diagonal_sublattice,
    gen_commutative,
    gen_independent,
    gen_random,
    gen_transpose_pair,
    run_campaign,
)
from .instances import InstanceFormatError, parse, serialize
from .lattice import Sublattice, hnf, intmat, kernel, rank, saturate, skew_rank
from .pairing import (
    DimensionResult,
    MultiparameterMatrix,
    Pairing,
    PairingError,
    center_is_F,
    center_is_trivial,
    is_commutative,
    pairing_of,
    radical,
    restrict,
    restrict_matrix,
    tensor,
    transpose,
)
from .solver import (
    InexactDimensionError,
    ResourceLimitError,
    SolverOptions,
    brute_force_dimension,
    codimension,
    dimension,
    free_reduction,
    single_form_dimension,
)
from .valuegroup import GroupElement, ValueGroup, ValueGroupError, combine, is_identity, merge

__version__ = "0.1.0"

__all__ = [
    "CampaignConfig",
    "DimensionResult",
    "GroupElement",
    "InexactDimensionError",
    "InstanceFormatError",
    "MultiparameterMatrix",
    "Pairing",
    "PairingError",
    "Report",
    "ResourceLimitError",
    "SolverOptions",
    "Sublattice",
    "TwistedElement",
    "ValueGroup",
    "ValueGroupError",
    "Verdict",
    "brute_force_dimension",
    "center_is_F",
    "center_is_trivial",
    "check_additivity",
    "check_strict",
    "check_superadditivity",
    "check_upper_bound",
    "cocycle",
    "codimension",
    "combine",
    "commutator_units",
    "diagonal_sublattice",
    "dimension",
    "free_reduction",
    "gen_commutative",
    "gen_independent",
    "gen_random",
    "gen_transpose_pair",
    "hnf",
    "intmat",
    "is_commutative",
    "is_identity",
    "kernel",
    "merge",
    "multiply",
    "pairing_of",
    "parse",
    "radical",
    "rank",
    "restrict",
    "restrict_matrix",
    "run_campaign",
    "saturate",
    "serialize",
    "single_form_dimension",
    "skew_rank",
    "support",
    "tensor",
    "transpose",
]
