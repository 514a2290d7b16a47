"""charpflag: exact characteristic-p computations on flag varieties.

Root data and Weyl combinatorics for the classical groups, decision
procedures for H^i(G/B, L_lambda) in characteristic p, weight-level
Frobenius twists of tautological bundles on Grassmannians, validation of
rigidified root-datum isogenies, and automated non-liftability
certificates for projectivized Frobenius pullbacks.
"""

__version__ = "0.1.0"

from .errors import (
    CharpFlagError,
    DatumMismatchError,
    DimensionMismatchError,
    InternalInconsistencyError,
    LatticeMembershipError,
    NonSimpleRootError,
    NotPrimeError,
    RankRangeError,
    UnsupportedDatumError,
    WeightShapeError,
)
from .lattice import (
    Root,
    RootDatum,
    Weight,
    WeylElement,
    custom_datum,
    dot_reflect,
    is_dominant,
    make_datum,
    make_torus,
    pairing,
    reflect,
    simple_root_coefficients,
    weyl_group,
)
from .cohomology import (
    BwbStatus,
    DigitExpansion,
    FiltrationH1,
    H1Status,
    KempfStatus,
    andersen_h1,
    base_p_digits,
    bwb_char0,
    h1_of_filtration,
    kempf_status,
    weyl_dim,
)
from .bundles import (
    EquivariantBundleWeights,
    end_weights,
    frobenius_twist,
    pullback_filtration,
    tautological_weights,
)
from .rootmorph import (
    MorphismVerdict,
    PMorphismData,
    RigidityVerdict,
    RingChar,
    central_isogeny_etale,
    compose_p_morphisms,
    frobenius_p_morphism,
    frobenius_rigidity_verdict,
    identity_p_morphism,
    validate_p_morphism,
)
from .certificate import (
    CaseRow,
    Certificate,
    VERDICT_INCONCLUSIVE,
    VERDICT_NO_LIFT,
    certificate_from_rows,
    check_equivariant_smoothness,
    classify_weight,
)

__all__ = [
    "__version__",
    # errors
    "CharpFlagError",
    "DatumMismatchError",
    "DimensionMismatchError",
    "InternalInconsistencyError",
    "LatticeMembershipError",
    "NonSimpleRootError",
    "NotPrimeError",
    "RankRangeError",
    "UnsupportedDatumError",
    "WeightShapeError",
    # lattice
    "Root",
    "RootDatum",
    "Weight",
    "WeylElement",
    "custom_datum",
    "dot_reflect",
    "is_dominant",
    "make_datum",
    "make_torus",
    "pairing",
    "reflect",
    "simple_root_coefficients",
    "weyl_group",
    # cohomology
    "BwbStatus",
    "DigitExpansion",
    "FiltrationH1",
    "H1Status",
    "KempfStatus",
    "andersen_h1",
    "base_p_digits",
    "bwb_char0",
    "h1_of_filtration",
    "kempf_status",
    "weyl_dim",
    # bundles
    "EquivariantBundleWeights",
    "end_weights",
    "frobenius_twist",
    "pullback_filtration",
    "tautological_weights",
    # rootmorph
    "MorphismVerdict",
    "PMorphismData",
    "RigidityVerdict",
    "RingChar",
    "central_isogeny_etale",
    "compose_p_morphisms",
    "frobenius_p_morphism",
    "frobenius_rigidity_verdict",
    "identity_p_morphism",
    "validate_p_morphism",
    # certificate
    "CaseRow",
    "Certificate",
    "VERDICT_INCONCLUSIVE",
    "VERDICT_NO_LIFT",
    "certificate_from_rows",
    "check_equivariant_smoothness",
    "classify_weight",
]
