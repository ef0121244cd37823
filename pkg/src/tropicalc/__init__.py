"""tropicalc: exact calculus for continuous piecewise-polynomial functions.

The package works in the max-plus semiring, where addition of values plays
the role of multiplication and pointwise maximum the role of addition.  All
arithmetic is exact: rationals are `fractions.Fraction`, irrational
breakpoints are algebraic numbers carried with certified isolating
intervals, and every verification report exposes exact residuals.

Layer map (each module builds on the previous ones):

- ``poly``       dense exact polynomials in one variable
- ``numeric``    algebraic numbers, Sturm isolation, exact comparison
- ``polyseg``    continuous piecewise-polynomial functions and their algebra
- ``singular``   jump analysis: roots/poles of every order, classification
- ``nevanlinna`` proximity/counting/characteristic functionals and reports
- ``curves``     tuples of pole-free functions: composites, determinants
- ``manifest``   JSON (de)serialization of named function collections
- ``cli``        the ``tropicalc`` command-line verifier
"""

from .errors import (
    AllNegInfinity,
    ArityMismatch,
    BadWindow,
    DiscontinuityDetected,
    DuplicateName,
    EmptyWindow,
    ManifestError,
    ManifestSyntaxError,
    MissingPurePowers,
    NonLinearComponents,
    NonPositiveRadius,
    NonPositiveValues,
    NotEntireComponent,
    NotWellDefined,
    PointOutsideDisk,
    RadiusBelowThreshold,
    TooManyComponents,
    TropicalcError,
    UnknownReference,
    WindowOutOfRange,
    ZeroPolynomial,
    ZeroShift,
)
from .poly import Polynomial, frac
from .numeric import (
    AlgebraicNumber,
    ExactValue,
    RootValue,
    Scalar,
    algebraic_root,
    compare,
    decimal_string,
    exact_sum,
    real_roots_in,
    refine,
    root_value,
    scalar_eq,
    sort_scalars,
    value_enclosure,
    value_float,
    value_sign,
)
from .polyseg import (
    PiecewiseFunction,
    TropicalFactor,
    TropicalProductSpec,
    ZERO,
    constant,
    evaluate,
    evaluate_jet,
    from_tropical_product,
    governing_segment,
    linear_combine,
    normalize,
    piecewise,
    plus_part,
    pointwise_mul,
    power,
    reflect,
    scale,
    shift,
    tropical_plus,
)
from .singular import (
    Classification,
    JumpMatrix,
    JumpProfile,
    POLE,
    ROOT,
    Singularity,
    SingularityTable,
    classify,
    entire_decomposition,
    jump_matrix,
    omega_at,
    scan,
)
from .nevanlinna import (
    GrowthEstimates,
    HyperexpResult,
    JensenReport,
    Lemma44Report,
    POLES_OF_F,
    POLES_OF_NEG_F,
    PoissonJensenReport,
    ProfileFlags,
    RadiusProfile,
    characteristic,
    characteristic_profile,
    counting,
    counting_difference,
    counting_oracle,
    counting_profile,
    growth_estimates,
    hyperexp,
    jensen_balance,
    jensen_report,
    lemma31_sum,
    lemma44_check,
    log_difference,
    poisson_jensen,
    profile_bundle,
    profile_flags,
    proximity,
    proximity_profile,
)
from .curves import (
    CasoratianBalanceReport,
    FermatForm,
    FermatReport,
    SmtReport,
    TropicalCurve,
    TropicalPolynomialMap,
    cartan,
    cartan_profile,
    casoratian,
    casoratian_balance,
    check_reduced,
    compose_fermat,
    compose_tropical,
    curve,
    fermat_bounds,
    smt_homogeneous_check,
)
from .manifest import Manifest, load_manifest, parse_manifest, serialize_manifest

__version__ = "0.1.0"

__all__ = [
    "AllNegInfinity",
    "AlgebraicNumber",
    "ArityMismatch",
    "BadWindow",
    "CasoratianBalanceReport",
    "Classification",
    "DiscontinuityDetected",
    "DuplicateName",
    "EmptyWindow",
    "ExactValue",
    "FermatForm",
    "FermatReport",
    "GrowthEstimates",
    "HyperexpResult",
    "JensenReport",
    "JumpMatrix",
    "JumpProfile",
    "Lemma44Report",
    "Manifest",
    "ManifestError",
    "ManifestSyntaxError",
    "MissingPurePowers",
    "NonLinearComponents",
    "NonPositiveRadius",
    "NonPositiveValues",
    "NotEntireComponent",
    "NotWellDefined",
    "POLE",
    "POLES_OF_F",
    "POLES_OF_NEG_F",
    "PiecewiseFunction",
    "PointOutsideDisk",
    "PoissonJensenReport",
    "Polynomial",
    "ProfileFlags",
    "ROOT",
    "RadiusBelowThreshold",
    "RadiusProfile",
    "RootValue",
    "Scalar",
    "Singularity",
    "SingularityTable",
    "SmtReport",
    "TooManyComponents",
    "TropicalCurve",
    "TropicalFactor",
    "TropicalPolynomialMap",
    "TropicalProductSpec",
    "TropicalcError",
    "UnknownReference",
    "WindowOutOfRange",
    "ZERO",
    "ZeroPolynomial",
    "ZeroShift",
    "algebraic_root",
    "cartan",
    "cartan_profile",
    "casoratian",
    "casoratian_balance",
    "characteristic",
    "characteristic_profile",
    "check_reduced",
    "classify",
    "compare",
    "compose_fermat",
    "compose_tropical",
    "constant",
    "counting",
    "counting_difference",
    "counting_oracle",
    "counting_profile",
    "curve",
    "decimal_string",
    "entire_decomposition",
    "evaluate",
    "evaluate_jet",
    "exact_sum",
    "fermat_bounds",
    "frac",
    "from_tropical_product",
    "governing_segment",
    "growth_estimates",
    "hyperexp",
    "jensen_balance",
    "jensen_report",
    "jump_matrix",
    "lemma31_sum",
    "lemma44_check",
    "linear_combine",
    "load_manifest",
    "log_difference",
    "normalize",
    "omega_at",
    "parse_manifest",
    "piecewise",
    "plus_part",
    "pointwise_mul",
    "poisson_jensen",
    "power",
    "profile_bundle",
    "profile_flags",
    "proximity",
    "proximity_profile",
    "real_roots_in",
    "refine",
    "reflect",
    "root_value",
    "scalar_eq",
    "scale",
    "scan",
    "serialize_manifest",
    "shift",
    "smt_homogeneous_check",
    "sort_scalars",
    "tropical_plus",
    "value_enclosure",
    "value_float",
    "value_sign",
    "__version__",
]
