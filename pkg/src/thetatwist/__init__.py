"""Exact mod-ell computations with level-1 eigenforms.

The package computes truncated q-expansions of the one-dimensional cusp
forms delta_k over F_ell, searches for theta-twist relations identifying a
weight k > ell+1 form with a twist of one of weight k' <= ell+1, and
independently verifies projective polynomials of degree ell+1 by comparing
their factorization patterns mod p with predicted Frobenius cycle types.
"""

from .errors import (
    CoefficientMismatch,
    DuplicateTerm,
    InsufficientPrecision,
    ModulusMismatch,
    NonMonicWarning,
    NotFound,
    NotSquarefree,
    ParseError,
    PrimeMismatch,
    RamifiedPrime,
    ThetaTwistError,
    UnsupportedWeight,
    WeightIncongruent,
    ZeroElement,
)
from .ffield import (
    QuadElt,
    Residue,
    find_nonresidue,
    is_prime,
    legendre,
    mod_pow,
    mult_order,
    primes_upto,
    quad_mult_order,
    sqrt_mod,
)
from .galrep import (
    AMBIGUOUS,
    NONSPLIT,
    SPLIT,
    CharpolData,
    FrobeniusClass,
    ScreeningReport,
    charpol_data,
    frobenius_class,
    predicted_degree_pattern,
    screen_exceptional,
)
from .polyverify import (
    BUNDLED_LABELS,
    ModPoly,
    ProjPolyRecord,
    VerificationReport,
    bundled_record,
    ddf,
    is_squarefree_mod,
    load_poly_file,
    parse_poly,
    poly_gcd_mod,
    reduce_mod,
    verify_record,
)
from .qseries import (
    SUPPORTED_WEIGHTS,
    FormType,
    QExpansion,
    delta_k,
    eisenstein,
    equal_upto,
    hasse,
    index_gamma1,
    series_mul,
    sturm_bound,
    theta,
    theta_power,
)
from .twist import (
    PUBLISHED_TWISTS,
    TwistCertificate,
    check_twist,
    projective_equiv,
    published_discrepancy,
    twist_bound,
    twist_search,
    weight_congruent,
)

__version__ = "0.1.0"
