"""Convolution algebras over commutative monoids, with exact and l^1 layers."""

from .convolution import (
    CoefStream,
    FinSupp,
    LazyFunction,
    convolve_finite,
    convolve_mixed,
    convolve_stream,
    delta,
    format_coefficients,
    pointwise_add,
    pointwise_mul,
    read_coefficients,
    support,
)
from .errors import (
    BudgetError,
    ContextMismatch,
    DomainError,
    InfiniteDecomposition,
    NotInvertible,
    ParseError,
    PreconditionError,
    UnsupportedError,
)
from .ideals import (
    IdealClass,
    PolynomialRing,
    PrincipalIdeal,
    QuotientRing,
    ZZ,
    classify_ideal,
    ideal_member,
    kernel_of,
    project,
    quotient_invert,
    verify_homomorphism,
)
from .l1banach import (
    Certificate,
    L1Seq,
    SpectralReport,
    convolve_l1,
    fourier_eval,
    l1_norm,
    neumann_inverse,
    resolvent_certificate,
    spectral_radius_estimate,
    sup_norm_estimate,
)
from .monoid import Integers, MultiIndex, Residues, Wholes, decompose, degree, identity, op
from .poly import (
    Polynomial,
    compose,
    evaluate,
    homogeneous_component,
    parse_polynomial,
    poly_mul,
    total_degree,
)
from .scalars import (
    CC,
    QQ,
    PrimeField,
    characteristic,
    field_invert,
    modulus,
    normalize_rational,
)
from .series import (
    AtLeast,
    LaurentSeries,
    PowerSeries,
    RationalFunction,
    invert_series,
    laurent_add,
    laurent_mul,
    laurent_reciprocal,
    rat_equal,
    rational_to_laurent,
    vanishing_order,
)

__version__ = "0.1.0"
