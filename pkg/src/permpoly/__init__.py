"""Polynomials representing functions Z_p -> Z_p, with a focus on transpositions."""

from .errors import (
    CompositeModulus,
    DegeneratePair,
    DivisionByZero,
    EvenModulus,
    InexactDivision,
    InvalidTable,
    KOutOfRange,
    ModulusMismatch,
    NotARoot,
    OutOfRange,
    PermpolyError,
    TooLarge,
    VerificationFailure,
)
from .interpolation import FunctionTable, functions_equal, interpolate, table_of, vanishing_poly
from .modular import PrimeModulus, is_prime, mod_inv, mod_pow, primes_up_to, validate_prime
from .permutations import (
    MomentProfile,
    Report,
    TranspositionSpec,
    canonical_degree_via_moments,
    chen_mullen_raw,
    hermite_scan,
    is_permutation,
    moment,
    moment_profile,
    transposition_chen_mullen,
    transposition_general,
    transposition_rational,
    transposition_simple,
    verify_transposition_forms,
)
from .polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    lhopital_eval,
    poly_arith,
    poly_compose,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_pow,
    synthetic_divide,
)

__version__ = "0.1.0"
