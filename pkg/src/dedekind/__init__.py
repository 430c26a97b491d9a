"""Exact arithmetic for Dedekind sums.

Evaluation (definitional and logarithmic-time), the three-term relation,
equality classes of S(m,n) over the units mod n, and constructions of
families of arguments whose sums provably coincide, for prime-power and
square-free moduli. All values are exact rationals; no floating point.
"""

from .arith import (
    Rational,
    ResidueSystem,
    crt,
    euler_phi,
    ext_gcd,
    factorize,
    gcd,
    is_prime,
    is_square_free,
    legendre,
    mod_inverse,
    sqrt_mod_prime,
)
from .core import (
    DedekindEval,
    ThreeTerm,
    dedekind_fast,
    dedekind_oracle,
    evaluate,
    sawtooth,
    three_term,
)
from .equality import (
    IDENTICAL,
    INTEGER_DIFFERENCE_ONLY,
    NON_OBVIOUS_EQUAL,
    OBVIOUS_INVERSE,
    UNEQUAL,
    BoundsReport,
    EqualityClass,
    PairVerdict,
    PivotStats,
    bounds_report,
    classify_pair,
    equality_classes,
    integer_difference,
    necessary_condition,
    non_obvious_pairs,
    partner_stats,
    units,
    value_map,
)
from .errors import (
    BadEps,
    DuplicatePrime,
    HypothesisViolated,
    IneligiblePrime,
    ModuliNotCoprime,
    NonPositiveQ,
    NotCoprime,
    NotOddPrime,
    NotSquareFree,
    RangeViolated,
)
from .families import (
    TABLE1_TS,
    PowerFamily,
    QuadraticFamily,
    corollary1_family,
    corollary2_classify,
    corollary3_family,
    corollary4_family,
    decompose,
    shift_t,
    table1_sieve,
    theorem1_family,
    theorem2_value,
)

__version__ = "0.1.0"
