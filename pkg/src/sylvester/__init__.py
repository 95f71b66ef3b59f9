"""Exact verification of Sylvester's identity and its relatives.

For distinct x_1..x_n in a field and any d >= 0,

    sum_i x_i**d / prod_{j != i} (x_i - x_j) = h_{d-n+1}(x_1, ..., x_n).

The package evaluates both sides over the rationals, a prime field or float64
and cross-checks them along several independent routes.
"""

from .fields import (
    FLOAT64,
    MERSENNE_61,
    RATIONAL,
    FieldConfig,
    Float64Field,
    NotInvertibleError,
    PrimeField,
    PrimeFieldElement,
    RationalField,
    field_inverse,
    field_pow,
    prime_field,
    rat_normalize,
)
from .identities import (
    IDENTITIES,
    DistinctnessError,
    IdentityReport,
    NodeSet,
    ParameterError,
    barycentric_weights,
    dilcher_check,
    egf_truncated_check,
    extended_sylvester_check,
    lagrange_denominators,
    lagrange_interpolate,
    remainder_closed_form,
    s_via_order_n_recurrence,
    s_via_sylvester_recurrence,
    verify_euler,
    verify_extended_euler,
    verify_f2,
    verify_newton_relation,
    verify_remainder,
    verify_sylvester,
    weighted_power_sum,
)
from .poly import Polynomial, poly_divrem, poly_eval, poly_mul, vieta_from_roots
from .symfun import (
    e_bruteforce,
    e_omit,
    e_via_vieta,
    enum_compositions,
    h_bruteforce,
    h_fast,
    h_sequence,
)

__version__ = "0.1.0"
