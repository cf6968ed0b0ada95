"""Exact q-deformed Euler-Barnes numbers, p-adic measures, and p-adic
L-values, all in rational / truncated p-adic arithmetic, plus machine
verification of the identities relating them."""

from .errors import (
    BudgetError,
    ExponentAlignmentError,
    InternalError,
    PoleError,
    PrecisionExhaustedError,
    PreconditionError,
    QBarnesError,
)
from .exact_numbers import (
    INFINITY,
    PadicContext,
    PadicNumber,
    Rational,
    agreement_valuation,
    format_rational,
    is_prime,
    padic_exp,
    padic_log,
    padic_pow,
    parse_rational,
    teichmuller,
    to_padic,
    valuation,
)
from .qnum import FractionalArg, QBase, qbracket, qbracket_base, qbracket_z
from .series import TruncatedSeries, classical_gf_coefficients, q_gf_coefficients
from .euler_barnes import (
    BarnesParams,
    Poly,
    RationalFunctionQ,
    distribution_check,
    h_addition,
    h_carlitz,
    h_closed,
    h_rational_in_q,
    limit_q_to_1,
    poly_gcd,
)
from .padic_integration import (
    DEFAULT_BUDGET,
    AdmissibleU,
    MeasureCell,
    measure_E_value,
    measure_additivity_check,
    measure_bound_check,
    mu_value,
    multi_riemann_integral,
    prop5_check,
    riemann_integral,
)
from .characters_lfunctions import (
    DirichletCharacter,
    UnitProjection,
    angle_bracket,
    char_eval,
    h_chi,
    kummer_check,
    l_at_negative,
    l_riemann,
    twist_teichmuller,
)
from .verify import SUITES, CheckResult, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AdmissibleU",
    "BarnesParams",
    "BudgetError",
    "CheckResult",
    "DEFAULT_BUDGET",
    "DirichletCharacter",
    "ExponentAlignmentError",
    "FractionalArg",
    "INFINITY",
    "InternalError",
    "MeasureCell",
    "PadicContext",
    "PadicNumber",
    "PoleError",
    "Poly",
    "PrecisionExhaustedError",
    "PreconditionError",
    "QBarnesError",
    "QBase",
    "Rational",
    "RationalFunctionQ",
    "SUITES",
    "SuiteReport",
    "TruncatedSeries",
    "UnitProjection",
    "agreement_valuation",
    "angle_bracket",
    "char_eval",
    "classical_gf_coefficients",
    "distribution_check",
    "format_rational",
    "h_addition",
    "h_carlitz",
    "h_chi",
    "h_closed",
    "h_rational_in_q",
    "is_prime",
    "kummer_check",
    "l_at_negative",
    "l_riemann",
    "limit_q_to_1",
    "measure_E_value",
    "measure_additivity_check",
    "measure_bound_check",
    "mu_value",
    "multi_riemann_integral",
    "padic_exp",
    "padic_log",
    "padic_pow",
    "parse_rational",
    "poly_gcd",
    "prop5_check",
    "q_gf_coefficients",
    "qbracket",
    "qbracket_base",
    "qbracket_z",
    "riemann_integral",
    "run_suite",
    "teichmuller",
    "to_padic",
    "twist_teichmuller",
    "valuation",
]
