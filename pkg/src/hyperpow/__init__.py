"""Integer powers of F(x) = 2F1(1, alpha; alpha+1; x) and related identities.

    >>> from hyperpow import evaluate_power
    >>> round(evaluate_power(1.0, 2, 0.5).value, 11)
    1.92181205567
"""

from .coefficients import CoefficientTable, ParameterPoint, build_table, excluded_alphas
from .errors import ConvergenceError, DomainError, HyperpowError, PoleError, TableSizeError
from .identities import (
    IdentityReport,
    run_samples,
    verify_eq1,
    verify_eq2,
    verify_eq5,
    verify_eq8,
    verify_eq9,
    verify_eq10,
    verify_eq11,
    verify_eq12,
)
from .power_series import (
    EvaluationPoint,
    cauchy_power_oracle,
    eval_base,
    eval_power,
    evaluate_power,
    required_terms,
)
from .series import ConvergenceControl, MinusOnePolicy, SeriesResult
from .special import PFQSpec, cot_pi, digamma, pfq_truncated

__all__ = [
    "CoefficientTable", "ConvergenceControl", "ConvergenceError", "DomainError",
    "EvaluationPoint", "HyperpowError", "IdentityReport", "MinusOnePolicy", "PFQSpec",
    "ParameterPoint", "PoleError", "SeriesResult", "TableSizeError", "build_table",
    "cauchy_power_oracle", "cot_pi", "digamma", "eval_base", "eval_power", "evaluate_power",
    "excluded_alphas", "pfq_truncated", "required_terms", "run_samples", "verify_eq1",
    "verify_eq2", "verify_eq5", "verify_eq8", "verify_eq9", "verify_eq10", "verify_eq11",
    "verify_eq12",
]
