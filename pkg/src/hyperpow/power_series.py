"""Powers of F(x) = 2F1(1, alpha; alpha+1; x) = alpha * sum_m x^m / (alpha + m).

``eval_power`` uses the single-series form

    F(x)^n = alpha^n n! * sum_m x^m t[n-1, m] / (m + n*alpha)

with ``t`` from :mod:`hyperpow.coefficients`, so each term costs O(1) once
the table exists.  ``cauchy_power_oracle`` multiplies truncated copies of
the base series together instead and shares no code with the table path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientTable, ParameterPoint, build_table
from .errors import ConvergenceError, DomainError, PoleError, TableSizeError
from .opcount import as_array
from .series import (
    ALT_WINDOW,
    CompensatedSum,
    ConvergenceControl,
    MinusOnePolicy,
    SeriesResult,
    geometric_tail,
    sum_alternating,
)
from .special import is_nonpositive_integer

TERM_MARGIN = 64


@dataclass(frozen=True)
class EvaluationPoint:
    x: float
    minus_one_policy: MinusOnePolicy = MinusOnePolicy.ALTERNATING_PAIRING

    def __post_init__(self):
        x = float(self.x)
        if not math.isfinite(x):
            raise DomainError(f"x must be finite, got {self.x!r}")
        if x == 1.0:
            raise DomainError("x = 1 is excluded: the base series diverges there "
                              "(harmonic-type growth, c - a - b = 0)")
        if abs(x) > 1.0:
            raise DomainError(f"|x| <= 1 required, got x = {x!r}")
        if x == -1.0 and MinusOnePolicy(self.minus_one_policy) is MinusOnePolicy.REJECT:
            raise DomainError("x = -1 rejected by minus_one_policy")


def required_terms(x: float, tolerance: float) -> int:
    """Number of table columns an evaluation at ``x`` is allowed to assume."""
    ax = abs(float(x))
    if ax == 1.0:
        return ALT_WINDOW
    if ax == 0.0:
        return TERM_MARGIN
    return math.ceil(math.log(tolerance) / math.log(ax)) + TERM_MARGIN


def _check_base_poles(alpha: float) -> None:
    if float(alpha) == 0.0:
        raise PoleError("alpha = 0 is excluded", where="alpha")
    if is_nonpositive_integer(float(alpha)):
        m = round(-float(alpha))
        raise PoleError(f"alpha + m vanishes at m={m} (alpha={float(alpha)!r})",
                        where="alpha + m", index=(m,))


def _finish(coef, total, terms_used: int, tail_sum: float, ctrl: ConvergenceControl,
            strict: bool, what: str) -> SeriesResult:
    value = float(coef * total)
    tail = abs(float(coef)) * tail_sum
    converged = tail <= ctrl.target(value)
    result = SeriesResult(value, terms_used, tail, converged)
    if strict and not converged:
        raise ConvergenceError(f"{what} not converged after {terms_used} terms (tail {tail:.3g})",
                               result)
    return result


def _sum_power_terms(term, x, limit: int, ctrl: ConvergenceControl, fixed: bool, scale: float):
    """Accumulate ``term(m, x^m)`` for |x| < 1.

    The stopping test is made on ``scale * sum``.  Returns
    ``(sum, terms_used, tail, hit_limit)`` with the tail unscaled.
    """
    acc = CompensatedSum()
    ax = abs(float(x))
    xm = 1.0
    prev = None
    tail = math.inf
    for m in range(limit):
        t = term(m, xm)
        acc.add(t)
        ft = abs(float(t))
        if ax == 0.0:
            return acc.value, m + 1, 0.0, False
        r = ax if not prev else max(ax, ft / prev)
        tail = geometric_tail(ft, r)
        if not fixed and scale * tail <= ctrl.target(scale * float(acc.value)):
            return acc.value, m + 1, tail, False
        prev = ft
        xm = xm * x
    return acc.value, limit, tail, True


def eval_base(alpha: float, x: float, ctrl: ConvergenceControl | None = None, *,
              terms: int | None = None) -> SeriesResult:
    """F(x) = alpha * sum_m x^m / (alpha + m).

    With ``terms`` exactly that many terms are summed and convergence is
    only reported, never enforced.
    """
    ctrl = ctrl or ConvergenceControl()
    EvaluationPoint(x, ctrl.minus_one_policy)
    _check_base_poles(alpha)

    def term(m, xm):
        return xm / (alpha + m)

    if float(x) == -1.0 and terms is None:
        res = sum_alternating(lambda m: (-1.0 if m % 2 else 1.0) / (alpha + m), ctrl)
        return _finish(alpha, res.value, res.terms_used, res.tail_estimate, ctrl, True, "base series")

    return _run(alpha, term, x, ctrl, terms, ctrl.max_terms, "base series")


def _run(coef, term, x, ctrl, terms, limit, what, table_limited=False):
    fixed = terms is not None
    total, used, tail, hit = _sum_power_terms(term, x, terms if fixed else limit, ctrl, fixed,
                                              abs(float(coef)))
    if hit and not fixed and table_limited:
        raise TableSizeError(f"coefficient table exhausted after {used} terms before convergence; "
                             "rebuild with more terms")
    return _finish(coef, total, used, tail, ctrl, not fixed, what)


def eval_power(alpha: float, n: int, x: float, table: CoefficientTable,
               ctrl: ConvergenceControl | None = None, *, terms: int | None = None) -> SeriesResult:
    """F(x)^n from the coefficient table (level ``n-1`` is read).

    Raises TableSizeError when the table has fewer levels or columns than
    the evaluation needs, and ConvergenceError at the term cap.
    """
    ctrl = ctrl or ConvergenceControl()
    if int(n) != n or n < 1:
        raise ValueError(f"power n must be a positive integer, got {n!r}")
    n = int(n)
    EvaluationPoint(x, ctrl.minus_one_policy)
    if float(table.alpha) != float(alpha):
        raise ValueError(f"table was built for alpha={table.alpha!r}, not {float(alpha)!r}")
    if table.n_max < n - 1:
        raise TableSizeError(f"power {n} needs table level {n - 1}, table has n_max={table.n_max}")

    need = terms if terms is not None else min(required_terms(x, ctrl.tolerance), ctrl.max_terms)
    if table.m_max + 1 < need:
        raise TableSizeError(f"evaluation at x={float(x)!r} needs {need} table columns, "
                             f"table has {table.m_max + 1}")
    ParameterPoint(float(alpha)).check(n, table.m_max)

    row = table.row(n - 1).tolist()
    n_alpha = n * alpha
    coef = alpha ** n * math.factorial(n)

    if float(x) == -1.0 and terms is None:
        res = sum_alternating(lambda m: (-row[m] if m % 2 else row[m]) / (m + n_alpha), ctrl)
        return _finish(coef, res.value, res.terms_used, res.tail_estimate, ctrl, True, "power series")

    def term(m, xm):
        return row[m] * xm / (m + n_alpha)

    limit = min(table.m_max + 1, ctrl.max_terms)
    return _run(coef, term, x, ctrl, terms, limit, "power series",
                table_limited=table.m_max + 1 < ctrl.max_terms)


def evaluate_power(alpha: float, n: int, x: float,
                   ctrl: ConvergenceControl | None = None) -> SeriesResult:
    """Build a suitably sized table and evaluate F(x)^n."""
    ctrl = ctrl or ConvergenceControl()
    EvaluationPoint(x, ctrl.minus_one_policy)
    m_max = min(ctrl.max_terms, 4 * required_terms(x, ctrl.tolerance)) - 1
    table = build_table(alpha, max(n - 1, 0), m_max)
    return eval_power(alpha, n, x, table, ctrl)


def cauchy_power_oracle(alpha: float, n: int, x: float, truncation: int) -> float:
    """F(x)^n from ``n - 1`` explicit convolutions of the truncated base series.

    O(n * truncation^2) on purpose; the truncation error is the caller's.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"power n must be a positive integer, got {n!r}")
    if truncation < 1:
        raise ValueError(f"truncation must be at least 1, got {truncation!r}")
    EvaluationPoint(x)
    _check_base_poles(alpha)

    base = as_array([alpha / (alpha + m) for m in range(truncation)])
    power = base
    for _ in range(int(n) - 1):
        power = np.convolve(power, base)[:truncation]
    value = 0.0
    for c in reversed(power.tolist()):
        value = value * x + c
    return value
