"""Numerical checks of the finite-sum and infinite-series identities.

Each ``verify_*`` function evaluates both sides independently and returns an
:class:`IdentityReport` carrying the raw side values, so a failing identity
is reported rather than raised.  Parameters on a pole raise PoleError before
anything is summed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace

import numpy as np

from .coefficients import build_table
from .errors import DomainError, PoleError
from .power_series import EvaluationPoint, evaluate_power
from .series import ConvergenceControl, sum_alternating, sum_richardson
from .special import PFQSpec, cot_pi, digamma, near_integer, pfq_truncated

TOLERANCES = {
    "eq1": 1e-12, "eq2": 1e-12, "eq5": 1e-12,
    "eq8": 1e-8, "eq11": 1e-8,
    "eq9": 1e-6, "eq10": 1e-6, "eq12": 1e-6,
}

# Outer sums are driven well below the identity tolerance.
_OUTER_MARGIN = 1e-3

EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    parameters: dict
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    terms_used: int
    passed: bool
    notes: str = ""
    tolerance: float = 0.0
    tail_estimate: float = 0.0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "params": dict(self.parameters),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "terms_used": self.terms_used,
            "pass": self.passed,
            "notes": self.notes,
        }


def _diagnose(lhs: float, rhs: float) -> str:
    if rhs != 0.0 and abs(lhs + rhs) <= 1e-6 * abs(rhs):
        return "sides agree up to sign (possible sign flip)"
    ratio = lhs / rhs if rhs != 0.0 else math.inf
    return f"lhs - rhs = {lhs - rhs:.17g}; lhs / rhs = {ratio:.17g}"


def _report(identity: str, params: dict, lhs: float, rhs: float, terms: int,
            notes: list[str] | None = None, tail: float = 0.0) -> IdentityReport:
    tol = TOLERANCES[identity]
    lhs, rhs = float(lhs), float(rhs)
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        raise ArithmeticError(f"{identity}: non-finite side value (lhs={lhs!r}, rhs={rhs!r})")
    abs_res = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_res = abs_res / scale if scale > 0.0 else 0.0
    passed = rel_res <= tol
    notes = list(notes or [])
    if not passed:
        notes.append("residual above tolerance: " + _diagnose(lhs, rhs))
    return IdentityReport(identity, params, lhs, rhs, abs_res, rel_res, terms, passed,
                          "; ".join(notes), tol, tail)


def _require_nonzero(value: float, what: str, index: tuple[int, ...] | None = None) -> None:
    if abs(value) <= 8.0 * 2.220446049250313e-16:
        raise PoleError(f"{what} vanishes" + (f" at index {index}" if index else ""),
                        where=what, index=index)


def _outer_ctrl(ctrl: ConvergenceControl, identity: str) -> ConvergenceControl:
    return replace(ctrl, tolerance=max(ctrl.tolerance, TOLERANCES[identity] * _OUTER_MARGIN))


# ---------------------------------------------------------------------------
# finite sums

def verify_eq1(alpha: float, k: int) -> IdentityReport:
    """sum_n 1/(k-n+a) sum_{m<=n} 1/(m+a) = 2 sum_n 1/(n+2a) sum_{m<=n} 1/(m+a)."""
    a = float(alpha)
    if k < 0:
        raise ValueError("k must be nonnegative")
    for j in range(k + 1):
        _require_nonzero(j + a, "j + alpha", (j,))
        _require_nonzero(j + 2 * a, "n + 2*alpha", (j,))

    lhs_terms, rhs_terms = [], []
    for n in range(k + 1):
        inner = math.fsum(1.0 / (m + a) for m in range(n + 1))
        lhs_terms.append(inner / (k - n + a))
        rhs_terms.append(inner / (n + 2 * a))
    lhs = math.fsum(lhs_terms)
    rhs = 2.0 * math.fsum(rhs_terms)
    return _report("eq1", {"alpha": a, "k": k}, lhs, rhs, (k + 1) * (k + 2))


def nested_eq2(alpha: float, k: int, n: int) -> tuple[float, float]:
    """Both sides of the depth-``n`` chain identity by enumerating ordered index tuples.

    Every tuple ``m_1 <= ... <= m_n <= k`` contributes a product of
    reciprocals; no coefficient table is involved.  Cost is C(k+n, n).
    """
    a = float(alpha)
    lhs, rhs = [], []
    for ms in itertools.combinations_with_replacement(range(k + 1), n):
        inner = 1.0
        for j, m in enumerate(ms[:-1], start=1):
            inner /= m + j * a
        top = ms[-1]
        lhs.append(inner / (k - top + a))
        rhs.append(inner / (top + n * a))
    return math.fsum(lhs), n * math.fsum(rhs)


NESTED_LIMITS = (12, 3)


def verify_eq2(alpha: float, k: int, n: int) -> IdentityReport:
    """sum_m t[n-1, m] / (k-m+a) = n t[n, k], from the coefficient table.

    For small ``k`` and ``n`` the literal nested sums are evaluated too and
    their agreement with the table path is recorded in the notes.
    """
    a = float(alpha)
    if n < 2:
        raise ValueError("eq2 needs n >= 2")
    table = build_table(a, n, k)
    lhs = math.fsum(table.get(n - 1, m) / (k - m + a) for m in range(k + 1))
    rhs = n * table.get(n, k)
    notes = []
    if k <= NESTED_LIMITS[0] and n <= NESTED_LIMITS[1]:
        bl, br = nested_eq2(a, k, n)
        dl = abs(bl - lhs) / max(abs(lhs), 1e-300)
        dr = abs(br - rhs) / max(abs(rhs), 1e-300)
        flag = "agrees" if max(dl, dr) <= TOLERANCES["eq2"] else "DISAGREES"
        notes.append(f"nested-loop oracle {flag} with table path "
                     f"(lhs rel diff {dl:.3g}, rhs rel diff {dr:.3g})")
    return _report("eq2", {"alpha": a, "k": k, "n": n}, lhs, rhs, 2 * (k + 1), notes)


def verify_eq5(alpha: float, k: int, n: int) -> IdentityReport:
    """sum_m t[n-1,m] / ((k-m+a)(m+na)) = (n+1) t[n,k] / (k+(n+1)a)."""
    a = float(alpha)
    if n < 1:
        raise ValueError("eq5 needs n >= 1")
    table = build_table(a, n, k)
    _require_nonzero(k + (n + 1) * a, "k + (n+1)*alpha")
    lhs = math.fsum(table.get(n - 1, m) / ((k - m + a) * (m + n * a)) for m in range(k + 1))
    rhs = (n + 1) * table.get(n, k) / (k + (n + 1) * a)
    return _report("eq5", {"alpha": a, "k": k, "n": n}, lhs, rhs, k + 2)


# ---------------------------------------------------------------------------
# hypergeometric series identities

def _eq8_poles(a: float) -> None:
    if near_integer(2 * a) and 2 * a < 0.5:
        raise PoleError(f"alpha = {a!r} excluded for eq8: 2*alpha must not be a nonpositive "
                        "integer (table denominators m + alpha, m + 2*alpha and the 3F2 "
                        "parameter 2*alpha + 1 vanish)", where="2*alpha")


def verify_eq8(alpha: float, x: float, l_cap: int = 1024,
               ctrl: ConvergenceControl | None = None) -> IdentityReport:
    """F(x)^2 against alpha * sum_l 3F2(2, 2a, a+1+l; 2a+1, a+2+l; x) / ((l+a)(l+a+1)).

    The outer sum is truncated at ``l_cap``; the remainder past N terms is
    approximated with the telescoped weight alpha/(N+alpha) times the next
    3F2 value, and the corrected partial sums are extrapolated in 1/N.
    """
    ctrl = ctrl or ConvergenceControl()
    a, x = float(alpha), float(x)
    EvaluationPoint(x, ctrl.minus_one_policy)
    _eq8_poles(a)

    lhs_res = evaluate_power(a, 2, x, ctrl)
    inner_terms = [0]
    cache: dict[int, float] = {}

    def f(l: int) -> float:
        if l not in cache:
            r = pfq_truncated(PFQSpec((2.0, 2 * a, a + 1 + l), (2 * a + 1, a + 2 + l), x), ctrl)
            inner_terms[0] += r.terms_used
            cache[l] = r.value
        return cache[l]

    outer = sum_richardson(lambda l: a * f(l) / ((l + a) * (l + a + 1)), _outer_ctrl(ctrl, "eq8"),
                           cap=l_cap, order=2, correction=lambda N: a / (N + a) * f(N))
    # each 3F2 is only certified to ctrl.tolerance, and the weights sum to 1
    tail = outer.tail_estimate + ctrl.tolerance * max(1.0, abs(outer.value))
    notes = [f"outer sum over l < {outer.terms_used}, extrapolated; tail estimate {tail:.3g}"]
    return _report("eq8", {"alpha": a, "x": x, "l_cap": l_cap}, lhs_res.value, outer.value,
                   lhs_res.terms_used + inner_terms[0], notes, tail)


def _eq11_poles(a: float) -> None:
    if near_integer(a):
        raise PoleError(f"alpha = {a!r} excluded for eq11: integer alpha puts psi(alpha) or "
                        "psi(1-alpha) on a pole and zeroes a factor l + 1 - alpha or l + alpha",
                        where="alpha integer")
    if a == 0.5:
        raise PoleError("alpha = 1/2 excluded for eq11: the factor alpha/(2*alpha - 1) is singular",
                        where="2*alpha - 1")
    if near_integer(2 * a) and a < 0.5:
        raise PoleError(f"alpha = {a!r} excluded for eq11: 2F1 parameter 2*alpha + 1 is a "
                        "nonpositive integer", where="2*alpha + 1")


def verify_eq11(alpha: float, x: float, l_cap: int = 1024,
                ctrl: ConvergenceControl | None = None) -> IdentityReport:
    """2F1(1,1;a+1;x)^2 against its digamma-weighted 2F1(1,2;.;x) expansion."""
    ctrl = ctrl or ConvergenceControl()
    a, x = float(alpha), float(x)
    if not math.isfinite(x) or abs(x) >= 1.0:
        raise DomainError(f"eq11 needs |x| < 1, got x = {x!r}")
    _eq11_poles(a)

    base = pfq_truncated(PFQSpec((1.0, 1.0), (a + 1,), x), ctrl)
    lhs = base.value ** 2
    lead = pfq_truncated(PFQSpec((1.0, 2.0), (2 * a + 1,), x), ctrl)
    inner_terms = [base.terms_used + lead.terms_used]

    def term(l: int) -> float:
        r = pfq_truncated(PFQSpec((1.0, 2.0), (a + 2 + l,), x), ctrl)
        inner_terms[0] += r.terms_used
        return r.value / ((l + a) * (l + 1 + a) * (l + 1 - a))

    outer = sum_richardson(term, _outer_ctrl(ctrl, "eq11"), cap=l_cap, order=2)
    rhs = (a / (2 * a - 1) * (digamma(a) - digamma(1 - a)) * lead.value
           - 2 * a * a * outer.value)
    tail = 2 * a * a * outer.tail_estimate + ctrl.tolerance * max(1.0, abs(rhs))
    notes = [f"outer sum over l < {outer.terms_used}, extrapolated; tail estimate {tail:.3g}"]
    return _report("eq11", {"alpha": a, "x": x, "l_cap": l_cap}, lhs, rhs, inner_terms[0], notes,
                   tail)


# ---------------------------------------------------------------------------
# digamma sums

def _eq9_poles(a: float) -> None:
    if near_integer(a):
        raise PoleError(f"alpha = {a!r} excluded for eq9: integer alpha zeroes l + 1 - alpha or "
                        "puts psi(alpha), psi(1 - alpha) on a pole", where="alpha integer")
    if near_integer(a - 0.5) and a - 0.5 < 0.5:
        raise PoleError(f"alpha = {a!r} excluded for eq9: psi(alpha - 1/2) has a pole "
                        "(alpha = 1/2, -1/2, -3/2, ...)", where="alpha - 1/2")


def verify_eq9(alpha: float, ctrl: ConvergenceControl | None = None) -> IdentityReport:
    """sum_l [psi((a+l)/2) - psi((a+1+l)/2)] / (l+1-a) against its closed form."""
    ctrl = ctrl or ConvergenceControl()
    a = float(alpha)
    _eq9_poles(a)

    def term(l: int) -> float:
        return (digamma((a + l) / 2) - digamma((a + 1 + l) / 2)) / (l + 1 - a)

    lhs = sum_richardson(term, _outer_ctrl(ctrl, "eq9"))
    rhs = (0.25 * (digamma((1 + a) / 2) - digamma(a / 2)) ** 2
           + (digamma(a) - digamma(a - 0.5)) * (digamma(1 - a) - digamma(a)))
    return _report("eq9", {"alpha": a}, lhs.value, rhs, lhs.terms_used,
                   [f"lhs extrapolated from {lhs.terms_used} terms"], lhs.tail_estimate)


def _eq10_poles(q: float) -> None:
    if near_integer(4 * q):
        raise PoleError(
            f"q = {q!r} excluded for eq10: q must avoid multiples of 1/4 (integers and "
            "half-integers zero the denominators or hit cot poles; q = 1/4 + j/2 puts "
            "psi(2q - 1/2) or cot(2 pi q) on a singular point)", where="4*q integer")


def verify_eq10(q: float, ctrl: ConvergenceControl | None = None) -> IdentityReport:
    """sum_l [psi(q+l) - psi(q+l+1/2)] / ((l+1-q)(l+1/2-q)) against its closed form."""
    ctrl = ctrl or ConvergenceControl()
    q = float(q)
    _eq10_poles(q)

    def term(l: int) -> float:
        return (digamma(q + l) - digamma(q + l + 0.5)) / ((l + 1 - q) * (l + 0.5 - q))

    lhs = sum_richardson(term, _outer_ctrl(ctrl, "eq10"), order=2)
    rhs = ((digamma(0.5 + q) - digamma(q)) ** 2
           + 4 * math.pi * cot_pi(2 * q) * (digamma(2 * q) - digamma(2 * q - 0.5))
           - math.pi * cot_pi(q) / (q - 0.5))
    return _report("eq10", {"q": q}, lhs.value, rhs, lhs.terms_used,
                   [f"lhs extrapolated from {lhs.terms_used} terms"], lhs.tail_estimate)


def eq12_q1_closed_form() -> float:
    """-gamma ln 2 - (ln 2)^2 / 2, the q = 1 value of the alternating digamma sum."""
    ln2 = math.log(2.0)
    return -EULER_GAMMA * ln2 - 0.5 * ln2 * ln2


def _eq12_poles(q: float) -> None:
    if near_integer(2 * q) and q < 0.75:
        raise PoleError(f"q = {q!r} excluded for eq12: for 2q an integer <= 1 a denominator "
                        "l + 2q - 1 vanishes or psi(q), psi(q - 1/2) hits a pole",
                        where="2*q integer <= 1")


def verify_eq12(q: float, ctrl: ConvergenceControl | None = None) -> IdentityReport:
    """sum_l (-1)^l psi(l+q) / (l+2q-1), grouped in pairs, against its closed form."""
    ctrl = ctrl or ConvergenceControl()
    q = float(q)
    _eq12_poles(q)

    def term(l: int) -> float:
        v = digamma(l + q) / (l + 2 * q - 1)
        return -v if l % 2 else v

    lhs = sum_alternating(term, _outer_ctrl(ctrl, "eq12"))
    rhs = (0.5 * digamma(q) * (digamma(q) - digamma(q - 0.5))
           - 0.125 * (digamma((1 + q) / 2) - digamma(q / 2)) ** 2)
    notes = [f"pairs summed to l < 64, Euler transform beyond; tail estimate "
             f"{lhs.tail_estimate:.3g}"]
    if q == 1.0:
        ref = eq12_q1_closed_form()
        notes.append(f"q = 1 closed form -gamma ln2 - ln^2(2)/2 = {ref:.17g}, "
                     f"lhs differs by {abs(lhs.value - ref):.3g}")
    return _report("eq12", {"q": q}, lhs.value, rhs, lhs.terms_used, notes, lhs.tail_estimate)


# ---------------------------------------------------------------------------

DEFAULT_SAMPLES: dict[str, list[dict]] = {
    "eq1": [{"alpha": 0.5, "k": 0}, {"alpha": 1.0, "k": 1}, {"alpha": 0.3, "k": 50}],
    "eq2": [{"alpha": 0.5, "k": 10, "n": 3}, {"alpha": 1.25, "k": 40, "n": 4},
            {"alpha": 0.3, "k": 50, "n": 2}],
    "eq5": [{"alpha": 0.7, "k": 0, "n": 3}, {"alpha": 1.0, "k": 5, "n": 2},
            {"alpha": 0.25, "k": 40, "n": 4}],
    "eq8": [{"alpha": 0.75, "x": 0.0}, {"alpha": 0.75, "x": 0.5}, {"alpha": 0.75, "x": -0.5},
            {"alpha": 0.5, "x": -1.0}],
    "eq9": [{"alpha": 0.3}, {"alpha": 0.7}, {"alpha": 1.25}],
    "eq10": [{"q": 0.15}, {"q": 0.3}, {"q": 0.65}],
    "eq11": [{"alpha": 0.75, "x": 0.0}, {"alpha": 0.75, "x": 0.5}, {"alpha": 0.6, "x": -0.5}],
    "eq12": [{"q": 0.75}, {"q": 1.0}, {"q": 1.25}],
}

VERIFIERS = {
    "eq1": verify_eq1, "eq2": verify_eq2, "eq5": verify_eq5, "eq8": verify_eq8,
    "eq9": verify_eq9, "eq10": verify_eq10, "eq11": verify_eq11, "eq12": verify_eq12,
}


def run_samples(identities=None, samples=None) -> list[IdentityReport]:
    """Run the default (or given) parameter samples in a fixed order."""
    samples = samples or DEFAULT_SAMPLES
    ids = identities or list(VERIFIERS)
    return [VERIFIERS[i](**params) for i in ids for params in samples[i]]
