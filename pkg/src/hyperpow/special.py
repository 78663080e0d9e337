"""Scalar special functions: digamma, cot(pi q), truncated pFq series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConvergenceError, DomainError, PoleError
from .series import (
    CompensatedSum,
    ConvergenceControl,
    MinusOnePolicy,
    SeriesResult,
    geometric_tail,
    sum_alternating,
)

_EPS = 2.220446049250313e-16

# B_2 .. B_14; the asymptotic series uses B_2k / (2k x^2k).
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
)
_ASYMPTOTIC = tuple(float(b / (2 * k)) for k, b in enumerate(_BERNOULLI, start=1))
_SHIFT = 8.0


def near_integer(x: float) -> bool:
    """True when ``x`` is within a few ulps of an integer."""
    return abs(x - round(x)) <= 4.0 * _EPS * max(1.0, abs(x))


def is_nonpositive_integer(x: float) -> bool:
    return x < 0.5 and near_integer(x)


def digamma(x: float) -> float:
    """Digamma function psi(x) for real ``x`` off the poles.

    Positive arguments are shifted above 8 with psi(x+1) = psi(x) + 1/x and
    finished with the asymptotic series; negative ones go through the
    reflection psi(x) = psi(1-x) - pi cot(pi x).
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"digamma argument must be finite, got {x!r}")
    if is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x = {x!r}", where="digamma")
    if x < 0.0:
        return digamma(1.0 - x) - math.pi * cot_pi(x)

    parts = []
    while x < _SHIFT:
        parts.append(-1.0 / x)
        x += 1.0
    r = 1.0 / (x * x)
    poly = 0.0
    for c in reversed(_ASYMPTOTIC):
        poly = (poly + c) * r
    parts += [math.log(x), -0.5 / x, -poly]
    # correctly rounded sum keeps |psi| ~ 1e3 near x ~ 1e-3 within an ulp
    return math.fsum(parts)


def cot_pi(q: float) -> float:
    """cot(pi q), computed from the reduced argument ``q - round(q)``."""
    q = float(q)
    if not math.isfinite(q):
        raise DomainError(f"cot_pi argument must be finite, got {q!r}")
    r = q - round(q)  # exact, |r| <= 1/2
    if abs(r) <= 4.0 * _EPS * max(1.0, abs(q)):
        raise PoleError(f"cot(pi q) has a pole at q = {q!r}", where="cot_pi")
    if abs(r) == 0.5:
        return 0.0
    if abs(r) <= 0.25:
        return 1.0 / math.tan(math.pi * r)
    return math.copysign(math.tan(math.pi * (0.5 - abs(r))), r)


@dataclass(frozen=True)
class PFQSpec:
    """Parameters of ``pFq(numerator; denominator; argument)``."""

    numerator: tuple[float, ...]
    denominator: tuple[float, ...]
    argument: float

    def __init__(self, numerator: Sequence[float], denominator: Sequence[float], argument: float):
        object.__setattr__(self, "numerator", tuple(float(a) for a in numerator))
        object.__setattr__(self, "denominator", tuple(float(b) for b in denominator))
        object.__setattr__(self, "argument", float(argument))
        for j, b in enumerate(self.denominator):
            if is_nonpositive_integer(b):
                raise PoleError(f"denominator parameter b[{j}] = {b!r} is a nonpositive integer",
                                where="pfq denominator", index=(j,))
        x = self.argument
        if not math.isfinite(x) or abs(x) > 1.0:
            raise DomainError(f"pFq argument must satisfy |x| <= 1, got {x!r}")
        if x == 1.0:
            raise DomainError("pFq series is not evaluated at x = 1")
        if x == -1.0:
            excess = sum(self.denominator) - sum(self.numerator)
            if len(self.numerator) != len(self.denominator) + 1 or excess <= -1.0:
                raise DomainError("pFq series diverges at x = -1 for these parameters")

    def ratio(self, m: int) -> float:
        """term(m+1) / term(m)."""
        r = self.argument / (m + 1)
        for a in self.numerator:
            r *= a + m
        for b in self.denominator:
            r /= b + m
        return r

    def terminates(self) -> bool:
        return any(is_nonpositive_integer(a) for a in self.numerator)


class _TermCache:
    """Sequential pFq terms built by multiplying consecutive ratios."""

    def __init__(self, spec: PFQSpec):
        self.spec = spec
        self.terms = [1.0]

    def __call__(self, m: int) -> float:
        terms = self.terms
        while len(terms) <= m:
            k = len(terms) - 1
            terms.append(terms[k] * self.spec.ratio(k))
        return terms[m]


def pfq_truncated(spec: PFQSpec, ctrl: ConvergenceControl | None = None) -> SeriesResult:
    """Sum the generalized hypergeometric series for ``spec``.

    For ``|x| < 1`` the terms are accumulated until the geometric tail bound
    drops under the tolerance; at ``x = -1`` the alternating summer is used
    (subject to ``ctrl.minus_one_policy``).

    Raises ConvergenceError if ``ctrl.max_terms`` is reached first.
    """
    ctrl = ctrl or ConvergenceControl()
    x = spec.argument
    if x == 0.0:
        return SeriesResult(1.0, 1, 0.0, True)
    if x == -1.0:
        if ctrl.minus_one_policy is MinusOnePolicy.REJECT:
            raise DomainError("x = -1 rejected by minus_one_policy")
        if spec.terminates():
            return _sum_finite(spec, ctrl)
        return sum_alternating(_TermCache(spec), ctrl)

    acc = CompensatedSum()
    term = 1.0
    acc.add(term)
    m = 0
    while True:
        r = spec.ratio(m)
        if r == 0.0:
            return SeriesResult(acc.value, m + 1, 0.0, True)
        tail = geometric_tail(term, max(abs(x), abs(r)))
        if tail <= ctrl.target(acc.value):
            return SeriesResult(acc.value, m + 1, tail, True)
        if m + 1 >= ctrl.max_terms:
            result = SeriesResult(acc.value, m + 1, tail, False)
            raise ConvergenceError(f"pFq not converged after {m + 1} terms (tail {tail:.3g})", result)
        term *= r
        acc.add(term)
        m += 1


def _sum_finite(spec: PFQSpec, ctrl: ConvergenceControl) -> SeriesResult:
    acc = CompensatedSum()
    term = 1.0
    m = 0
    while term != 0.0:
        acc.add(term)
        if m + 1 >= ctrl.max_terms:
            raise ConvergenceError("terminating pFq longer than max_terms",
                                   SeriesResult(acc.value, m + 1, abs(term), False))
        term *= spec.ratio(m)
        m += 1
    return SeriesResult(acc.value, m, 0.0, True)
