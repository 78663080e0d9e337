"""Series accumulation shared by every evaluator in the package.

Three summation strategies live here:

* geometric-tail summation for ``|x| < 1`` power series (the caller owns the
  loop and uses :func:`geometric_tail` to decide when to stop);
* :func:`sum_alternating` for series at ``x = -1``: the first ``head`` terms
  are added in consecutive pairs, the remainder is summed with Euler's
  transform of the forward differences;
* :func:`sum_richardson` for positive series whose terms decay like a power
  of ``1/l`` (digamma sums, outer sums over ``l``): partial sums at doubling
  lengths are extrapolated to infinite length.

All accumulation goes through :class:`CompensatedSum`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError


class MinusOnePolicy(str, enum.Enum):
    """What to do with a series evaluated at ``x = -1``."""

    REJECT = "reject"
    ALTERNATING_PAIRING = "alternating_pairing"


@dataclass(frozen=True)
class ConvergenceControl:
    tolerance: float = 1e-12
    max_terms: int = 100_000
    minus_one_policy: MinusOnePolicy = MinusOnePolicy.ALTERNATING_PAIRING

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.max_terms < 8:
            raise ValueError(f"max_terms must be at least 8, got {self.max_terms!r}")
        object.__setattr__(self, "minus_one_policy", MinusOnePolicy(self.minus_one_policy))

    def target(self, value: float) -> float:
        """Absolute tail bound that certifies convergence at ``value``."""
        return self.tolerance * max(1.0, abs(float(value)))


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_estimate: float
    converged: bool


class CompensatedSum:
    """Running Neumaier (improved Kahan-Babuska) sum.

    Works with any float-like type, so instrumented numbers keep their
    bookkeeping through the accumulation.
    """

    __slots__ = ("_s", "_c")

    def __init__(self, start=0.0):
        self._s = start
        self._c = 0.0

    def add(self, v) -> None:
        s = self._s
        t = s + v
        if abs(s) >= abs(v):
            self._c += (s - t) + v
        else:
            self._c += (v - t) + s
        self._s = t

    @property
    def value(self):
        return self._s + self._c


def geometric_tail(last_term, ratio) -> float:
    """Conservative remainder bound ``2 |last| r / (1 - r)``; inf when ``r >= 1``."""
    r = abs(float(ratio))
    if r >= 1.0:
        return math.inf
    return 2.0 * abs(float(last_term)) * r / (1.0 - r)


# Pairwise head length and maximal Euler order used at x = -1.  The window
# is what a caller must be able to supply terms for.
ALT_HEAD = 64
ALT_MAX_ORDER = 64
ALT_WINDOW = ALT_HEAD + ALT_MAX_ORDER + 1


def sum_alternating(term: Callable[[int], float], ctrl: ConvergenceControl, *,
                    head: int = ALT_HEAD, max_order: int = ALT_MAX_ORDER) -> SeriesResult:
    """Sum ``sum_m term(m)`` whose terms alternate in sign from ``head`` on.

    The head is accumulated in consecutive pairs ``(2j, 2j+1)``.  Writing the
    tail as ``sum_j (-1)^j s_j`` with ``s_j = (-1)^j term(head + j)``, it is
    replaced by Euler's transform ``sum_k (-1)^k D^k s_0 / 2^(k+1)``, which
    converges geometrically when ``s_j`` is a smooth function of ``j``.
    The reported tail estimate is twice the last transformed term.

    Raises ConvergenceError when the transformed terms fail to fall below
    the tolerance within ``max_order`` differences.
    """
    if head % 2:
        raise ValueError("head must be even so that terms pair up")
    if head + max_order + 1 > ctrl.max_terms:
        raise ConvergenceError(
            f"alternating window of {head + max_order + 1} terms exceeds max_terms={ctrl.max_terms}")

    acc = CompensatedSum()
    for j in range(0, head, 2):
        acc.add(term(j) + term(j + 1))

    s = []
    for j in range(max_order + 1):
        v = term(head + j)
        s.append(-v if j % 2 else v)

    row = s
    scale = 0.5
    prev = math.inf
    last = math.inf
    for k in range(max_order + 1):
        t = row[0] * scale
        if k % 2:
            t = -t
        acc.add(t)
        mag = abs(float(t))
        last = mag
        if mag <= 0.25 * ctrl.target(acc.value) and mag <= prev:
            value = acc.value
            return SeriesResult(float(value), head + k + 1, 2.0 * mag, True)
        prev = mag
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        scale *= 0.5

    result = SeriesResult(float(acc.value), head + max_order + 1, 2.0 * last, False)
    raise ConvergenceError(
        f"Euler transform did not settle below tolerance after {max_order} differences "
        f"(last term {last:.3g})", result)


def _richardson(levels: list[float], max_order: int, order: int) -> tuple[float, float]:
    """Extrapolate partial sums taken at lengths N, 2N, 4N, ... to infinity.

    Assumes an error expansion in powers ``1/N^order, 1/N^(order+1), ...``.
    Returns the highest-order estimate and the distance to the best
    estimate built one level earlier.
    """
    table: list[list[float]] = []
    for j, s in enumerate(levels):
        row = [s]
        for k in range(1, min(j, max_order) + 1):
            f = 2.0 ** (k + order - 1) - 1.0
            row.append(row[k - 1] + (row[k - 1] - table[j - 1][k - 1]) / f)
        table.append(row)
    best = table[-1][-1]
    if len(table) < 2:
        return best, math.inf
    return best, abs(best - table[-2][-1])


def sum_richardson(term: Callable[[int], float], ctrl: ConvergenceControl, *,
                   cap: int | None = None, start: int = 16, max_order: int = 7, order: int = 1,
                   correction: Callable[[int], float] | None = None) -> SeriesResult:
    """Sum ``sum_{l>=0} term(l)`` for terms decaying like powers of ``1/l``.

    Partial sums over ``N = start * 2^j`` terms, optionally shifted by
    ``correction(N)`` (an approximation to the remainder past ``N``), are
    Richardson-extrapolated to ``N -> inf``; ``order`` is the leading power
    of ``1/N`` in the (corrected) truncation error.  With ``cap`` the largest ``N``
    is fixed at ``cap + 1`` terms rounded down to the doubling grid;
    otherwise ``N`` keeps doubling until the extrapolants agree to
    ``ctrl.tolerance`` or ``ctrl.max_terms`` is reached.

    The tail estimate is the change between the two highest extrapolants.
    """
    limit = ctrl.max_terms if cap is None else min(cap + 1, ctrl.max_terms)
    if limit < start:
        start = max(2, limit)

    acc = CompensatedSum()
    levels: list[float] = []
    n_done = 0
    n_next = start
    value, tail = math.nan, math.inf
    while n_next <= limit:
        while n_done < n_next:
            acc.add(term(n_done))
            n_done += 1
        s = float(acc.value)
        if correction is not None:
            s += float(correction(n_done))
        levels.append(s)
        value, tail = _richardson(levels, max_order, order)
        if cap is None and tail <= ctrl.target(value):
            return SeriesResult(value, n_done, tail, True)
        n_next *= 2

    converged = tail <= ctrl.target(value)
    result = SeriesResult(value, n_done, tail, converged)
    if not converged:
        raise ConvergenceError(
            f"extrapolated sum not settled after {n_done} terms (tail {tail:.3g})", result)
    return result
