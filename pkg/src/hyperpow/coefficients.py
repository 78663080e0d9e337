"""Triangular coefficient table ``t[n, m]`` behind the power expansion.

Level 0 is all ones and each further level is a weighted prefix sum of the
previous one::

    t[n, m] = t[n, m-1] + t[n-1, m] / (m + n*alpha),   t[n, -1] = 0

so ``t[n, 0] = 1 / (n! alpha^n)`` and ``t[1, k] = psi(k+1+alpha) - psi(alpha)``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import PoleError, TableSizeError
from .series import CompensatedSum

_EPS = 2.220446049250313e-16


def _vanishes(m: int, n_alpha: float) -> bool:
    return abs(m + n_alpha) <= 4.0 * _EPS * max(1.0, abs(m), abs(n_alpha))


@dataclass(frozen=True)
class ParameterPoint:
    """The real parameter ``alpha`` (or ``q``) of the expansion."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not math.isfinite(a):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        if a == 0.0:
            raise PoleError("alpha = 0 is excluded", where="alpha")

    def first_pole(self, n_max: int, m_max: int) -> tuple[int, int] | None:
        """The smallest ``(n, m)``, 1 <= n <= n_max, 0 <= m <= m_max, with ``m + n*alpha = 0``."""
        a = float(self.alpha)
        if a > 0:
            return None
        for n in range(1, n_max + 1):
            na = n * a
            m = round(-na)
            if 0 <= m <= m_max and _vanishes(m, na):
                return n, m
        return None

    def check(self, n_max: int, m_max: int) -> None:
        """Raise PoleError unless every ``m + n*alpha`` in range is nonzero."""
        hit = self.first_pole(n_max, m_max)
        if hit is not None:
            n, m = hit
            raise PoleError(
                f"m + n*alpha vanishes at level n={n}, term m={m} (alpha={float(self.alpha)!r}); "
                f"alpha must avoid -m/n for 1 <= n <= {n_max}, 0 <= m <= {m_max}",
                where="m + n*alpha", index=(n, m))


def excluded_alphas(n_max: int, m_max: int) -> list[Fraction]:
    """Every alpha that puts a pole in a table of the given size: ``-m/n``."""
    return sorted({Fraction(-m, n) for n in range(1, n_max + 1) for m in range(m_max + 1)})


@dataclass(frozen=True)
class CoefficientTable:
    parameter: ParameterPoint
    n_max: int
    m_max: int
    values: np.ndarray = field(repr=False)

    @property
    def alpha(self) -> float:
        return float(self.parameter.alpha)

    def get(self, n: int, m: int) -> float:
        if not (0 <= n <= self.n_max and 0 <= m <= self.m_max):
            raise IndexError(f"(n, m) = ({n}, {m}) outside table 0..{self.n_max} x 0..{self.m_max}")
        return float(self.values[n, m])

    def row(self, n: int) -> np.ndarray:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"level {n} outside table 0..{self.n_max}")
        return self.values[n]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "value"])
        for n in range(self.n_max + 1):
            for m, v in enumerate(self.values[n].tolist()):
                w.writerow([n, m, format(v, ".17g")])
        return buf.getvalue()


def build_table(alpha: float | ParameterPoint, n_max: int, m_max: int) -> CoefficientTable:
    """Fill ``t[n, m]`` for ``0 <= n <= n_max``, ``0 <= m <= m_max``.

    Positive alpha gives same-sign terms and each level is a plain
    ascending cumulative sum; negative alpha levels are accumulated with
    compensation.  Raises PoleError naming the first vanishing ``m + n*alpha``.
    """
    p = alpha if isinstance(alpha, ParameterPoint) else ParameterPoint(alpha)
    if n_max < 0 or m_max < 0:
        raise TableSizeError(f"table dimensions must be nonnegative, got ({n_max}, {m_max})")
    p.check(n_max, m_max)
    a = float(p.alpha)

    values = np.empty((n_max + 1, m_max + 1))
    values[0] = 1.0
    ms = np.arange(m_max + 1, dtype=float)
    for n in range(1, n_max + 1):
        inc = values[n - 1] / (ms + n * a)
        if a > 0:
            np.cumsum(inc, out=values[n])
        else:
            acc = CompensatedSum()
            out = values[n]
            for m, v in enumerate(inc.tolist()):
                acc.add(v)
                out[m] = acc.value
    values.setflags(write=False)
    return CoefficientTable(p, n_max, m_max, values)


def get(table: CoefficientTable, n: int, m: int) -> float:
    return table.get(n, m)
