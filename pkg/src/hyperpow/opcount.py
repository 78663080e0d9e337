"""Instrumented floating-point numbers for deterministic operation counts.

``CountingFloat`` behaves like ``float`` but every ``+ - * /`` (and ``**``)
it takes part in increments the counter active in the current context::

    with counting() as ops:
        eval_base(CountingFloat(0.5), CountingFloat(0.3), terms=100)
    ops.total

Operations between two plain floats are not seen, so the caller decides
what is instrumented by choosing which inputs to wrap.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass

import numpy as np


@dataclass
class OpCounter:
    adds: int = 0
    muls: int = 0
    divs: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.muls + self.divs


_active: contextvars.ContextVar[OpCounter | None] = contextvars.ContextVar("hyperpow_opcounter",
                                                                         default=None)


@contextlib.contextmanager
def counting():
    counter = OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def _bump(kind: str) -> None:
    c = _active.get()
    if c is not None:
        setattr(c, kind, getattr(c, kind) + 1)


class CountingFloat(float):
    __slots__ = ()

    def __add__(self, other):
        _bump("adds")
        return CountingFloat(float.__add__(self, float(other)))

    def __radd__(self, other):
        _bump("adds")
        return CountingFloat(float(other) + float(self))

    def __sub__(self, other):
        _bump("adds")
        return CountingFloat(float.__sub__(self, float(other)))

    def __rsub__(self, other):
        _bump("adds")
        return CountingFloat(float(other) - float(self))

    def __mul__(self, other):
        _bump("muls")
        return CountingFloat(float.__mul__(self, float(other)))

    def __rmul__(self, other):
        _bump("muls")
        return CountingFloat(float(other) * float(self))

    def __truediv__(self, other):
        _bump("divs")
        return CountingFloat(float.__truediv__(self, float(other)))

    def __rtruediv__(self, other):
        _bump("divs")
        return CountingFloat(float(other) / float(self))

    def __pow__(self, other):
        # counted as |k| - 1 multiplications for integer k, one otherwise
        k = abs(int(other)) if float(other).is_integer() else 2
        for _ in range(max(k - 1, 1)):
            _bump("muls")
        return CountingFloat(float.__pow__(self, float(other)))

    def __neg__(self):
        return CountingFloat(-float(self))

    def __pos__(self):
        return self

    def __abs__(self):
        return CountingFloat(abs(float(self)))

    def __repr__(self):
        return f"CountingFloat({float(self)!r})"


def is_counting(*values) -> bool:
    return any(isinstance(v, CountingFloat) for v in values)


def as_array(values: list) -> np.ndarray:
    """float64 array, or an object array when instrumented numbers are present."""
    if values and is_counting(*values):
        return np.array(values, dtype=object)
    return np.asarray(values, dtype=float)
