"""Exception types raised across the package.

All of them derive from ``HyperpowError`` so callers can catch the whole
family; the concrete classes also subclass the closest builtin so that
generic ``except ValueError`` handlers keep working.
"""

from __future__ import annotations


class HyperpowError(Exception):
    """Base class for every error raised by hyperpow."""


class PoleError(HyperpowError, ValueError):
    """A denominator or a special-function argument sits on a pole.

    ``where`` names the offending quantity (e.g. ``"m + n*alpha"``) and
    ``index`` carries the integer indices that produced it, if any.
    """

    def __init__(self, message: str, *, where: str = "", index: tuple[int, ...] | None = None):
        super().__init__(message)
        self.where = where
        self.index = index


class DomainError(HyperpowError, ValueError):
    """An argument lies outside the region where a series is evaluated."""


class TableSizeError(HyperpowError, ValueError):
    """A coefficient table is too small for the requested evaluation."""


class ConvergenceError(HyperpowError, ArithmeticError):
    """A series hit its term cap before meeting the tolerance.

    The partial ``SeriesResult`` is kept on ``.result``.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
