"""Operation-count comparison of three ways to get F(x)^n.

``eq7_series`` reads the coefficient table (built beforehand, not counted),
``cauchy_oracle`` convolves truncated base series, and ``base_power`` sums
the base series once and raises it to the n-th power.  Counts come from
:mod:`hyperpow.opcount`, so they do not depend on the machine; wall time is
recorded alongside but carries no guarantee.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .coefficients import build_table
from .opcount import CountingFloat, counting
from .power_series import cauchy_power_oracle, eval_base, eval_power

STRATEGIES = ("eq7_series", "cauchy_oracle", "base_power")


@dataclass(frozen=True)
class BenchRecord:
    strategy: str
    n: int
    terms: int
    multiply_add_count: int
    wall_nanoseconds: int
    value: float

    def to_dict(self) -> dict:
        return asdict(self)


def _timed(fn):
    with counting() as ops:
        t0 = time.perf_counter_ns()
        value = fn()
        t1 = time.perf_counter_ns()
    return float(value), ops.total, t1 - t0


def bench_power(alpha: float, n: int, x: float, terms: int) -> list[BenchRecord]:
    """One record per strategy, each summing exactly ``terms`` base-series terms."""
    table = build_table(alpha, n - 1, terms - 1)
    a, xc = CountingFloat(alpha), CountingFloat(x)

    def base_power():
        b = CountingFloat(eval_base(a, xc, terms=terms).value)
        p = b
        for _ in range(n - 1):
            p = p * b
        return p

    runs = {
        "eq7_series": lambda: eval_power(a, n, xc, table, terms=terms).value,
        "cauchy_oracle": lambda: cauchy_power_oracle(a, n, xc, terms),
        "base_power": base_power,
    }
    out = []
    for name in STRATEGIES:
        value, ops, ns = _timed(runs[name])
        out.append(BenchRecord(name, n, terms, ops, ns, value))
    return out


def run_bench(alpha: float, powers, x: float, terms: int) -> list[BenchRecord]:
    records = []
    for n in powers:
        records.extend(bench_power(alpha, n, x, terms))
    return records
