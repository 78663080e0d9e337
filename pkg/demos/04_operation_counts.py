# # Counting the arithmetic
#
# Wall time depends on the machine, so the benchmark counts operations instead.
# Inputs are wrapped in a float subclass that increments a counter on every
# + - * /.  The table is built before counting starts.

# %%
from hyperpow.bench import bench_power
from hyperpow.opcount import CountingFloat, counting

# %%
with counting() as ops:
    CountingFloat(2.0) * 3.0 + 1.0
print(ops)

# %% [markdown]
# The single-series form is linear in the number of terms, and repeated
# convolution is quadratic.  Doubling the terms doubles one count and
# quadruples the other.

# %%
print(f"{'terms':>6} {'eq7_series':>11} {'cauchy_oracle':>14} {'base_power':>11} {'ratio':>7}")
for terms in (64, 128, 256, 512):
    c = {r.strategy: r.multiply_add_count for r in bench_power(0.75, 4, 0.5, terms)}
    print(f"{terms:6d} {c['eq7_series']:11d} {c['cauchy_oracle']:14d} {c['base_power']:11d} "
          f"{c['cauchy_oracle'] / c['eq7_series']:7.1f}")

# %% [markdown]
# All three strategies agree on the value.

# %%
for r in bench_power(0.75, 4, 0.5, 512):
    print(f"{r.strategy:14s} {r.value:.17g}")
