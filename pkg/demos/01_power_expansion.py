# # Integer powers of the incomplete-beta hypergeometric function
#
# F(x) = 2F1(1, a; a+1; x) = a * sum_m x^m / (a + m).  Squaring or cubing a
# power series normally means convolving coefficient lists.  hyperpow instead
# keeps a small table of weights and writes F(x)^n as one series whose m-th
# term costs a single multiply-add.

# %%
import math

from hyperpow import build_table, cauchy_power_oracle, eval_base, eval_power, evaluate_power

# %% [markdown]
# With a = 1 the base function is -ln(1 - x)/x, so every power has a closed form
# to compare against.

# %%
x = 0.5
for n in range(1, 5):
    r = evaluate_power(1.0, n, x)
    exact = (-math.log1p(-x) / x) ** n
    print(f"n={n}  series={r.value:.16f}  closed={exact:.16f}  terms={r.terms_used}")

# %% [markdown]
# a = 1/2 and x = -z^2 gives arctan(z)/z.  At z = 1 the series sits on the unit
# circle and only converges conditionally; the default policy accepts x = -1 and
# accelerates the alternating tail.

# %%
for n in (1, 2, 3):
    r = evaluate_power(0.5, n, -1.0)
    print(f"(pi/4)^{n}: {r.value:.15f} vs {(math.pi / 4) ** n:.15f}  (tail {r.tail_estimate:.1e})")

# %% [markdown]
# A table can be built once and shared by many evaluations.  It is immutable, so
# threads can read it concurrently.

# %%
alpha = 0.75
table = build_table(alpha, 4, 1023)
for x in (-0.9, -0.5, 0.25, 0.9):
    p = eval_power(alpha, 5, x, table).value
    b = eval_base(alpha, x).value ** 5
    c = cauchy_power_oracle(alpha, 5, x, 3000)
    print(f"x={x:+.2f}  table={p:.15g}  base^5={b:.15g}  convolution={c:.15g}")

# %% [markdown]
# Out-of-domain input raises instead of returning a number.

# %%
try:
    evaluate_power(0.5, 2, 1.0)
except ValueError as exc:
    print(type(exc).__name__, "-", exc)
