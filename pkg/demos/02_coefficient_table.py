# # The coefficient table
#
# Level 0 is all ones.  Each later level is a running sum of the level below,
# divided term by term by (m + n*a).  Level 1 is a digamma difference, and the
# first column is 1/(n! a^n).

# %%
import math

import numpy as np

from hyperpow import PoleError, build_table, digamma, excluded_alphas

# %%
a = 0.25
t = build_table(a, 4, 8)
np.set_printoptions(precision=6, suppress=False, linewidth=110)
print(t.values)

# %%
for n in range(5):
    print(n, t.get(n, 0) * math.factorial(n) * a ** n)

# %%
for k in (0, 3, 8):
    print(k, t.get(1, k), digamma(k + 1 + a) - digamma(a))

# %% [markdown]
# Negative a is allowed as long as no m + n*a vanishes in the table's range.
# The excluded values are -m/n.

# %%
print([str(f) for f in excluded_alphas(3, 2)])
try:
    build_table(-0.5, 2, 5)
except PoleError as exc:
    print(exc)
    print("offending (n, m):", exc.index)

# %% [markdown]
# CSV export uses 17 significant digits, so values round-trip exactly.

# %%
print(build_table(1.0, 2, 2).to_csv())
