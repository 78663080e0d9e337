# # Checking the identities numerically
#
# Each verifier computes both sides independently and returns a report with
# the residuals, the number of terms spent, and a pass flag at the identity's
# tolerance.  Finite sums are checked to 1e-12, hypergeometric expansions to
# 1e-8, and the slowly converging digamma sums to 1e-6.

# %%
from hyperpow import run_samples, verify_eq2, verify_eq8, verify_eq12
from hyperpow.identities import eq12_q1_closed_form

# %%
for r in run_samples():
    print(f"{r.identity_id:5s} {str(r.parameters):40s} rel={r.rel_residual:.2e}  "
          f"{'pass' if r.passed else 'FAIL'}")

# %% [markdown]
# The chain identity over coefficient levels is cross-checked against a literal
# enumeration of nested index tuples when the sizes are small.

# %%
print(verify_eq2(0.5, 8, 3).notes)

# %% [markdown]
# Squaring the base function through a sum of 3F2 values.  The outer sum has
# 1/l^2 weights, so it is truncated and the remainder estimated.  Doubling the
# cap moves the answer by less than the reported tail.

# %%
a = verify_eq8(0.75, 0.5, l_cap=1024)
b = verify_eq8(0.75, 0.5, l_cap=2048)
print(a.rhs, b.rhs, abs(a.rhs - b.rhs), a.tail_estimate)

# %% [markdown]
# An alternating digamma sum.  At q = 1 it has the closed form
# -gamma ln 2 - (ln 2)^2 / 2.

# %%
r = verify_eq12(1.0)
print(r.lhs, eq12_q1_closed_form())
print(r.notes)
