"""
Bracketing the Student density ratio
====================================

r(p) compares the Student-t density at zero with the normal density at zero.
The order-k bounds close in on it from both sides, and each extra order at
least halves the relative error.
"""

from wallisbounds import oracle, ratio_bounds, relative_error_cap

# %%
# Start with p = 1 (the Cauchy case), where r(1) = sqrt(2/pi) is known exactly.

p = 1.0
ref = float(oracle.ratio_reference(p).mid)
print(f"r({p:g}) = {ref:.17f}")

# %%
# Walk the order up and watch both sides tighten.  The last column is the
# guaranteed cap on the relative error; the measured error sits below it.

print(f"{'k':>3} {'lower':>20} {'upper':>20} {'rel err up':>11} {'cap':>11}")
for k in range(0, 13, 2):
    b = ratio_bounds(p, k)
    print(f"{k:>3} {b.lower:20.17f} {b.upper:20.17f} {b.upper / ref - 1:11.3e} "
          f"{relative_error_cap(p, k):11.3e}")

# %%
# For large p the target is close to one and the bounds are already tight at
# low order, since the cap behaves like (k+1)!/p^(k+1).

for p in (10.0, 100.0, 1000.0):
    b = ratio_bounds(p, 3)
    print(f"p={p:>6g}  width={b.width:.3e}  cap={relative_error_cap(p, 3):.3e}")
