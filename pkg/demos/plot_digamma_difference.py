"""
Rational bounds on a digamma difference
=======================================

Differentiating log r(p) gives bounds on psi(x+1) - psi(x+1/2) built only from
rational operations.
"""

import math

from wallisbounds import digamma_diff_bounds, digamma_error_bound

# %%
# At x = 1/2 the difference is 2 - 2 ln 2.

x = 0.5
exact = 2 - 2 * math.log(2)
for k in (0, 2, 5, 10, 20, 40):
    b = digamma_diff_bounds(x, k)
    print(f"k={k:>2}  [{b.lower:.16f}, {b.upper:.16f}]  midpoint error {b.midpoint - exact:+.2e}")

# %%
# The enclosure width is exactly twice the stated error bound.  With p = 2x+1,
# that bound is 2^(-k-1) (k+1)! / p^(k+2), using a rising factorial.

p = 2 * x + 1
for k in (1, 4, 8):
    b = digamma_diff_bounds(x, k)
    print(f"k={k}  width/2 = {b.width / 2:.6e}  bound = {digamma_error_bound(p, k):.6e}")
