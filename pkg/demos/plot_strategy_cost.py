"""
Three ways to evaluate the same bound
=====================================

Direct summation costs O(k^2) per point.  Caching the integer exponent table
once leaves k+1 logarithms per point.  The square-root recursion avoids
logarithms altogether.
"""

from wallisbounds import OpCount, Strategy, build_exponent_cache, ratio_bounds, upper_bound_cached, upper_bound_direct

# %%
# All three agree to within a few ulps.

for strategy in Strategy:
    b = ratio_bounds(2.5, 8, strategy)
    print(f"{strategy.value:>9}: lower={b.lower!r} upper={b.upper!r}")

# %%
# Count operations for 100 evaluations at distinct points.

points = [0.5 + i for i in range(100)]
for k in (8, 16, 32):
    cache = build_exponent_cache(k)
    cached, direct = OpCount(), OpCount()
    for p in points:
        upper_bound_cached(p, cache, cached)
        upper_bound_direct(p, k, tally=direct)
    print(f"k={k:>2}  cached logs={cached.logs:>5}  direct logs={direct.logs:>6}  "
          f"direct arith={direct.arithmetic:>7}")

# %%
# The exponent table itself is small integers, grown by H_{j,k+1} = 2 H_{j,k} + C(k+1, j).

print(build_exponent_cache(4).H)
