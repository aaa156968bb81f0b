"""
How fast do other bounds converge?
==================================

The hypergeometric (Gauss-Watson) series and the shifted bounds of Shanbhag
type also enclose W(x), but their error decays polynomially.
"""

from wallisbounds import convergence_race

# %%
# Parameters needed for a relative error below eps at x = 1.  The Shanbhag
# order grows like 1/eps, so its tighter tolerances take a second or so.

for eps in (1e-2, 1e-4, 1e-6):
    report = convergence_race(1.0, eps)
    row = "  ".join(f"{name}={entry.parameter}{'+' if entry.capped else ''}"
                    for name, entry in report.entries.items())
    print(f"eps={eps:g}  {row}")
