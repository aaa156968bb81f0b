"""
Relative errors over x
======================

Tabulates (U_k(x) - W(x))/W(x) and (L_k(x) - W(x))/W(x) for k = 1, 2, 3.
The figure is drawn when matplotlib is installed.
"""

import sys

from wallisbounds.cli import make_grid, table_rows

grid = make_grid(-0.45, 16, 200)
rows = list(table_rows("x", grid, [1, 2, 3]))

try:
    import matplotlib.pyplot as plt
except ImportError:
    for x, k, _, _, _, lo, hi in rows[::60]:
        print(f"x={x:7.3f} k={k}  lower {lo:+.3e}  upper {hi:+.3e}")
    sys.exit(0)

fig, ax = plt.subplots(figsize=(7, 4))
for k in (1, 2, 3):
    xs = [r[0] for r in rows if r[1] == k]
    ax.plot(xs, [r[6] for r in rows if r[1] == k], label=f"upper, k={k}")
    ax.plot(xs, [r[5] for r in rows if r[1] == k], "--", label=f"lower, k={k}")
ax.set_yscale("symlog", linthresh=1e-8)
ax.set_xlabel("x")
ax.set_ylabel("relative error")
ax.legend(ncol=2, fontsize="small")
fig.tight_layout()
fig.savefig("relative_errors.png", dpi=120)
print("wrote relative_errors.png")
