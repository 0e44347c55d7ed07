# %% [markdown]
# # Slice volumes across chambers
#
# Reducing by a circle in the direction `xi` at level `u` gives a space
# whose volume is the volume of the slice `P cap {<xi, eta> = u}`.  Between
# walls, which are the projections of the vertices, that volume is a
# polynomial of degree at most `dim P - 1`.  We fit it exactly and check the
# fit on extra points.

# %%
import numpy as np

from stackytoric import catalog
from stackytoric.prato import build_prato_data, dh_scan


def show(name, xi):
    S = catalog.CATALOG[name]()
    rep = dh_scan(build_prato_data(S), S, xi)
    print(f"{name}, xi = {xi}: walls {[str(w) for w in rep.walls]}")
    for ch in rep.chambers:
        lo, hi = ch["interval"]
        coeffs = ", ".join(str(c) for c in ch["coefficients"])
        print(f"  ({lo}, {hi}): V(u) = poly[{coeffs}]  exact fit: {ch['residual_zero']}")
    print("  continuous across walls:", rep.continuous)
    return rep


tri = show("triangle", [1, 0])
sq = show("square", [1, 1])
show("weighted-triangle", [0, 1])

# %% [markdown]
# The float columns are the ones to feed a plot.

# %%
rows = np.array([[float(u), float(V)] for u, _, V in sq.rows])
print(rows)
