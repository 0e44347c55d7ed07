# %% [markdown]
# # A quasifold interval
#
# Take the interval `[0, 1]` with facet normals `1` and `-sqrt 2`, labelled
# by the two generators of `Z^2`.  The map `Z^2 -> R`, `(m, n) -> m - n sqrt 2`,
# has dense image, so the resulting space is a quasifold rather than an
# orbifold.  We build the toric model, check where it lands and sample its
# moment image.

# %%
from fractions import Fraction

from stackytoric import catalog
from stackytoric.prato import (SamplingConfig, build_prato_data, classify, moment_image,
                               reduced_dimension, reduction_exists)

S = catalog.quasi_interval()
D = build_prato_data(S)
print("normals:", [str(a[0]) for a in S.P.normals], " offsets:", [str(x) for x in D.lam])
print("null direction:", [str(x) for x in D.n_space[0]])

# %% [markdown]
# ## Classification
#
# The image of the labels is not discrete, which is all it takes.

# %%
c = classify(D, S)
print(c.kind, "-", c.certificate["reason"])
for name in ("rational-interval", "interval-2", "weighted-triangle", "quasi-triangle"):
    T = catalog.CATALOG[name]()
    k = classify(build_prato_data(T), T)
    print(f"{name:18s} {k.kind:10s} {k.certificate.get('vertex_indices', '')}")

# %% [markdown]
# ## The moment image
#
# The two vertices are reached by explicit points of the zero fibre (checked
# exactly).  Then 10^4 seeded samples are pushed through the moment map and
# checked against the polytope.

# %%
rep = moment_image(D, S.P, SamplingConfig(seed=0x5EED, samples=10_000, grid=Fraction(1, 100)))
for v in rep.vertices:
    print("vertex", [str(p) for p in v["point"]], "from s =", [str(s) for s in v["s"]])
print(f"{rep.contained}/{rep.samples} samples inside, grid {rep.grid_covered}/{rep.grid_points}")

# %% [markdown]
# ## Reduction
#
# The whole torus acts, so reducing at an interior level leaves a point.

# %%
print(reduction_exists(D, S).as_dict())
print(reduced_dimension(D, S.P, [Fraction(1, 2)]))
