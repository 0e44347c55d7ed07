# %% [markdown]
# # Exact arithmetic in Q(sqrt 2)
#
# Everything in `stackytoric` is computed exactly.  Numbers are `Scalar`s,
# elements `a + b*sqrt(d)` with rational `a` and `b`.  Floats only show up in
# sampling and in the decimal column of reports.

# %%
from fractions import Fraction

from stackytoric.abelian import FgAbelianGroup, smith_normal_form
from stackytoric.field import Scalar, root
from stackytoric.linalg import Matrix, det, inverse, kernel

r2 = root(2)
x = 1 + r2
print(x, "*", x.conjugate(), "=", x * x.conjugate())
print("1 / (1 + sqrt 2) =", 1 / x)

# %% [markdown]
# Comparisons never round.  `99 - 70 sqrt 2` is about 0.005, and its sign
# comes from comparing `99^2` with `2 * 70^2`.

# %%
tiny = Scalar(99, -70, 2)
print(tiny, "> 0:", tiny > 0, "  decimal:", tiny.to_decimal(12))

# %% [markdown]
# ## Matrices
#
# Row reduction, kernels, inverses and determinants work over the same field.

# %%
M = Matrix([[1, r2, 0], [r2, 3, 1], [0, 1, r2 + 1]])
print("det =", det(M))
print("M @ M^-1 is the identity:", M @ inverse(M) == Matrix.identity(3))
print("kernel of (1, -sqrt 2):", kernel(Matrix([[1, -r2]])))

# %% [markdown]
# ## Integer matrices and abelian groups
#
# The Smith normal form gives `U M V = S` with unimodular `U`, `V`.  It gives
# us invariant factors and with them the structure of a finitely generated
# abelian group.

# %%
A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
U, S, V = smith_normal_form(A)
print("S =", S)
G = FgAbelianGroup(3, tuple(map(tuple, zip(*A))))  # columns of A as relations
print("Z^3 / columns:", G, "order", G.order())

# %%
half = Scalar(Fraction(1, 2))
print("literal of 1/2 - 3 sqrt 2:", (half - 3 * r2).literal())
