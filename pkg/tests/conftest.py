import itertools
import math
from functools import reduce

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def int_minor_gcds(M):
    """Determinantal divisors d_k = gcd of all k x k minors, by brute force."""
    import sympy

    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, int(sympy.Matrix([[M[i][j] for j in cols] for i in rows]).det()))
        out.append(g)
    return out


def invariant_factors_oracle(M):
    d = int_minor_gcds(M)
    out, prev = [], 1
    for dk in d:
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return out


def gcd_all(xs):
    return reduce(math.gcd, xs, 0)
