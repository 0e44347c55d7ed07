# %% [markdown]
# # Reduction of finite models
#
# A crossed module `del: H -> G` acting on a finite groupoid `R` can be
# divided out when H acts freely on arrows.  The quotient `G x^H R` is then
# another finite groupoid.  When the action is not free we get a witness
# `(h, f)` with `h*f = f`, and an obstruction groupoid with nontrivial
# isotropy.

# %%
from stackytoric.errors import FreenessViolation
from stackytoric.fingroupoid import (check_principal, finite_morita_moves, groupoid_invariants,
                                     isotropy_report, obstruction_groupoid, quotient_map,
                                     reduction_groupoid, validate_action)
from stackytoric.fingroupoid.models import free_models, non_free_models

for m in free_models():
    assert validate_action(m.cm, m.X, m.action).ok
    R = reduction_groupoid(m.cm, m.X, m.action)
    principal = check_principal(quotient_map(m.cm, m.X, m.action, R), m.cm, m.action)
    print(f"{m.name:24s} -> {len(R.objects)} objects, {len(R.arrows)} arrows, "
          f"{groupoid_invariants(R)}, principal: {principal.ok}")

# %%
for m in non_free_models():
    try:
        reduction_groupoid(m.cm, m.X, m.action)
    except FreenessViolation as exc:
        Y = obstruction_groupoid(m.cm, m.X, m.action)
        print(f"{m.name:24s} witness {exc.details['witness']}, "
              f"largest isotropy in Y: {max(isotropy_report(Y).values())}")

# %% [markdown]
# ## Morita moves
#
# Restriction, pullback along a cover, and quotient by a lifted normal
# subgroup all produce Morita equivalent crossed modules.  Each move is
# checked against both characterizations.

# %%
cm = free_models()[2].cm
for name, res in finite_morita_moves(cm).items():
    cert = res.check.certificate
    print(f"{name:10s} morita={res.check.ok} kernel orders {cert['kernel_orders']}")
