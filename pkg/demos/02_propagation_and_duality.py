# %% [markdown]
# # Propagation, acyclicity and duality verdicts

# %%
from torusjump import (IndexingMode, ZZ, acyclic_off_top, betti_bounds, duality_check,
                       jump_loci, koszul_torus, surface, verify_propagation, wedge)

# %%
for name, c, mode in [("torus:2", koszul_torus(2), IndexingMode.space(2)),
                      ("wedge:2", wedge(2), IndexingMode.space(1)),
                      ("surface:2", surface(2), IndexingMode.space(2))]:
    rep = verify_propagation(jump_loci(c), mode)
    print(name, {k: p.status for k, p in rep.properties.items()})

# %%
print(acyclic_off_top(koszul_torus(3), 3).acyclic)
res = acyclic_off_top(surface(2), 2)
print(res.acyclic, res.witness)

# %%
for name, c, n in [("torus:3", koszul_torus(3, ZZ), 3), ("wedge:4", wedge(4, ZZ), 1),
                   ("surface:2", surface(2, ZZ), 2)]:
    v = duality_check(c, n)
    print(name, v.label, v.witness or "", "|", v.caveat)

# %%
print(betti_bounds(jump_loci(koszul_torus(2)), 2)["betti"])
b = betti_bounds(jump_loci(surface(2)), 2)
print(b["passed"], b["checks"]["signed_euler"])
