# %% [markdown]
# # Sampling characters and the fiber oracle
#
# Over F_p the sampler also draws points from extensions F_{p^r}, r <= 4.

# %%
from torusjump import Fp, GaloisField, fiber_betti, jump_loci, koszul_torus, oracle_check, \
    sample_points, twist, wedge

# %%
c = twist(koszul_torus(2, Fp(7)), (2, 3))
l = jump_loci(c)
pts = sample_points(l.ring, 12, seed=1, loci=l)
for x in pts:
    print([str(v) for v in x], fiber_betti(c, x).betti)

# %%
res = oracle_check(c, l, count=60, seed=1)
print(res.summary())

# %%
F = GaloisField(5, 2)
a = F.generator()
w = wedge(2, Fp(5))
print(fiber_betti(w, (a, a + 1)).to_dict())
