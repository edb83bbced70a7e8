# %% [markdown]
# # Jump loci of small complexes
#
# Koszul complexes of tori, wedges of circles and surfaces, their loci and fiber checks.

# %%
from fractions import Fraction

from torusjump import (fiber_betti, jump_loci, koszul_torus, same_variety, surface, twist,
                       wedge, Ideal)

# %%
c = koszul_torus(2)
print(c)
for i in c.degrees:
    print(i, c.d(i).to_lists())

# %%
l = jump_loci(c)
for i, rec in l.records.items():
    print(f"V^{i}", [str(g) for g in rec.generators()], "dim", rec.dim.dim)

# every locus is the trivial character
pt = Ideal(l.ring, ["t1 - 1", "t2 - 1"])
print(all(same_variety(l.ideal(i), pt) for i in c.degrees))

# %% [markdown]
# Fiber cohomology at a few characters agrees with membership.

# %%
for x in [(1, 1), (2, 3), (Fraction(1, 2), -1)]:
    print(x, fiber_betti(c, x).betti, [l.contains(i, x) for i in c.degrees])

# %%
w = jump_loci(wedge(2))
print("wedge V^1 whole torus:", w[1].whole_torus, "| V^0:", [str(g) for g in w[0].generators()])

# %%
s = surface(2)
print("genus 2 ranks", [s.rank(i) for i in s.degrees], "euler", s.euler_characteristic())

# %%
t = jump_loci(twist(koszul_torus(1), (2,)))
print("twisted circle:", [str(g) for g in t[0].generators()])
