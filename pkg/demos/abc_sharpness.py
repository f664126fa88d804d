"""The polynomial abc inequality and the families where it is sharp."""

import random

from logjets.masoncheck import (PuncturedLineMorphism, check_mason, check_mason_corollary,
                                conductor, pullback_order_bound, random_coprime_pair)
from logjets.polycore import PolyRing

Z = PolyRing(["z"])
z = Z.var("z")

print(conductor(Z("z^5*(z+1)^11")))

print("\nz^n + 1 against 1: the difference z^n vanishes to order N(fg)")
for n in range(1, 7):
    rep = check_mason_corollary(z ** n + 1, Z.one(), subtract=True)
    print(f"  n = {n}: mult_0 = {rep.max_rational_multiplicity}, N(fg) = {rep.conductor}")

print("\nthe line minus N points mapped into the plane minus the axes")
A = PolyRing(["x", "y"])
x, y = A.gens()
for N in range(1, 7):
    j = PuncturedLineMorphism(Z, {"x": z ** N - (z - 1) ** N, "y": z ** N},
                              locus=z * (z ** N - (z - 1) ** N))
    rep = pullback_order_bound(x * y, -x, y, j)
    print(f"  N = {N}: order of y - x at z = 1 is {rep.multiplicities[1]}")

rng = random.Random(1)
f, g = random_coprime_pair(Z, rng, 6)
print()
print(check_mason(f, g, -(f + g)))
