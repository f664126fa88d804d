"""Multiplicities read off from symbolic jets, compared with the Taylor expansion."""

import random

from logjets.groebner import groebner_basis
from logjets.jetmult import (DivisorRep, JetPoint, RationalPoint, multiplicity_via_jets,
                             random_instance, taylor_multiplicity)
from logjets.polycore import PolyRing

R = PolyRing(["x", "y"])
s = R("x^2 - y^3")
p = RationalPoint(R, [0, 0])
J = JetPoint(p, 3)
print("s along a symbolic 3-jet through the origin:")
for i, c in enumerate(J.expand(s).coeffs):
    print(f"  t^{i}: {c}")
print(multiplicity_via_jets(DivisorRep(s, R), p))

# on the unit circle, the tangent line x = 1 meets the circle to order 2
circle = groebner_basis(R, ["x^2 + y^2 - 1"])
print("x - 1 on the circle at (1, 0):",
      multiplicity_via_jets(DivisorRep(R("x - 1"), circle), RationalPoint(R, [1, 0])))

rng = random.Random(0)
agree = 0
for _ in range(50):
    D, q = random_instance(rng)
    agree += multiplicity_via_jets(D, q).value == taylor_multiplicity(D, q)
print(f"jets and Taylor agree on {agree} of 50 random instances")
