"""Walk through the order-1 log HS ring of the cusp x^2 = y^3."""

from logjets.groebner import localize
from logjets.hschmidt import apply_d, build_hs, check_d_well_defined, omega_presentation
from logjets.presentation import load_presentation, shipped_presentations


def load(stem):
    return load_presentation(shipped_presentations()[stem]).build()


cusp = load("cusp")
H = build_hs(cusp, 1)
print(H.format())
print()

# 2x = 3y in the log monoid, so the two dlog symbols are proportional
e = H.ring("2*del1_x - 3*del1_y")
print("normal form of 2 del1_x - 3 del1_y:", H.normal_form(e))
print(omega_presentation(H))
print()

# without saturation the same element is only killed by x^2
naive = build_hs(load("cusp_strict"), 1)
R = naive.ring
print("naive quotient:")
print("  x^2 * e in ideal:", naive.naive.contains(R("x^2") * e.to_ring(R)))
print("  e in ideal:      ", naive.naive.contains(e.to_ring(R)))
print("  after inverting x, y:", localize(naive.naive, [R("x"), R("y")]).contains(e.to_ring(R)))
print()

H1 = H.successor()
print("d(del1_y) =", apply_d(H.ring("del1_y"), H, H1))
for n in (1, 2, 3):
    print(check_d_well_defined(cusp, n))
