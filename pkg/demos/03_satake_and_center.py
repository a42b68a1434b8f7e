"""The spherical Hecke algebra and the center, seen through the Satake map.

Run: python demos/03_satake_and_center.py
"""

from affhecke import BernAlgebra, build_root_datum
from affhecke.satake import (
    center_exhaustion,
    center_map_Z,
    e_K_and_poincare,
    orbit_monomial_sum,
    sat_transform,
    satake_spherical,
    w_invariance_check,
)

for t in ("A1", "A2", "B2"):
    rd = build_root_datum(t, "sc")
    B = BernAlgebra(rd)
    _, WK = e_K_and_poincare(B)
    print(f"{t}: [K:I] = {WK}")

# Characteristic functions of double cosets K t_lam K go to W-invariant Laurent polynomials.
rd = build_root_datum("A1", "sc")
B = BernAlgebra(rd)
for n in range(3):
    img = satake_spherical(B, (n,))
    print(f"\nS(c_{n}) = {img}\n  W-invariant: {w_invariance_check(img)}")

# Orbit sums of theta are central, and z -> z * 1_K followed by S returns the orbit sum.
rd = build_root_datum("A2", "sc")
B = BernAlgebra(rd)
for x in [(1, 0), (1, 1), (2, -1)]:
    z = B.orbit_sum(x)
    print(f"\norbit sum at {x}: central = {B.is_central(z).ok}, "
          f"S(Z(z)) == sum [w x]: {sat_transform(center_map_Z(z)) == orbit_monomial_sum(rd, x)}")

# Nothing else in a box is central: compare dimensions at q = 2.
kdim, norb = center_exhaustion(B, 2, 2)
print(f"\ncentral elements supported in [-2,2]^2 at q=2: dim {kdim}; box-contained orbits: {norb}")
