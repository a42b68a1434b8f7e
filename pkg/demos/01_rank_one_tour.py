"""A walk through the rank-one affine Hecke algebra (type A1, X = coroot lattice).

Run: python demos/01_rank_one_tour.py
"""

from affhecke import BernAlgebra, ExtAffElt, IMAlgebra, LaurentScalar, build_root_datum
from affhecke.extweyl import affine_simple, ext_length

rd = build_root_datum("A1", "sc")
im = IMAlgebra(rd)
q = LaurentScalar.q()

print("Root datum:", rd)
print("positive root", rd.positive_roots, "coroot", rd.positive_coroots, "|W| =", len(rd.weyl_group))

# The two affine simple reflections and the quadratic relation.
s0, s1 = affine_simple(rd, 0), affine_simple(rd, 1)
print("\ns0 =", s0, " length", ext_length(rd, s0))
T0, T1 = im.T(s0), im.T(s1)
print("T_s1^2         =", T1 * T1)
print("(q-1) T_s1 + q =", T1 * (q - 1) + im.one() * q)

# Translations: lengths grow like rho, and dominant translations multiply freely.
for n in range(4):
    print(f"l(t_{n}) = {ext_length(rd, ExtAffElt((n,), rd.identity))}")
print("T_t1 * T_t2 == T_t3:", im.T_translation((1,)) * im.T_translation((2,)) == im.T_translation((3,)))

# theta_x for non-dominant x mixes several T-basis elements.
for x in (1, -1, -2):
    print(f"theta_{x} =", im.theta((x,)))
print("theta_1 theta_-1 == 1:", im.theta((1,)) * im.theta((-1,)) == im.one())

# The cross relation: T_s theta_x - theta_{s x} T_s = (q - 1) (theta_x - theta_{s x}) / (1 - theta_{-a})
B = BernAlgebra(rd, im=im)
for x in range(-2, 3):
    lhs = T1 * im.theta((x,)) - im.theta((-x,)) * T1
    quot = B.element({(y, rd.identity): c for y, c in B.geometric_quotient((x,), 1).items()})
    print(f"x = {x:+d}: relation holds with q-1: {lhs == B.to_im(quot) * (q - 1)}")
