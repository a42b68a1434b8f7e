"""Converting between the Iwahori-Matsumoto and Bernstein bases in type A2.

Run: python demos/02_bernstein_conversions.py
"""

from affhecke import BernAlgebra, ExtAffElt, LaurentScalar, build_root_datum
from affhecke import io

rd = build_root_datum("A2", "sc")
B = BernAlgebra(rd)
im = B.im
q = LaurentScalar.q()

f = B.theta((1, -1)) * B.T_simple(2) + B.theta((0, 1), q)
print("f (Bernstein) =", f)
g = B.to_im(f)
print(f"to_im(f) has {len(g)} terms, maximal length {g.max_length()}")
print("from_im(to_im(f)) == f:", B.from_im(g) == f)

# An arbitrary T-basis element expands in the Bernstein basis with Laurent coefficients.
u = ExtAffElt((1, 0), rd.from_word([1, 2]))
h = B.from_im(im.T(u))
print("\nT_u for u =", io.ext_to_json(rd, u))
print("  =", h)

# Products agree in both models.
a, b = B.theta((-1, 1)), B.T_simple(1)
print("\nto_im(a b) == to_im(a) to_im(b):", B.to_im(a * b) == B.to_im(a) * B.to_im(b))

# Canonical JSON, as the command line tool prints it.
print("\n" + io.dumps(io.element_to_json(a * b)))
