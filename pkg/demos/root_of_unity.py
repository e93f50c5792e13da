"""Finite u_q(sl_2) at a primitive cube root of unity.

Here e^3 = f^3 = 0 come from the radical and K^3 = 1 from the torus.  The
universal R-matrix is the truncated braided exponential times the torus
part, and all three quasitriangularity axioms are checked exactly.
"""

from qdouble.doublebos import quasitriangular_element, root_of_unity_uqsl2, verify_quasitriangular

r = 3
U = root_of_unity_uqsl2(r)
print("e^3 =", U.e(0) ** 3, "  f^3 =", U.f(0) ** 3, "  K^3 =", U.K(0) ** 3)

R = quasitriangular_element(U)
print("R has", len(R.terms), "terms")

rep = verify_quasitriangular(U)
for c in rep.checks:
    print(f"{c.name}: {'pass' if c.passed else 'fail'}")
print(rep.notes)
