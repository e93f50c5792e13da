"""Rebuild U_q(sl_2) from the one-dimensional braided line.

The positive part is the braided line with braiding q^2, the negative part
is its dual, and the Cartan part is the group algebra of Z.  The cross
relations and coproducts come out of the double construction.
"""

from qdouble.cartan import PRESETS
from qdouble.doublebos import build, verify_bialgebra

U = build(PRESETS["A1"], max_degree=4)
e, f, K, Ki = U.e(0), U.f(0), U.K(0), U.K(0, -1)

print("ef - fe =", e * f - f * e)
print("eK      =", e * K)
print("Delta e =", U.coproduct(e))
print("Delta f =", U.coproduct(f))
print("S(e)    =", U.antipode(e))

rep = verify_bialgebra(U, 3)
for c in rep.checks:
    print(f"{c.name}: {'pass' if c.passed else 'fail'}")
