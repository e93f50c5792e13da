"""The q-Serre relations appear as the radical of the braided pairing.

For the A2 datum nothing of degree (1,1) or (2,0) is killed, while at
degree (2,1) a single element spans the kernel.
"""

from qdouble.braidedgroup import BraidedGroup
from qdouble.cartan import PRESETS
from qdouble.rmatrix import braided_factorial, cartan_to_rmatrix

R = cartan_to_rmatrix(PRESETS["A2"])
B = BraidedGroup(R, "vector", "forward", "radical")

for d in [(1, 0), (1, 1), (2, 0), (2, 1), (1, 2), (2, 2)]:
    ker = B.radical_basis(d)
    print(d, "quotient dim", len(B.basis(d)), "radical", [str(k) for k in ker])

# the pairing on words of length 2 is the braided factorial [2; R]!
F = braided_factorial(2, R)
print("[2;R]! diagonal:", [str(F.get(i, i)) for i in range(4)])
