"""U_q(sl_3) from U_q(sl_2) and the quantum plane.

The sl_2 R-matrix gives a matrix presentation with generators m+, m-,
e^i, f_i and a dilaton c.  Mapping it into U_q(sl_3) with a half torus
checks each displayed relation and coproduct.  One displayed relation
has q and q^{-1} exchanged; its corrected form is reported in the notes.
"""

from qdouble.pbw import check_example56

rep = check_example56()
for rel in rep.relations:
    if rel.name == "identification":
        print(rel.lhs, "->", rel.rhs)
print()
for c in rep.checks:
    print(f"{'pass' if c.passed else 'FAIL'}  {c.name}")
print()
for n in rep.notes:
    print("note:", n)
print("Delta f_1 scalar:", rep.data["Delta f_1 scalar"])
