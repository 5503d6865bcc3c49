"""
Dihedral quintics with one splitting field
==========================================

The Brumer quintic b(1,0;X) has discriminant -47 up to squares.  The curve
E_{1,0} has rank 2, and E_{1,0}(Q) modulo the image of phi* is Z/5, so every
rational point gives either a reducible quintic or one whose splitting field
is the same degree-10 field.
"""

import itertools

from dihedral_kummer import fixtures
from dihedral_kummer.classify import classify, image_presentation, membership, reducibility_oracle

fx = fixtures.load("quintic_1_0")
fam = fixtures.build_family(fx)
E, Estar = fixtures.bases(fx)
print("E    :", fam.E)
print("E*   :", fam.Estar)
print("d    :", fam.d)

# phi*(Q_j) written in the generators P1, P2 of E(Q)
pres = image_presentation(fam, E, Estar)
print("relations :", [list(r) for r in pres.rows])
print("image HNF :", pres.hnf, " index", pres.index)

result = classify(fam, E, Estar)
print("classes   :", len(result.classes))

# beta = x(P)/(-4d) for a few small combinations of the generators
for c in [(1, 0), (1, -1), (1, 1), (2, -1), (2, 0), (0, 2)]:
    P = E.point(c)
    print(f"  {c!s:9} beta = {fam.beta(P)}")

# at desk scale: reducible exactly when P is in the image
agree = 0
for c in itertools.product(range(-2, 3), repeat=2):
    if c == (0, 0):
        continue
    P = E.point(c)
    agree += membership(P, pres, E) == reducibility_oracle(fam.polynomial(P))
print("membership agrees with factoring on", agree, "of 24 points")
