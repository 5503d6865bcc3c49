"""
Six splitting fields over Q(sqrt d)
===================================

For (a,b) = (2,2) the quotient E(Q)/phi*(E*(Q)) is (Z/5)^2, which has six
subgroups of order 5.  Each one is a distinct D5 field with the same
quadratic subfield, and the base point tells us which one b(2,2;X) defines.
"""

from dihedral_kummer import fixtures
from dihedral_kummer.classify import classify
from dihedral_kummer.quintic import quintic_d, same_square_class

fx = fixtures.load("quintic_2_2")
fam = fixtures.build_family(fx)
E, Estar = fixtures.bases(fx)

result = classify(fam, E, Estar)
print("quotient (Z/5)^%d, %d classes" % (result.quotient_rank, len(result.classes)))
for i, entry in enumerate(result.classes):
    mark = "  <- b(2,2;X)" if i == result.base_class else ""
    print(f"  line {entry.subgroup}  rep {list(entry.coefficients)}  beta {entry.beta}{mark}")

print("P0 in generator coordinates:", list(result.base_coefficients))

# all six share the quadratic subfield Q(sqrt d)
print("same d up to squares:",
      all(same_square_class(quintic_d(2, e.beta), fam.d) for e in result.classes))

# published representative for the base class is P2 - P3, beta = -7/4
print("beta(P2 - P3) =", fam.beta(E.point((0, 1, -1))))
