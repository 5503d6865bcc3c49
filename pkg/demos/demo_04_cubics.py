"""
Cubic fields of fixed discriminant
==================================

Monic cubics X^3 + pX^2 + qX + r of discriminant D correspond to rational
points on E_D: y^2 = x^3 - 432 D.  The 3-isogeny quotient then counts
cubic fields with a given quadratic resolvent.
"""

import time

from dihedral_kummer import fixtures
from dihedral_kummer.classify import classify
from dihedral_kummer.cubic import cubic_from_point, fixed_disc_curve, point_from_monic, reduce_to_family
from dihedral_kummer.exact import parse_poly, poly_discriminant

g = parse_poly("X^3+X+1")
D, P = point_from_monic(g)
fd = fixed_disc_curve(D)
print("X^3+X+1 ->", D, P)
for n in (1, 2, 3):
    F = cubic_from_point(fd, fd.E_D.mul(n, P))
    print(f"  [{n}]P -> {F}   disc {poly_discriminant(F)}")

params, scale = reduce_to_family(fd, P)
print("as a member of c(a,b;X):", params.a, params.b, "scale", scale)

# a harder case: six generators and 13 classes
fx = fixtures.load("cubic_D_-3321607")
fam = fixtures.build_family(fx)
E, Estar = fixtures.bases(fx)
t0 = time.perf_counter()
result = classify(fam, E, Estar)
print(f"D = {fam.D}: (Z/3)^{result.quotient_rank}, {len(result.classes)} classes "
      f"in {time.perf_counter() - t0:.1f}s")
for entry in result.classes[:4]:
    print("  ", list(entry.coefficients), entry.polynomial)
