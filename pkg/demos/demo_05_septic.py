"""
A 7-isogeny from Velu's formulas
================================

C_a carries the 7-torsion point (0,0).  Velu's formulas give the quotient
map psi, whose x-coordinate N_a(x)/D_a(x) produces septic polynomials.
"""

from dihedral_kummer.curves import Point, torsion_order
from dihedral_kummer.septic import septic_family, septic_kernel_xcoords, septic_poly

sf = septic_family(2)
print("C_2       :", sf.C)
print("order of (0,0):", torsion_order(sf.C, Point(0, 0)))
print("kernel x  :", ", ".join(str(x) for x in sorted(septic_kernel_xcoords(2))))
print("codomain  :", sf.psi.codomain)
print("x-map     :", sf.psi.x_map)
print("matches the closed form:", sf.matches_printed())
print("N_2(X) - 1*D_2(X) =", septic_poly(2, 1))
