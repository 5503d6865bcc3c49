"""
Moving around a class by doubling
=================================

Doubling a point keeps it in the same coset of phi*(E*(Q)) up to a unit, so
beta' = x([2]P)/(-4d) gives a new parameter with the same splitting field.
There is also a closed-form rational transform p(a,b)/q(a,b); at (1,0) it
lands in a different quadratic field, which we show rather than hide.
"""

from dihedral_kummer.quintic import (doubling_orbit, family, hoshi_rikuna, quintic_d,
                                     same_square_class)

fam = family(1, 0)
for P, beta in doubling_orbit(fam, iterate=3):
    ok = same_square_class(quintic_d(1, beta), fam.d)
    print(f"beta = {beta}   on curve {fam.E.on_curve(P)}   d(1,beta)/d square: {ok}")

hr = hoshi_rikuna(1, 0)
print(f"closed form at (1,0): {hr};  d(1,{hr}) = {quintic_d(1, hr)}, "
      f"square class of {fam.d}: {same_square_class(quintic_d(1, hr), fam.d)}")
