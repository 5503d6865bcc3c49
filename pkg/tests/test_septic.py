from fractions import Fraction

import pytest

from conftest import small_rational
from dihedral_kummer.curves import Point, torsion_order
from dihedral_kummer.errors import InvalidParametersError
from dihedral_kummer.exact import RatFunc, UniPoly
from dihedral_kummer.septic import (
    D_poly,
    N_poly,
    curve_C,
    septic_family,
    septic_kernel_xcoords,
    septic_poly,
)

O = Point(Fraction(0), Fraction(0))


def test_septic_family_a2():
    sf = septic_family(2)
    assert torsion_order(sf.C, O) == 7
    assert sf.psi.degree == 7
    assert D_poly(2) == UniPoly.from_roots([0, 0, -4, -4, -2, -2])
    assert sf.matches_printed()


def test_kernel_xcoords():
    assert septic_kernel_xcoords(2) == {0, -4, -2}
    assert septic_kernel_xcoords(-1) == {0, -2, 2}
    C = curve_C(2)
    xs = {C.mul(i, O).x for i in (1, 2, 3)}
    assert xs == septic_kernel_xcoords(2)


def test_septic_poly():
    p = septic_poly(2, 1)
    assert p.degree == 7 and p.lc() == 1
    assert p[0] == 4096


def test_degenerate_a():
    for a in (0, 1):
        with pytest.raises(InvalidParametersError):
            septic_family(a)
        with pytest.raises(InvalidParametersError):
            septic_poly(a, 1)


def test_random_a(rng):
    checked = 0
    while checked < 20:
        a = small_rational(rng)
        if a in (0, 1):
            continue
        try:
            sf = septic_family(a)
        except InvalidParametersError:
            continue
        assert sf.psi.x_map == RatFunc(N_poly(a), D_poly(a))
        p = septic_poly(a, small_rational(rng))
        assert p.degree == 7 and p.lc() == 1
        checked += 1
