import itertools
from fractions import Fraction

import pytest

from conftest import small_rational
from dihedral_kummer.cubic import cubic_family, phi_maps
from dihedral_kummer.curves import Point, WeierstrassCurve, torsion_order
from dihedral_kummer.errors import DomainMismatchError, KernelOrderError, SingularCurveError
from dihedral_kummer.exact import RatFunc, UniPoly
from dihedral_kummer.isogeny import (
    IsogenyMap,
    compose,
    equal_up_to_sign,
    evaluate,
    velu,
    verify_kernel,
)
from dihedral_kummer.quintic import curve_Eastar, lambda_star_formula
from dihedral_kummer.septic import D_poly, N_poly, curve_C

O = Point(Fraction(0), Fraction(0))


def random_admissible(rng, build, n):
    out = []
    while len(out) < n:
        a = small_rational(rng)
        if a in (0, 1):
            continue
        try:
            out.append((a, build(a)))
        except SingularCurveError:
            continue
    return out


def test_velu_quintic_a1():
    lam = velu(curve_Eastar(1), O, 5)
    assert lam.x_map.num == UniPoly((1, -2, 0, 3, -2, 1))
    assert lam.x_map.den == UniPoly((0, 0, 1, -2, 1))
    assert lam.codomain == WeierstrassCurve(0, -1, -1, -10, -20)
    assert verify_kernel(lam)


def test_velu_cubic_a1():
    lam = velu(WeierstrassCurve(0, 0, 216, 0, 0), O, 3)
    assert lam.codomain == WeierstrassCurve(0, 0, 216, 0, -326592)
    assert lam.x_map.den == UniPoly((0, 0, 1))
    assert verify_kernel(lam)


def test_velu_septic_a2():
    psi = velu(curve_C(2), O, 7)
    assert psi.x_map.den == UniPoly.from_roots([0, 0, -4, -4, -2, -2])
    assert psi.x_map == RatFunc(N_poly(2), D_poly(2))
    assert verify_kernel(psi)


def test_velu_rejects_bad_kernels():
    C = curve_Eastar(2)
    with pytest.raises(KernelOrderError):
        velu(C, O, 3)
    with pytest.raises(KernelOrderError):
        velu(C, O, 4)
    with pytest.raises(KernelOrderError):
        velu(C, None, 5)


def test_lambda_star_matches_closed_form(rng):
    for a, C in random_admissible(rng, curve_Eastar, 20):
        assert velu(C, O, 5).x_map == lambda_star_formula(a)


def test_septic_map_matches_closed_form(rng):
    for a, C in random_admissible(rng, curve_C, 20):
        assert velu(C, O, 7).x_map == RatFunc(N_poly(a), D_poly(a))


def test_cubic_codomain_matches_twist_display(rng):
    for a, C in random_admissible(rng, lambda a: WeierstrassCurve(0, 0, 216 * a, 0, 0), 20):
        assert velu(C, O, 3).codomain == WeierstrassCurve(0, 0, 216 * a, 0, -326592 * a * a)


def test_evaluate_examples():
    fam = cubic_family(1, 1)
    Q1 = Point(Fraction(2232), Fraction(103788))
    assert evaluate(fam.phi_star_map, Q1).x == 217
    assert evaluate(fam.phi_star_map, None) is None
    lam = velu(curve_Eastar(2), O, 5)
    assert evaluate(lam, O) is None
    assert evaluate(lam, curve_Eastar(2).mul(2, O)) is None


def _small_multiples(C, gens, bound=2):
    return [C.combination(c, gens) for c in itertools.product(range(-bound, bound + 1), repeat=len(gens))]


def test_printed_phi_star_is_a_homomorphism(rng):
    fam = cubic_family(1, 1)
    gens = [Point(Fraction(2232), Fraction(103788)), Point(Fraction(3472), Fraction(-203732))]
    pts = _small_multiples(fam.Estar, gens)
    iso = fam.phi_star_map
    for _ in range(20):
        P, Q = rng.choice(pts), rng.choice(pts)
        lhs = iso(fam.Estar.add(P, Q))
        assert lhs == fam.E.add(iso(P), iso(Q))
        assert fam.E.on_curve(lhs)


def test_quintic_lambda_star_is_a_homomorphism(rng):
    C = curve_Eastar(-3)     # has points of infinite order with small integral x
    lam = velu(C, O, 5)
    pts = [Point(Fraction(x), y) for x in range(-30, 31) for y in _rational_ys(C, Fraction(x))]
    pts = [P for P in pts if torsion_order(C, P) is None]
    assert pts
    base = _small_multiples(C, pts[:2], 2)
    for _ in range(20):
        P, Q = rng.choice(base), rng.choice(base)
        assert lam(C.add(P, Q)) == lam.codomain.add(lam(P), lam(Q))


def test_velu_homomorphism_on_septic_points():
    C = curve_C(2)
    # points of C_2 of infinite order found by a small search
    pts = [Point(Fraction(x), y) for x in range(-20, 21)
           for y in _rational_ys(C, Fraction(x))]
    assert pts, "no small points on C_2"
    psi = velu(C, O, 7)
    for P, Q in itertools.product(pts[:5], repeat=2):
        assert psi(C.add(P, Q)) == psi.codomain.add(psi(P), psi(Q))


def _rational_ys(C, x):
    from dihedral_kummer.exact import is_rational_square
    a1, a2, a3, a4, a6 = C.ainvs
    b = a1 * x + a3
    c = -(x ** 3 + a2 * x * x + a4 * x + a6)
    disc = b * b - 4 * c
    r = is_rational_square(disc)
    if r is None:
        return []
    return sorted({(-b + r) / 2, (-b - r) / 2})


def test_compose_identity_and_degree():
    E, Es, phi, phi_star = phi_maps(-31)
    assert equal_up_to_sign(compose(IsogenyMap.identity(Es), phi), phi)
    both = compose(phi_star, phi)
    assert both.degree == 9
    with pytest.raises(DomainMismatchError):
        compose(phi, phi)


def test_compose_is_multiplication_by_three():
    fam = cubic_family(1, 1)
    both = compose(fam.phi_star_map, fam.phi)
    P1 = Point(Fraction(124), Fraction(3844))
    P2 = Point(Fraction(217), Fraction(-4805))
    for P in _small_multiples(fam.E, [P1, P2], 1)[:5] + [P1, P2]:
        three = fam.E.mul(3, P)
        image = both(P)
        assert image in (three, fam.E.neg(three))


def test_verify_kernel_negative():
    lam = velu(curve_Eastar(1), O, 5)
    bad = IsogenyMap(lam.domain, lam.codomain, RatFunc(lam.x_map.num, UniPoly((0, 0, 1, 1))),
                     lam.y_u, lam.y_v, lam.y_w, 5, O)
    assert not verify_kernel(bad)


def test_equal_up_to_sign_detects_negation():
    lam = velu(curve_Eastar(3), O, 5)
    a1, _, a3, _, _ = lam.codomain.ainvs
    c, l = lam.y_parts()
    neg = IsogenyMap.from_parts(lam.domain, lam.codomain, lam.x_map,
                                -c - lam.x_map * a1 - a3, -l, 5, O)
    assert equal_up_to_sign(neg, lam)
    assert not equal_up_to_sign(velu(curve_Eastar(2), O, 5), lam)


def test_images_lie_on_codomain():
    C = curve_Eastar(2)
    lam = velu(C, O, 5)
    T = Point(Fraction(0), Fraction(0))
    assert torsion_order(C, T) == 5
    pts = [Point(Fraction(x), y) for x in range(-15, 16) for y in _rational_ys(C, Fraction(x))]
    for P in pts:
        assert lam.codomain.on_curve(lam(P))
