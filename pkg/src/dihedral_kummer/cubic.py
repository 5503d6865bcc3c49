"""Generic cubics X^3 + bX + a, their 3-isogenous curve pairs, and the
fixed-discriminant curves E_D : y^2 = x^3 - 432 D.

Both settings share one shape: for a nonzero constant c the curves

    E_c  : y^2 = x^3 - 432 c
    E*_c : y^2 = x^3 + 11664 c

are linked by explicit 3-isogenies phi: E_c -> E*_c and phi*: E*_c -> E_c.
The family uses c = a^2 d^3, the fixed-discriminant curve uses c = D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurvePoint, Point, WeierstrassCurve, WeierstrassIso, rational_point, torsion_order
from .errors import InfinityError, InvalidParametersError, KernelOrderError, ShapeError
from .exact import Q, RatFunc, UniPoly, is_rational_square, poly_discriminant, sqrt_in_field
from .isogeny import IsogenyMap, velu

ELL = 3


def cubic_poly(a, b) -> UniPoly:
    return UniPoly((Q(a), Q(b), 0, 1))


def cubic_d(a, b) -> Fraction:
    a, b = Q(a), Q(b)
    return -(4 * b ** 3 + 27 * a * a)


def _x_poly(*coeffs):
    return UniPoly(coeffs)


def phi_maps(c):
    """(E_c, E*_c, phi, phi*) with the explicit printed rational maps."""
    c = Q(c)
    E = WeierstrassCurve.short(0, -432 * c)
    Estar = WeierstrassCurve.short(0, 11664 * c)
    x3 = _x_poly(0, 0, 0, 1)
    phi = IsogenyMap(
        E, Estar,
        RatFunc(x3 - 1728 * c, _x_poly(0, 0, 1)),
        UniPoly(), x3 + 3456 * c, x3,
        ELL,
    )
    phi_star = IsogenyMap(
        Estar, E,
        RatFunc(x3 + 46656 * c, _x_poly(0, 0, 9)),
        UniPoly(), -x3 + 93312 * c, x3 * 27,
        ELL,
    )
    return E, Estar, phi, phi_star


@dataclass(frozen=True)
class CubicParams:
    a: Fraction
    b: Fraction
    d: Fraction


@dataclass(frozen=True, eq=False)
class CubicFamily:
    params: CubicParams
    E: WeierstrassCurve
    Estar: WeierstrassCurve
    phi: IsogenyMap
    phi_star_map: IsogenyMap
    Ea: WeierstrassCurve
    Eastar: WeierstrassCurve
    f: WeierstrassIso
    f_star: WeierstrassIso
    lambda_star: IsogenyMap
    is_degenerate: bool

    ell = ELL

    @property
    def a(self):
        return self.params.a

    @property
    def b(self):
        return self.params.b

    @property
    def d(self):
        return self.params.d

    @property
    def P0(self) -> Point:
        return self.base_point()

    def base_point(self) -> Point:
        """(-4db, 4d^2), the point whose beta is b itself."""
        P = Point(-4 * self.d * self.b, 4 * self.d ** 2)
        self.E._check(P)
        return P

    def phi_star(self, P: CurvePoint) -> CurvePoint:
        return cubic_phi_star_eval(self, P)

    def beta(self, P: CurvePoint) -> Fraction:
        if P is None:
            raise InfinityError("the point at infinity has no beta")
        return P.x / (-4 * self.d)

    def polynomial(self, P: CurvePoint) -> UniPoly:
        return cubic_poly(self.a, self.beta(P))

    def polynomial_of_beta(self, beta) -> UniPoly:
        return cubic_poly(self.a, beta)


def cubic_family(a, b) -> CubicFamily:
    a, b = Q(a), Q(b)
    d = cubic_d(a, b)
    if a == 0 or d == 0:
        raise InvalidParametersError(f"need a != 0 and d != 0, got a={a}, d={d}")
    E, Estar, phi, phi_star = phi_maps(a * a * d ** 3)
    Eastar = WeierstrassCurve(0, 0, 216 * a, 0, 0)
    origin = Point(Fraction(0), Fraction(0))
    if torsion_order(Eastar, origin, ELL) != ELL:
        raise KernelOrderError("(0,0) is not of order 3 on E*_a")
    lam = velu(Eastar, origin, ELL)
    Ea = lam.codomain
    sd = sqrt_in_field(d)
    f = WeierstrassIso(Ea, -3 / sd, 0, 0, -108 * a)
    f_star = WeierstrassIso(Eastar, 1 / sd, 0, 0, -108 * a)
    if f.source != E or f_star.source != Estar:
        raise AssertionError("twists of E_a, E*_a do not reproduce E_{a,b}, E*_{a,b}")
    return CubicFamily(CubicParams(a, b, d), E, Estar, phi, phi_star, Ea, Eastar, f, f_star,
                       lam, is_rational_square(d) is not None)


def cubic_phi_star_eval(fam, Pstar: CurvePoint) -> CurvePoint:
    """Image under the printed dual isogeny phi*."""
    return fam.phi_star_map(Pstar)


def conjugated_phi_star(fam: CubicFamily, Pstar: CurvePoint) -> CurvePoint:
    """f^-1 o lambda* o f*, an independent route to phi* (agrees up to sign)."""
    fam.Estar._check(Pstar)
    return rational_point(fam.f.inverse_image(fam.lambda_star(fam.f_star(Pstar))))


# --------------------------------------------------------------------------
# Fixed discriminant
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FixedDiscCurve:
    D: Fraction
    E_D: WeierstrassCurve
    Estar: WeierstrassCurve
    phi: IsogenyMap
    phi_star_map: IsogenyMap

    ell = ELL

    @property
    def E(self):
        return self.E_D

    def phi_star(self, P: CurvePoint) -> CurvePoint:
        return self.phi_star_map(P)

    def beta(self, P):
        return None

    def polynomial(self, P: CurvePoint) -> UniPoly:
        return cubic_from_point(self, P)


def fixed_disc_curve(D) -> FixedDiscCurve:
    D = Q(D)
    if D == 0:
        raise InvalidParametersError("D must be nonzero")
    E, Estar, phi, phi_star = phi_maps(D)
    return FixedDiscCurve(D, E, Estar, phi, phi_star)


def cubic_from_point(fd: FixedDiscCurve, P: CurvePoint) -> UniPoly:
    """F(P;X) = X^3 - x(P)/12 X - y(P)/108, of discriminant D."""
    if P is None:
        raise InfinityError("F(P;X) needs an affine point")
    fd.E_D._check(P)
    return UniPoly((-P.y / 108, -P.x / 12, 0, 1))


def point_from_monic(g: UniPoly):
    """(D, P_g) for a monic cubic g = X^3 - pX^2 + qX - r with nonzero discriminant."""
    if g.degree != 3 or g.lc() != 1:
        raise ShapeError(f"expected a monic cubic, got {g}")
    D = poly_discriminant(g)
    if D == 0:
        raise ShapeError(f"{g} has zero discriminant")
    p, q, r = -g[2], g[1], -g[0]
    P = Point(4 * (p * p - 3 * q), 4 * (2 * p ** 3 - 9 * p * q + 27 * r))
    fixed_disc_curve(D).E_D._check(P)
    return D, P


def depressed(g: UniPoly) -> UniPoly:
    """g(X + p/3) for monic cubic g = X^3 - pX^2 + ..., which has no X^2 term."""
    shift = -g[2] / 3
    return g.compose(UniPoly((shift, 1)))


def reduce_to_family(fd: FixedDiscCurve, P: CurvePoint):
    """Family parameters (a, b) = (-D^2, -D x(P)/4) and the scale s.

    (x, y) -> (s^2 x, s^3 y) with s = D^2 y(P)/4 maps E_D onto E_{a,b}.
    """
    if P is None:
        raise InfinityError("reduction needs an affine point")
    fd.E_D._check(P)
    D = fd.D
    a, b = -D * D, -D * P.x / 4
    d = cubic_d(a, b)
    if d == 0:
        raise InvalidParametersError(f"{P} has y = 0; the reduced cubic is degenerate")
    return CubicParams(a, b, d), D * D * P.y / 4
