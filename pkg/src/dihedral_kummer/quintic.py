"""Brumer's dihedral quintic b(a,b;X) and its associated 5-isogenous curves.

For rational a, b with d = d(a, b) != 0 the family consists of

* ``E``     : E_{a,b}, on which rational points P give polynomials b(a, x(P)/(-4d); X)
* ``Estar`` : E*_{a,b}, the quadratic twist of E*_a by Q(sqrt d)
* ``Ea``, ``Eastar`` : curves over Q linked by the 5-isogeny lambda* with kernel <(0,0)>
* ``f``, ``f_star`` : the twisting isomorphisms E -> Ea and Estar -> Eastar over Q(sqrt d)

The dual isogeny phi*: Estar -> E is evaluated pointwise as f^-1 o lambda* o f*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurvePoint, Point, WeierstrassCurve, WeierstrassIso, rational_point
from .errors import InfinityError, InvalidParametersError, PoleError, SingularCurveError
from .exact import Q, RatFunc, UniPoly, is_rational_square, sqrt_in_field
from .isogeny import IsogenyMap, velu

ELL = 5


def brumer_poly(a, b) -> UniPoly:
    a, b = Q(a), Q(b)
    return UniPoly((a, b, a * a - a - 2 * b - 1, -(a - b - 3), a - 3, 1))


def _c0(a):
    return a * (4 * a ** 4 - 4 * a ** 3 - 40 * a ** 2 + 91 * a - 4)


def quintic_d(a, b) -> Fraction:
    a, b = Q(a), Q(b)
    return (-4 * b ** 3 + (a * a - 30 * a + 1) * b * b
            + 2 * a * (3 * a + 1) * (4 * a - 7) * b - _c0(a))


def quintic_j(a) -> Fraction:
    """Closed form for j(E*_{a,b}); it only depends on a."""
    a = Q(a)
    return (a ** 4 - 12 * a ** 3 + 14 * a ** 2 + 12 * a + 1) ** 3 / (a ** 5 * (a * a - 11 * a - 1))


def curve_E(a, b, d=None) -> WeierstrassCurve:
    a, b = Q(a), Q(b)
    d = quintic_d(a, b) if d is None else d
    return WeierstrassCurve(
        0,
        d * (a * a - 30 * a + 1),
        0,
        -8 * d * d * a * (3 * a + 1) * (4 * a - 7),
        -16 * d ** 3 * _c0(a),
    )


def curve_Eastar(a) -> WeierstrassCurve:
    """E*_a: y^2 - (a-1)xy - ay = x^3 - ax^2, with (0,0) of order 5."""
    a = Q(a)
    return WeierstrassCurve(-(a - 1), -a, -a, 0, 0)


def curve_Ea_display(a) -> WeierstrassCurve:
    """E_a as a closed form (the Velu codomain is used in practice; this is a check)."""
    a = Q(a)
    return WeierstrassCurve(-(a - 1), -a, -a, -5 * a * (a * a + 2 * a - 1),
                            -a * (a ** 4 + 10 * a ** 3 - 5 * a ** 2 + 15 * a - 1))


def lambda_star_formula(a) -> RatFunc:
    """Closed form of the x-map of lambda*: E*_a -> E_a."""
    a = Q(a)
    num = UniPoly((a ** 4, a ** 3 * (a - 3), -3 * a * a * (a - 1), a * (a * a + 3 * a - 1), -2 * a, 1))
    den = UniPoly.from_roots([0, 0, a, a])
    return RatFunc(num, den)


def hoshi_rikuna_pq(a, b):
    """Numerator and denominator of the closed-form parameter transform, as printed."""
    a, b = Q(a), Q(b)
    p = (b ** 4 + a * (3 * a + 1) * (4 * a - 7) * b * b - 2 * (_c0(a)) * b
         + a * (a ** 6 + 5 * a ** 5 - 81 * a ** 4 + 352 * a ** 3 - 634 * a ** 2 - 65 * a - 1))
    q = (4 * b ** 3 - (a * a - 30 * a + 1) * b * b - 2 * a * (3 * a + 1) * (4 * a - 7) * b + _c0(a))
    return p, q


def hoshi_rikuna(a, b) -> Fraction:
    """The closed-form transform p(a,b)/q(a,b).

    Known issue: at (1, 0) this gives -9, whose quadratic subfield differs from
    that of b(1,0;X).  :func:`doubling_transform` is the verified transform.
    """
    p, q = hoshi_rikuna_pq(a, b)
    if q == 0:
        raise PoleError(f"q(a,b) vanishes at ({a}, {b})")
    return p / q


def same_square_class(r, s) -> bool:
    """r and s (nonzero) differ by a rational square factor."""
    return is_rational_square(Q(r) / Q(s)) is not None


@dataclass(frozen=True, eq=False)
class QuinticFamily:
    a: Fraction
    b: Fraction
    d: Fraction
    E: WeierstrassCurve
    Estar: WeierstrassCurve
    Ea: WeierstrassCurve
    Eastar: WeierstrassCurve
    lambda_star: IsogenyMap
    f: WeierstrassIso
    f_star: WeierstrassIso
    is_degenerate: bool

    ell = ELL

    @property
    def P0(self) -> Point:
        return base_point(self)

    def base_point(self) -> Point:
        return base_point(self)

    def phi_star(self, P: CurvePoint) -> CurvePoint:
        return phi_star_eval(self, P)

    def beta(self, P: CurvePoint) -> Fraction:
        return point_to_beta(self, P)

    def polynomial(self, P: CurvePoint) -> UniPoly:
        return brumer_from_point(self, P)

    def polynomial_of_beta(self, beta) -> UniPoly:
        return brumer_poly(self.a, beta)


def family(a, b) -> QuinticFamily:
    a, b = Q(a), Q(b)
    if a == 0:
        raise InvalidParametersError("a must be nonzero")
    d = quintic_d(a, b)
    if d == 0:
        raise InvalidParametersError(f"d({a}, {b}) = 0")
    try:
        E = curve_E(a, b, d)
        Eastar = curve_Eastar(a)
    except SingularCurveError as exc:
        raise InvalidParametersError(str(exc)) from exc

    lam = velu(Eastar, Point(Fraction(0), Fraction(0)), ELL)
    Ea = lam.codomain
    sd = sqrt_in_field(d)
    f = WeierstrassIso(Ea, 1 / (2 * sd), -2 * a, (a - 1) / 2, -a * (2 * a - 3) / 2)
    f_star = WeierstrassIso(
        Eastar,
        1 / (10 * sd),
        -2 * (a * a - 5 * a + 1) / Fraction(25),
        (a - 1) / 2,
        -(2 * a ** 3 - 12 * a ** 2 - 13 * a - 2) / Fraction(50),
    )
    if f.source != E:
        raise AssertionError("twist of E_a does not reproduce E_{a,b}")
    return QuinticFamily(a, b, d, E, f_star.source, Ea, Eastar, lam, f, f_star,
                         is_rational_square(d) is not None)


def base_point(fam: QuinticFamily) -> Point:
    P = Point(-4 * fam.d * fam.b, 4 * fam.d ** 2)
    fam.E._check(P)
    return P


def phi_star_eval(fam: QuinticFamily, Pstar: CurvePoint) -> CurvePoint:
    """phi*(P) computed through Q(sqrt d) as f^-1(lambda*(f*(P)))."""
    fam.Estar._check(Pstar)
    image = fam.f.inverse_image(fam.lambda_star(fam.f_star(Pstar)))
    P = rational_point(image)
    fam.E._check(P)
    return P


def point_to_beta(fam: QuinticFamily, P: CurvePoint) -> Fraction:
    if P is None:
        raise InfinityError("the point at infinity has no beta")
    fam.E._check(P)
    return P.x / (-4 * fam.d)


def brumer_from_point(fam: QuinticFamily, P: CurvePoint) -> UniPoly:
    return brumer_poly(fam.a, point_to_beta(fam, P))


def kummer_poly(fam: QuinticFamily, P: CurvePoint) -> UniPoly:
    """B(X) = N(X) - x(f(P)) D(X), with N/D the x-map of lambda*."""
    if P is None:
        raise InfinityError("B(X) needs an affine point")
    fam.E._check(P)
    xf = P.x / (4 * fam.d) - 2 * fam.a
    lam = fam.lambda_star.x_map
    return lam.num - lam.den * xf


def lecacheux_transform(B: UniPoly, a) -> UniPoly:
    """(X^5 / a^4) * B(a / X), which turns B(X) back into a Brumer quintic."""
    a = Q(a)
    n = 5
    return UniPoly(B[n - k] * a ** (n - k - 4) for k in range(n + 1))


def doubling_transform(fam: QuinticFamily, P: CurvePoint) -> Fraction:
    """beta' = x([2]P)/(-4d): the parameter attached to the doubled point."""
    if P is None:
        raise InfinityError("cannot double the point at infinity")
    P2 = fam.E.mul(2, P)
    if P2 is None:
        raise InfinityError(f"[2]{P} is the point at infinity")
    return point_to_beta(fam, P2)


def doubling_orbit(fam: QuinticFamily, P: CurvePoint | None = None, iterate: int = 1):
    """Points [2^i]P and their betas for i = 1..iterate (P defaults to P0)."""
    P = fam.P0 if P is None else P
    out = []
    for _ in range(iterate):
        P = fam.E.mul(2, P)
        if P is None:
            raise InfinityError("doubling reached the point at infinity")
        out.append((P, point_to_beta(fam, P)))
    return out

