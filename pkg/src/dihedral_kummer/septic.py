"""The curve C_a with rational 7-torsion point (0,0) and its 7-isogeny psi.

No classification is attempted for the septic family; this module builds the
curve, the Velu isogeny, and the septic polynomials N_a(X) - b D_a(X).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import Point, WeierstrassCurve
from .errors import InvalidParametersError, SingularCurveError
from .exact import Q, RatFunc, UniPoly
from .isogeny import IsogenyMap, velu


def curve_C(a) -> WeierstrassCurve:
    a = Q(a)
    return WeierstrassCurve(a * a + a - 1, a * (a - 1), a ** 3 * (a - 1), 0, 0)


def N_poly(a) -> UniPoly:
    a = Q(a)
    m = a - 1
    return UniPoly((
        a ** 12 * m ** 6,
        a ** 9 * m ** 5 * (3 * a * a + 3 * a - 1),
        a ** 7 * m ** 4 * (a + 1) * (3 * a * a + 5 * a - 3),
        a ** 4 * m ** 3 * (a ** 5 + 7 * a ** 4 + 8 * a ** 3 - 4 * a * a - a - 1),
        a ** 3 * m ** 2 * (a ** 4 + 13 * a ** 3 - 12 * a * a + 9 * a - 6),
        -a * m * (a ** 5 - 7 * a ** 4 + 5 * a ** 3 - 3 * a * a + 2 * a + 1),
        2 * a * m * (a + 1),
        1,
    ))


def D_poly(a) -> UniPoly:
    a = Q(a)
    return UniPoly.from_roots([0, 0, -a * a * (a - 1), -a * a * (a - 1), -a * (a - 1), -a * (a - 1)])


def _check_a(a):
    a = Q(a)
    if a in (0, 1):
        raise InvalidParametersError(f"a = {a} is degenerate for the septic family")
    return a


def septic_poly(a, b) -> UniPoly:
    a = _check_a(a)
    return N_poly(a) - D_poly(a) * Q(b)


def septic_kernel_xcoords(a) -> set:
    a = _check_a(a)
    return {Fraction(0), -a * a * (a - 1), -a * (a - 1)}


@dataclass(frozen=True, eq=False)
class SepticFamily:
    a: Fraction
    C: WeierstrassCurve
    psi: IsogenyMap

    def printed_x_map(self) -> RatFunc:
        return RatFunc(N_poly(self.a), D_poly(self.a))

    def matches_printed(self) -> bool:
        return self.psi.x_map == self.printed_x_map()


def septic_family(a) -> SepticFamily:
    a = _check_a(a)
    try:
        C = curve_C(a)
    except SingularCurveError as exc:
        raise InvalidParametersError(str(exc)) from exc
    psi = velu(C, Point(Fraction(0), Fraction(0)), 7)
    return SepticFamily(a, C, psi)
