"""Exact elliptic-curve tools for classifying dihedral cubic, quintic and septic fields.

Brumer's quintic b(a,b;X), the cubic X^3 + bX + a and the septic N_a - b D_a
are each attached to a pair of curves linked by a rational isogeny of degree
3, 5 or 7.  Points of the first curve give polynomials; two polynomials share
a splitting field exactly when their points span the same line in the weak
Mordell-Weil quotient E(Q)/phi*(E*(Q)).
"""

from .errors import *  # noqa: F401,F403
from .exact import (
    QuadExt,
    RatFunc,
    UniPoly,
    is_rational_square,
    parse_poly,
    poly_discriminant,
    poly_gcd,
    poly_resultant,
)
from .curves import INF, Point, WeierstrassCurve, WeierstrassIso, torsion_order
from .isogeny import IsogenyMap, compose, equal_up_to_sign, evaluate, velu, verify_kernel
from .quintic import (
    QuinticFamily,
    brumer_poly,
    doubling_transform,
    family,
    hoshi_rikuna,
    kummer_poly,
    lecacheux_transform,
    quintic_d,
    quintic_j,
)
from .cubic import (
    CubicFamily,
    FixedDiscCurve,
    cubic_d,
    cubic_family,
    cubic_from_point,
    cubic_poly,
    fixed_disc_curve,
    point_from_monic,
    reduce_to_family,
)
from .septic import SepticFamily, septic_family, septic_poly
from .classify import (
    Classification,
    ImagePresentation,
    MWBasis,
    base_class,
    classify,
    decompose,
    enumerate_classes,
    image_presentation,
    membership,
    reducibility_oracle,
)

__version__ = "0.1.0"
