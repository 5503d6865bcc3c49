"""Long Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

Coordinates may be Fractions or :class:`~dihedral_kummer.exact.QuadExt`
elements; the group law only uses field operations so it runs unchanged over
Q and over Q(sqrt d).  The point at infinity is ``None``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import PointValidationError, SingularCurveError
from .exact import Q, QuadExt


class Point(NamedTuple):
    x: object
    y: object

    def __str__(self):
        return f"({self.x}, {self.y})"


CurvePoint = Optional[Point]
INF = None


def _field(c):
    return c if isinstance(c, QuadExt) else Q(c)


def b_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def curve_disc(a1, a2, a3, a4, a6):
    """Discriminant of the Weierstrass equation with the given coefficients."""
    a1, a2, a3, a4, a6 = map(_field, (a1, a2, a3, a4, a6))
    b2, b4, b6, b8 = b_invariants(a1, a2, a3, a4, a6)
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


class WeierstrassCurve:
    __slots__ = ("a1", "a2", "a3", "a4", "a6", "discriminant")

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0):
        self.a1, self.a2, self.a3, self.a4, self.a6 = map(_field, (a1, a2, a3, a4, a6))
        self.discriminant = curve_disc(*self.ainvs)
        if self.discriminant == 0:
            raise SingularCurveError(f"singular Weierstrass equation {self.ainvs}")

    @classmethod
    def short(cls, a4, a6):
        return cls(0, 0, 0, a4, a6)

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self):
        return b_invariants(*self.ainvs)

    @property
    def c4(self):
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - 24 * b4

    def j_invariant(self):
        return self.c4 ** 3 / self.discriminant

    # -- points --------------------------------------------------------------

    def lhs_minus_rhs(self, x, y):
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)

    def on_curve(self, P: CurvePoint) -> bool:
        if P is None:
            return True
        return self.lhs_minus_rhs(P.x, P.y) == 0

    __contains__ = on_curve

    def point(self, x, y) -> Point:
        """Build a validated affine point from coordinate values or strings."""
        P = Point(_field(x), _field(y))
        if not self.on_curve(P):
            raise PointValidationError(f"({x}, {y}) is not on {self}")
        return P

    def _check(self, *points):
        for P in points:
            if not self.on_curve(P):
                raise PointValidationError(f"{P} is not on {self}")

    def neg(self, P: CurvePoint) -> CurvePoint:
        self._check(P)
        return self._neg(P)

    def _neg(self, P):
        if P is None:
            return None
        return Point(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._check(P, Q)
        return self._add(P, Q)

    def sub(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._check(P, Q)
        return self._add(P, self._neg(Q))

    def _add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        a1, a2, a3, a4, _ = self.ainvs
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return None
            m = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
        else:
            m = (y2 - y1) / (x2 - x1)
        x3 = m * m + a1 * m - a2 - x1 - x2
        y3 = -(m + a1) * x3 - (y1 - m * x1) - a3
        return Point(x3, y3)

    def mul(self, n: int, P: CurvePoint) -> CurvePoint:
        self._check(P)
        return self._mul(n, P)

    def _mul(self, n, P):
        if n < 0:
            return self._neg(self._mul(-n, P))
        acc, base = None, P
        while n:
            if n & 1:
                acc = self._add(acc, base)
            base = self._add(base, base)
            n >>= 1
        return acc

    def combination(self, coeffs, points) -> CurvePoint:
        """Sum of ``n_i * P_i``."""
        acc = None
        for n, P in zip(coeffs, points):
            if n:
                acc = self._add(acc, self._mul(n, P))
        return acc

    # -- coordinate changes --------------------------------------------------

    def transform(self, u, r, s, t) -> WeierstrassCurve:
        """Curve E' reached by x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        inv = 1 / _field(u)
        na1 = (a1 + 2 * s) * inv
        na2 = (a2 - s * a1 + 3 * r - s * s) * inv ** 2
        na3 = (a3 + r * a1 + 2 * t) * inv ** 3
        na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * inv ** 4
        na6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) * inv ** 6
        coeffs = [c.to_rational() if isinstance(c, QuadExt) and c.is_rational() else c
                  for c in (na1, na2, na3, na4, na6)]
        return WeierstrassCurve(*coeffs)

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        return f"WeierstrassCurve{tuple(str(c) for c in self.ainvs)}"

    def __str__(self):
        a1, a2, a3, a4, a6 = self.ainvs

        def term(c, mono):
            if c == 0:
                return ""
            if isinstance(c, QuadExt):
                return f" + ({c})" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                return f" {sign} {mono}"
            return f" {sign} {mag}" + (f"*{mono}" if mono else "")

        lhs = "y^2" + term(a1, "x*y") + term(a3, "y")
        rhs = "x^3" + term(a2, "x^2") + term(a4, "x") + term(a6, "")
        return f"{lhs} = {rhs}"


def torsion_order(C: WeierstrassCurve, P: CurvePoint, bound: int = 12) -> int | None:
    """Smallest n <= bound with [n]P = 0, or None.

    The default bound 12 is Mazur's bound for curves over Q; over a quadratic
    field pass an explicit bound.
    """
    C._check(P)
    acc = P
    for n in range(1, bound + 1):
        if acc is None:
            return n
        acc = C._add(acc, P)
    return None


class WeierstrassIso:
    """Isomorphism (x, y) -> (u^2 x + r, u^3 y + s u^2 x + t) from source to target.

    ``u`` may live in Q(sqrt d); that is how the quadratic twists are realised.
    """

    def __init__(self, target: WeierstrassCurve, u, r, s, t):
        self.u, self.r, self.s, self.t = _field(u), _field(r), _field(s), _field(t)
        self.target = target
        self.source = target.transform(u, r, s, t)

    def __call__(self, P: CurvePoint) -> CurvePoint:
        if P is None:
            return None
        self.source._check(P)
        u2 = self.u * self.u
        return Point(u2 * P.x + self.r, u2 * self.u * P.y + self.s * u2 * P.x + self.t)

    def inverse_image(self, P: CurvePoint) -> CurvePoint:
        if P is None:
            return None
        self.target._check(P)
        u2 = self.u * self.u
        x = (P.x - self.r) / u2
        y = (P.y - self.s * u2 * x - self.t) / (u2 * self.u)
        return Point(x, y)


def rational_point(P: CurvePoint) -> CurvePoint:
    """Collapse a point with Q(sqrt d) coordinates to Q (ConjugationError otherwise)."""
    if P is None:
        return None
    x, y = P
    return Point(x.to_rational() if isinstance(x, QuadExt) else Fraction(x),
                 y.to_rational() if isinstance(y, QuadExt) else Fraction(y))
