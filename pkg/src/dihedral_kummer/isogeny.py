"""Cyclic isogenies of odd prime degree via Velu's formulas.

An isogeny is stored as explicit rational maps::

    x -> x_map(x)
    y -> (u(x) + v(x) * y) / w(x)

so it can be evaluated on points over Q or Q(sqrt d) and composed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurvePoint, Point, WeierstrassCurve, torsion_order
from .errors import DomainMismatchError, KernelOrderError
from .exact import RatFunc, UniPoly, poly_gcd


def _is_odd_prime(n: int) -> bool:
    return n >= 3 and n % 2 == 1 and all(n % p for p in range(3, int(n ** 0.5) + 1, 2))


def _lcm(p: UniPoly, q: UniPoly) -> UniPoly:
    return (p * q).exact_div(poly_gcd(p, q)).monic()


@dataclass(frozen=True, eq=False)
class IsogenyMap:
    domain: WeierstrassCurve
    codomain: WeierstrassCurve
    x_map: RatFunc
    y_u: UniPoly
    y_v: UniPoly
    y_w: UniPoly
    degree: int
    kernel_generator: CurvePoint = None

    @classmethod
    def from_parts(cls, domain, codomain, x_map, y_const: RatFunc, y_lin: RatFunc, degree,
                   kernel_generator=None):
        """Assemble ``y -> y_const(x) + y_lin(x) * y`` over a common denominator."""
        w = _lcm(y_const.den, y_lin.den)
        u = y_const.num * w.exact_div(y_const.den)
        v = y_lin.num * w.exact_div(y_lin.den)
        return cls(domain, codomain, x_map, u, v, w, degree, kernel_generator)

    @classmethod
    def identity(cls, C: WeierstrassCurve) -> IsogenyMap:
        one = UniPoly((1,))
        return cls(C, C, RatFunc.x(), UniPoly(), one, one, 1)

    @property
    def y_map(self):
        return (self.y_u, self.y_v, self.y_w)

    def y_parts(self):
        """(constant part, coefficient of y) of the y-map, each as a RatFunc."""
        return RatFunc(self.y_u, self.y_w), RatFunc(self.y_v, self.y_w)

    def __call__(self, P: CurvePoint) -> CurvePoint:
        return evaluate(self, P)

    def __repr__(self):
        return (f"IsogenyMap(degree={self.degree}, {self.domain} -> {self.codomain}, "
                f"x -> {self.x_map})")


def velu(C: WeierstrassCurve, K: Point, ell: int) -> IsogenyMap:
    """Separable isogeny with kernel <K>, K a rational point of odd prime order ell."""
    if not _is_odd_prime(ell):
        raise KernelOrderError(f"degree {ell} is not an odd prime")
    if K is None or torsion_order(C, K, ell) != ell:
        raise KernelOrderError(f"{K} does not have order {ell} on {C}")
    a1, a2, a3, a4, a6 = C.ainvs
    b2 = a1 * a1 + 4 * a2

    X = RatFunc.x()
    x_map = X
    y_const = RatFunc(0)
    y_lin = RatFunc(1)
    v_sum = Fraction(0)
    w_sum = Fraction(0)

    Qpt = K
    for _ in range((ell - 1) // 2):
        xq, yq = Qpt
        gx = 3 * xq * xq + 2 * a2 * xq + a4 - a1 * yq
        gy = -2 * yq - a1 * xq - a3
        vq = 2 * gx - a1 * gy
        uq = gy * gy
        v_sum += vq
        w_sum += uq + xq * vq

        t = RatFunc(1, UniPoly((-xq, 1)))  # 1/(x - xq)
        t2 = t * t
        t3 = t2 * t
        x_map = x_map + t * vq + t2 * uq
        y_lin = y_lin - t3 * (2 * uq) - t2 * vq
        y_const = (y_const
                   - t3 * uq * RatFunc(UniPoly((a3, a1)))
                   - t2 * RatFunc(UniPoly((vq * (-a1 * xq - yq) + a1 * uq - gx * gy, vq * a1))))
        Qpt = C._add(Qpt, K)

    codomain = WeierstrassCurve(a1, a2, a3, a4 - 5 * v_sum, a6 - b2 * v_sum - 7 * w_sum)
    return IsogenyMap.from_parts(C, codomain, x_map, y_const, y_lin, ell, K)


def evaluate(iso: IsogenyMap, P: CurvePoint) -> CurvePoint:
    """Image of P; kernel points (poles of the x-map) and infinity go to infinity."""
    iso.domain._check(P)
    if P is None:
        return None
    x, y = P
    den = iso.x_map.den(x)
    if not den:
        return None
    w = iso.y_w(x)
    if not w:
        return None
    return Point(iso.x_map.num(x) / den, (iso.y_u(x) + iso.y_v(x) * y) / w)


def compose(g: IsogenyMap, f: IsogenyMap) -> IsogenyMap:
    """The isogeny g o f."""
    if f.codomain != g.domain:
        raise DomainMismatchError("codomain of the inner map is not the domain of the outer map")
    X = f.x_map
    g_const, g_lin = g.y_parts()
    f_const, f_lin = f.y_parts()
    gc, gl = g_const.compose(X), g_lin.compose(X)
    y_const = gc + gl * f_const
    y_lin = gl * f_lin
    return IsogenyMap.from_parts(f.domain, g.codomain, g.x_map.compose(X), y_const, y_lin,
                                 f.degree * g.degree)


def equal_up_to_sign(f: IsogenyMap, g: IsogenyMap) -> bool:
    """True when f = g or f = [-1] o g (same x-map, y-maps related by negation)."""
    if f.domain != g.domain or f.codomain != g.codomain or f.x_map != g.x_map:
        return False
    fc, fl = f.y_parts()
    gc, gl = g.y_parts()
    if fc == gc and fl == gl:
        return True
    a1, _, a3, _, _ = f.codomain.ainvs
    neg_const = -gc - f.x_map * a1 - a3
    return fc == neg_const and fl == -gl


def verify_kernel(iso: IsogenyMap) -> bool:
    """Check that the x-map poles are exactly the x-coordinates of the kernel."""
    K = iso.kernel_generator
    if K is None or iso.degree < 3:
        return False
    C = iso.domain
    xs = set()
    Qpt = K
    for _ in range((iso.degree - 1) // 2):
        if Qpt is None:
            return False
        xs.add(Qpt.x)
        Qpt = C._add(Qpt, K)
    den = iso.x_map.den
    if not den:
        return False
    radical = den.exact_div(poly_gcd(den, den.derivative())).monic() if den.degree > 0 else den
    return radical == UniPoly.from_roots(sorted(xs))
