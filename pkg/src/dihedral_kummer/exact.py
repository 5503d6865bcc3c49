"""Exact scalar and polynomial arithmetic over Q and Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values.  On top of them this
module provides dense univariate polynomials, rational functions and the
quadratic-extension elements ``u + v*sqrt(d)`` used when the twisting
isomorphisms are evaluated on points.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from .errors import (
    ConjugationError,
    DegreeError,
    FieldMismatchError,
    ShapeError,
    SquareRadicandError,
    ZeroPolynomialError,
)

Rational = Fraction


def Q(value) -> Fraction:
    """Coerce ints, strings like ``"-29/4"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value.strip() if isinstance(value, str) else value)
    if isinstance(value, QuadExt):
        return value.to_rational()
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def is_rational_square(r) -> Fraction | None:
    """Return the non-negative square root of ``r`` if it is a rational square."""
    r = Q(r)
    if r < 0:
        return None
    n, m = r.numerator, r.denominator
    sn, sm = isqrt(n), isqrt(m)
    if sn * sn == n and sm * sm == m:
        return Fraction(sn, sm)
    return None


# --------------------------------------------------------------------------
# Quadratic extension
# --------------------------------------------------------------------------


class QuadExt:
    """The element ``u + v*sqrt(d)`` of Q(sqrt d), d a non-square."""

    __slots__ = ("d", "u", "v")

    def __init__(self, d, u=0, v=0):
        d = Q(d)
        if d == 0 or is_rational_square(d) is not None:
            raise SquareRadicandError(f"radicand {d} is a rational square; work over Q")
        self.d, self.u, self.v = d, Q(u), Q(v)

    @classmethod
    def _raw(cls, d, u, v):
        obj = object.__new__(cls)
        obj.d, obj.u, obj.v = d, u, v
        return obj

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(f"radicands differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._raw(self.d, Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.d, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(self.d, -self.u, -self.v)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.d, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(
            self.d,
            self.u * o.u + self.d * self.v * o.v,
            self.u * o.v + self.v * o.u,
        )

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        return QuadExt._raw(self.d, self.u, -self.v)

    def norm(self) -> Fraction:
        return self.u * self.u - self.d * self.v * self.v

    def inv(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        return QuadExt._raw(self.d, self.u / n, -self.v / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = QuadExt._raw(self.d, Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.d, self.u, self.v))

    def is_rational(self) -> bool:
        return self.v == 0

    def to_rational(self) -> Fraction:
        if self.v != 0:
            raise ConjugationError(f"{self!r} has a nonzero sqrt({self.d}) component")
        return self.u

    def __repr__(self):
        return f"QuadExt(d={self.d}, u={self.u}, v={self.v})"

    def __str__(self):
        return f"{self.u} + ({self.v})*sqrt({self.d})"


def sqrt_in_field(d):
    """sqrt(d) as a Fraction when d is a square, else as a QuadExt generator."""
    d = Q(d)
    root = is_rational_square(d)
    if root is not None:
        return root
    return QuadExt(d, 0, 1)


def as_rational(value) -> Fraction:
    """Collapse a field element to Q, failing loudly if sqrt(d) survives."""
    if isinstance(value, QuadExt):
        return value.to_rational()
    return Q(value)


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------


class UniPoly:
    """Dense polynomial in one variable with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``X**i``; the zero polynomial has no
    coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-Q(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        inv_lc = 1 / o.lc()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lc
            if c:
                quot[k - dq] = c
                for j, b in enumerate(o.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> UniPoly:
        return self * (1 / self.lc())

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (Fraction, QuadExt, ...)."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (the zero polynomial when both inputs vanish)."""
    while q:
        p, q = q, p % q
    return p.monic() if p else p


def _det(rows) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def sylvester_matrix(p: UniPoly, q: UniPoly):
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    hp = list(reversed(p.coeffs))
    hq = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + hp + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + hq + [0] * (size - n - 1 - i))
    return rows


def poly_resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant as the determinant of the Sylvester matrix (highest degree first)."""
    if not p or not q:
        raise ZeroPolynomialError("resultant of a zero polynomial")
    if p.degree == 0:
        return p.lc() ** q.degree
    if q.degree == 0:
        return q.lc() ** p.degree
    return _det(sylvester_matrix(p, q))


def poly_discriminant(p: UniPoly) -> Fraction:
    n = p.degree
    if n < 2:
        raise DegreeError(f"discriminant needs degree >= 2, got {n}")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * poly_resultant(p, p.derivative()) / p.lc()


# --------------------------------------------------------------------------
# Rational functions
# --------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly._coerce(num)
        den = UniPoly((1,)) if den is None else (den if isinstance(den, UniPoly) else UniPoly._coerce(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = UniPoly(), UniPoly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc()
        self.num, self.den = num * (1 / c), den * (1 / c)

    @classmethod
    def x(cls) -> RatFunc:
        return cls(UniPoly.x())

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (UniPoly, int, Fraction)):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(1) / (self ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError("rational function evaluated at a pole")
        return self.num(x) / dv

    def compose(self, inner: RatFunc) -> RatFunc:
        """``self(inner(x))`` computed by homogenising at the common degree."""
        inner = self._coerce(inner)
        n = max(self.num.degree, self.den.degree, 0)
        pows_n = [UniPoly((1,))]
        pows_d = [UniPoly((1,))]
        for _ in range(n):
            pows_n.append(pows_n[-1] * inner.num)
            pows_d.append(pows_d[-1] * inner.den)

        def homog(p: UniPoly) -> UniPoly:
            acc = UniPoly()
            for i, c in enumerate(p.coeffs):
                if c:
                    acc = acc + pows_n[i] * pows_d[n - i] * c
            return acc

        return RatFunc(homog(self.num), homog(self.den))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


# --------------------------------------------------------------------------
# A tiny polynomial reader: digits, X, ^, +, -, / and optional *
# --------------------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*\*?\s*
        (?P<var>[Xx](?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> UniPoly:
    """Parse ``"X^3 - 2/3*X + 1"`` style input into a UniPoly."""
    s = text.strip()
    if not s:
        raise ShapeError("empty polynomial text")
    pos, coeffs = 0, {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ShapeError(f"cannot parse polynomial near {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ShapeError(f"missing operator near {s[pos:]!r}")
        first = False
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("var"):
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
    top = max(coeffs)
    return UniPoly(coeffs.get(i, 0) for i in range(top + 1))
