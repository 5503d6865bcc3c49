from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_kummer.errors import (
    ConjugationError,
    DegreeError,
    FieldMismatchError,
    ShapeError,
    SquareRadicandError,
    ZeroPolynomialError,
)
from dihedral_kummer.exact import (
    QuadExt,
    RatFunc,
    UniPoly,
    is_rational_square,
    parse_poly,
    poly_discriminant,
    poly_gcd,
    poly_resultant,
    sqrt_in_field,
)

X = sympy.Symbol("X")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
nonzero = rationals.filter(bool)
polys = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=1, max_size=6)


def to_sympy(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** i for i, c in enumerate(p.coeffs))


def P(*coeffs):
    return UniPoly(coeffs)


# ---- discriminants and resultants ----------------------------------------

def test_discriminant_examples():
    assert poly_discriminant(P(1, 0, 1)) == -4
    assert poly_discriminant(P(1, 1, 0, 1)) == -31
    assert poly_discriminant(P(1, 0, -1, 2, -2, 1)) == 2209


def test_resultant_examples():
    # standard Sylvester convention; see notes on the sign of Res(X-1, X+1)
    assert poly_resultant(P(-1, 1), P(1, 1)) == 2
    assert poly_resultant(P(1, 0, 1), P(0, 1)) == 1
    assert poly_resultant(P(1, 1, 0, 1), P(1, 0, 3)) == 31


def test_resultant_matches_sympy_on_examples():
    for p, q in [(P(-1, 1), P(1, 1)), (P(1, 1, 0, 1), P(1, 0, 3)), (P(3, -2, 0, 5), P(-7, 0, 1))]:
        assert poly_resultant(p, q) == sympy.resultant(to_sympy(p), to_sympy(q), X)


def test_discriminant_degree_error():
    with pytest.raises(DegreeError):
        poly_discriminant(P(1, 1))


def test_resultant_zero_error():
    with pytest.raises(ZeroPolynomialError):
        poly_resultant(UniPoly(), P(1, 1))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_resultant_vs_sympy(a, b):
    p, q = UniPoly(a), UniPoly(b)
    if not p or not q or p.degree + q.degree == 0:
        return
    if p.degree < q.degree:
        p, q = q, p
    # sympy's sign is only the Sylvester one when deg p >= deg q
    assert poly_resultant(p, q) == sympy.resultant(to_sympy(p), to_sympy(q), X)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_resultant_antisymmetry(a, b):
    p, q = UniPoly(a), UniPoly(b)
    if not p or not q:
        return
    sign = -1 if (p.degree * q.degree) % 2 else 1
    assert poly_resultant(q, p) == sign * poly_resultant(p, q)


def test_resultant_root_product():
    # Res(p, q) = lc(p)^deg q * prod q(alpha) over the roots alpha of p
    p = UniPoly.from_roots([1, -2, Fraction(1, 3)]) * 2
    q = P(5, 0, -1, 1, 1)
    expect = Fraction(2) ** 4
    for r in (1, -2, Fraction(1, 3)):
        expect *= q(Fraction(r))
    assert poly_resultant(p, q) == expect
    assert poly_resultant(P(1, 1), P(0, 1, 0, 1)) == -2


@settings(max_examples=60, deadline=None)
@given(polys)
def test_discriminant_vs_sympy(a):
    p = UniPoly(a)
    if p.degree < 2:
        return
    assert poly_discriminant(p) == sympy.discriminant(to_sympy(p), X)


@settings(max_examples=100, deadline=None)
@given(rationals, rationals)
def test_depressed_cubic_discriminant(a, b):
    assert poly_discriminant(P(a, b, 0, 1)) == -(4 * b ** 3 + 27 * a * a)


# ---- quadratic extension ---------------------------------------------------

def test_quad_examples():
    d = Fraction(-47)
    one_plus = QuadExt(d, 1, 1)
    assert one_plus * one_plus.conj() == 1 - d
    s = QuadExt(d, 0, 1)
    assert s.inv() == QuadExt(d, 0, 1 / d)
    assert QuadExt(d, 3, 2).norm() == 197


def test_quad_errors():
    with pytest.raises(SquareRadicandError):
        QuadExt(4, 1, 1)
    with pytest.raises(FieldMismatchError):
        QuadExt(2, 1, 1) + QuadExt(3, 1, 1)
    with pytest.raises(ZeroDivisionError):
        QuadExt(2, 0, 0).inv()
    with pytest.raises(ConjugationError):
        QuadExt(2, 1, 1).to_rational()


def test_sqrt_in_field_collapses_squares():
    assert sqrt_in_field(Fraction(14641)) == 121
    r = sqrt_in_field(-47)
    assert isinstance(r, QuadExt) and r * r == -47


@settings(max_examples=100, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_norm_multiplicative(u1, v1, u2, v2):
    d = Fraction(-47)
    x, y = QuadExt(d, u1, v1), QuadExt(d, u2, v2)
    assert (x * y).norm() == x.norm() * y.norm()


@settings(max_examples=100, deadline=None)
@given(rationals, rationals)
def test_quad_inverse(u, v):
    x = QuadExt(Fraction(5), u, v)
    if not x:
        return
    assert x * x.inv() == 1
    assert x / x == 1


def test_quad_mixes_with_fractions():
    x = QuadExt(Fraction(2), Fraction(1, 2), 3)
    assert x + Fraction(1, 2) == QuadExt(2, 1, 3)
    assert 2 * x == QuadExt(2, 1, 6)
    assert QuadExt(2, 5, 0) == 5 and hash(QuadExt(2, 5, 0)) == hash(Fraction(5))


# ---- squares -----------------------------------------------------------------

def test_is_rational_square():
    assert is_rational_square(Fraction(4, 9)) == Fraction(2, 3)
    assert is_rational_square(14641) == 121
    assert is_rational_square(-47) is None
    assert is_rational_square(0) == 0
    assert is_rational_square(Fraction(2, 9)) is None


@given(rationals)
def test_square_roundtrip(r):
    assert is_rational_square(r * r) == abs(r)


# ---- polynomials -------------------------------------------------------------

def test_unipoly_normalises_and_prints():
    p = UniPoly([1, 0, 2, 0, 0])
    assert p.degree == 2 and p.coeffs == (1, 0, 2)
    assert UniPoly().degree == -1 or not UniPoly()
    assert str(P(1, 0, -1, 2, -2, 1)) == "X^5 - 2*X^4 + 2*X^3 - X^2 + 1"


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_divmod_identity(a, b):
    p, q = UniPoly(a), UniPoly(b)
    if not q:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert not rem or rem.degree < q.degree


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_gcd_vs_sympy(a, b, c):
    p, q, r = UniPoly(a), UniPoly(b), UniPoly(c)
    if not (p and q and r):
        return
    g = poly_gcd(p * r, q * r)
    ref = sympy.Poly(sympy.gcd(to_sympy(p * r), to_sympy(q * r)), X).monic()
    assert to_sympy(g).expand() == ref.as_expr().expand()


def test_compose_and_eval():
    p = P(1, 1, 0, 1)
    assert p.compose(P(0, 2)) == P(1, 2, 0, 8)
    assert p(Fraction(1, 2)) == Fraction(13, 8)
    assert p(QuadExt(-3, 0, 1)) == QuadExt(-3, 1, -2)


def test_ratfunc_normal_form():
    f = RatFunc(P(-1, 0, 1) * 3, P(2, 2))     # 3(x^2-1) / 2(x+1)
    assert f.num == P(Fraction(-3, 2), Fraction(3, 2)) and f.den == P(1)
    g = RatFunc(P(0, 1), P(2, 4))
    assert g.den.lc() == 1
    assert RatFunc(g.num, g.den) == g
    with pytest.raises(ZeroDivisionError):
        RatFunc(P(1), UniPoly())


def test_ratfunc_compose():
    f = RatFunc(P(1, 0, 1), P(0, 1))            # (x^2+1)/x
    g = RatFunc(P(1), P(0, 1))                  # 1/x
    assert f.compose(g) == f
    assert f(Fraction(2)) == Fraction(5, 2)


def test_parse_poly():
    assert parse_poly("X^3+X+1") == P(1, 1, 0, 1)
    assert parse_poly("x^3 - 2/3*x + 1") == P(1, Fraction(-2, 3), 0, 1)
    assert parse_poly("-X^2") == P(0, 0, -1)
    for bad in ("", "X^^2", "X 3", "foo"):
        with pytest.raises(ShapeError):
            parse_poly(bad)
