import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_kummer.classify import (
    MWBasis,
    class_of,
    classify,
    decompose,
    enumerate_classes,
    hermite_normal_form,
    image_presentation,
    membership,
    normalize_line,
    projective_points,
    reducibility_oracle,
    rref_mod,
)
from dihedral_kummer.curves import Point
from dihedral_kummer.errors import (
    BaseReducibleFlag,
    DecompositionNotFound,
    EmptyQuotient,
    PointValidationError,
)
from dihedral_kummer.exact import UniPoly
from dihedral_kummer.jsonio import classification_to_json, dumps
from dihedral_kummer.quintic import brumer_poly, quintic_d, same_square_class


@pytest.fixture(scope="module")
def pres10(fam10, bases10):
    return image_presentation(fam10, *bases10)


@pytest.fixture(scope="module")
def pres22(fam22, bases22):
    return image_presentation(fam22, *bases22)


def test_decompose_examples(fam10, fam22, bases10, bases22):
    E, Es = bases10
    assert decompose(fam10.phi_star(Es.free[0]), E) == (-1, 2)
    E2, Es2 = bases22
    row = decompose(fam22.phi_star(Es2.free[2]), E2)
    assert row in ((-3, -2, -1), (3, 2, 1))
    assert decompose(None, E) == (0, 0)


@pytest.mark.parametrize("n", range(-3, 4))
def test_decompose_multiples_of_generators(bases22, n):
    E = bases22[0]
    for i, G in enumerate(E.free):
        want = tuple(n if j == i else 0 for j in range(E.rank))
        assert decompose(E.curve.mul(n, G), E) == want


def test_decompose_out_of_bound(bases10):
    E = bases10[0]
    P = E.point((4, 0))
    with pytest.raises(DecompositionNotFound, match="bound"):
        decompose(P, E, bound=3)
    assert decompose(P, E, bound=4) == (4, 0)


def test_decompose_rejects_off_curve(bases10):
    with pytest.raises(PointValidationError):
        decompose(Point(Fraction(1), Fraction(1)), bases10[0])


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.integers(-2, 2)] * 3))
def test_decompose_round_trip(bases22_h, coeffs):
    E = bases22_h[0]
    assert decompose(E.point(coeffs), E) == coeffs


@pytest.fixture(scope="module")
def bases22_h(bases22):
    return bases22


def test_hnf():
    assert hermite_normal_form([[-1, 2], [2, 1]]) == [[1, 3], [0, 5]]
    assert hermite_normal_form([[0, 0], [2, 4]]) == [[2, 4]]
    assert hermite_normal_form([]) == []
    assert hermite_normal_form([[6, 4], [4, 2]]) == [[2, 0], [0, 2]]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=5))
def test_hnf_preserves_lattice(rows):
    import sympy
    H = hermite_normal_form(rows)
    for i, r in enumerate(H):
        pc = next(j for j, c in enumerate(r) if c)
        assert r[pc] > 0
        for prev in H[:i]:
            assert 0 <= prev[pc] < r[pc]
    # same row space over Z: same rank and same gcd of maximal minors
    A = sympy.Matrix(rows)
    B = sympy.Matrix(H) if H else sympy.zeros(1, 3)
    assert A.rank() == (len(H) if H else 0)
    if H:
        k = len(H)
        def minors_gcd(M):
            g = 0
            for rs in itertools.combinations(range(M.rows), k):
                for cs in itertools.combinations(range(3), k):
                    g = sympy.igcd(g, M.extract(list(rs), list(cs)).det())
            return abs(g)
        assert minors_gcd(A) == minors_gcd(B)


def test_rref_mod():
    rows, piv = rref_mod([[2, 4, 1], [1, 2, 4]], 5)
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]
    assert rref_mod([], 5) == ([], [])


def test_projective_points():
    for k, ell in [(1, 5), (2, 5), (3, 3), (2, 7)]:
        pts = projective_points(k, ell)
        assert len(pts) == (ell ** k - 1) // (ell - 1)
        assert len(set(pts)) == len(pts)
        assert all(normalize_line(p, ell) == p for p in pts)
    assert normalize_line((0, 3, 1), 5) == (0, 1, 2)


def test_image_presentations(pres10, pres22, cub11, bases11):
    assert pres10.hnf == [[1, 3], [0, 5]]
    assert (pres10.quotient_rank, pres10.index) == (1, 5)
    assert pres22.hnf == [[1, 4, 2], [0, 5, 0], [0, 0, 5]]
    assert (pres22.quotient_rank, pres22.index) == (2, 25)
    assert pres22.elementary
    p3 = image_presentation(cub11, *bases11)
    assert p3.quotient_rank == 1 and p3.ell == 3
    assert hermite_normal_form(p3.hnf) == hermite_normal_form([[0, 1], [3, 0]])


def test_membership_examples(pres10, bases10):
    E = bases10[0]
    assert membership(E.point((1, 3)), pres10, E)
    assert not membership(E.point((1, 0)), pres10, E)
    assert membership(None, pres10, E)


def test_torsion_quotient(fam118, bases118):
    pres = image_presentation(fam118, *bases118)
    assert pres.quotient_rank == 1
    result = classify(fam118, *bases118)
    assert len(result.classes) == 1
    assert result.base_class == 0
    assert result.base_coefficients == (1,)


def test_empty_quotient(fam10, bases10):
    E, Es = bases10
    pres = image_presentation(fam10, E, Es)
    # pretend the image is everything: quotient rank 0
    pres.quotient_rank = 0
    with pytest.raises(EmptyQuotient):
        enumerate_classes(pres, E, fam10)


def test_base_reducible_flag(fam10, bases10):
    from dihedral_kummer.classify import base_class
    E, Es = bases10
    pres = image_presentation(fam10, E, Es)
    result = enumerate_classes(pres, E, fam10)
    with pytest.raises(BaseReducibleFlag):
        base_class(fam10, pres, E, result, point=E.point((1, 3)))


def test_class_counts(pres22, fam22, bases22):
    result = enumerate_classes(pres22, bases22[0], fam22)
    assert len(result.classes) == 6
    for entry in result.classes:
        assert not pres22.contains(entry.coefficients)
        assert entry.beta == fam22.beta(entry.representative)


def test_classification_is_deterministic(fam22, bases22):
    a = dumps(classification_to_json(classify(fam22, *bases22)), compact=True)
    b = dumps(classification_to_json(classify(fam22, *bases22)), compact=True)
    assert a == b


def test_same_coset_same_quadratic_subfield(pres22, fam22, bases22):
    E = bases22[0]
    seen = {}
    for c in itertools.product(range(-1, 2), repeat=3):
        line = class_of(c, pres22)
        if line is None:
            continue
        d = quintic_d(2, fam22.beta(E.point(c)))
        if line in seen:
            assert same_square_class(d, seen[line])
        else:
            seen[line] = d
    # all points give the square class of d(2,2)
    assert all(same_square_class(d, fam22.d) for d in seen.values())


def test_oracle_examples(fam10, bases10):
    E = bases10[0]
    assert reducibility_oracle(fam10.polynomial(E.point((1, 3))))
    assert not reducibility_oracle(brumer_poly(1, 0))
    assert reducibility_oracle(UniPoly((-1, 1)) * UniPoly((1, 0, 0, 0, 1)))
    assert not reducibility_oracle(UniPoly((1, 1, 0, 1)))        # X^3+X+1
    assert reducibility_oracle(UniPoly((0, 1, 0, 1)))            # X(X^2+1)
    assert not reducibility_oracle(UniPoly((Fraction(1, 4), 0, 0, 0, -1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=5), st.lists(st.integers(-4, 4), min_size=1, max_size=2))
def test_oracle_agrees_with_sympy(low, tail):
    import sympy
    X = sympy.Symbol("X")
    coeffs = low + tail + [1]
    p = UniPoly(coeffs)
    expr = sympy.Poly(sum(c * X ** i for i, c in enumerate(coeffs)), X)
    _, factors = sympy.factor_list(expr)
    sym = len(factors) > 1 or factors[0][1] > 1 or factors[0][0].degree() < p.degree
    assert reducibility_oracle(p) == sym
    # products are always reducible
    assert reducibility_oracle(p * UniPoly((tail[0], 1)))
