"""Weak Mordell-Weil quotients E(Q)/phi*(E*(Q)) and the classes they index.

Mordell-Weil generators are inputs.  Points are written in generator
coordinates by bounded exhaustive search, the image of phi* becomes an integer
matrix, and the quotient is read off as an F_l vector space whose lines
(order-l subgroups) label splitting fields.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

import mpmath

from .curves import CurvePoint, Point, WeierstrassCurve, torsion_order
from .errors import (
    BaseReducibleFlag,
    DecompositionNotFound,
    EmptyQuotient,
    PointValidationError,
)
from .exact import UniPoly, poly_gcd

DEFAULT_BOUND = 3


@dataclass(eq=False)
class MWBasis:
    """Generators of E(Q): free part (declared, not proven) and torsion with orders."""

    curve: WeierstrassCurve
    free: list = field(default_factory=list)
    torsion: list = field(default_factory=list)  # [(point, order)]
    _tables: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for P in self.free:
            if P is None or not self.curve.on_curve(P):
                raise PointValidationError(f"free generator {P} is not an affine point of {self.curve}")
        for T, n in self.torsion:
            if not self.curve.on_curve(T):
                raise PointValidationError(f"torsion generator {T} is not on {self.curve}")
            if torsion_order(self.curve, T, n) != n:
                raise PointValidationError(f"{T} does not have order {n}")

    @property
    def rank(self) -> int:
        return len(self.free)

    @property
    def generators(self):
        return list(self.free) + [T for T, _ in self.torsion]

    def ranges(self, bound: int):
        return ([range(-bound, bound + 1)] * self.rank
                + [range(n) for _, n in self.torsion])

    def point(self, coeffs) -> CurvePoint:
        return self.curve.combination(coeffs, self.generators)

    def _half_table(self, idx, bound):
        """All sums over generators ``idx`` keyed by point -> list of coefficient tuples."""
        key = (tuple(idx), bound)
        if key in self._tables:
            return self._tables[key]
        C = self.curve
        gens = self.generators
        rngs = self.ranges(bound)
        multiples = []
        for i in idx:
            multiples.append({n: C._mul(n, gens[i]) for n in rngs[i]})
        table = {}
        for combo in itertools.product(*(rngs[i] for i in idx)):
            acc = None
            for m, n in zip(multiples, combo):
                acc = C._add(acc, m[n])
            table.setdefault(acc, []).append(combo)
        self._tables[key] = table
        return table


def _weight(v):
    return sum(abs(c) for c in v)


def decompose(P: CurvePoint, basis: MWBasis, bound: int = DEFAULT_BOUND) -> tuple:
    """Coefficients c with sum c_i G_i = P (free part first, then torsion).

    Bounded search over |c_i| <= bound on the free part, meet-in-the-middle over
    two halves of the generator list.  Among several hits the one minimising
    (sum |c_i|, c) is returned.
    """
    C = basis.curve
    C._check(P)
    n = len(basis.generators)
    if n == 0:
        if P is None:
            return ()
        raise DecompositionNotFound(f"{P} is not the identity and the basis is empty")
    half = n // 2
    left, right = list(range(half)), list(range(half, n))
    tl = basis._half_table(left, bound) if left else {None: [()]}
    tr = basis._half_table(right, bound)
    hits = []
    for pt, combos in tl.items():
        target = C._add(P, C._neg(pt))
        for rc in tr.get(target, ()):
            for lc in combos:
                hits.append(lc + rc)
    if not hits:
        raise DecompositionNotFound(
            f"no decomposition of {P} with coefficients bounded by {bound}; try a larger bound")
    return min(hits, key=lambda v: (_weight(v), v))


# --------------------------------------------------------------------------
# Integer and F_l linear algebra
# --------------------------------------------------------------------------


def hermite_normal_form(rows):
    """Row-style HNF: upper triangular, positive pivots, entries above pivots reduced."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    pr = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(pr, len(A)) if A[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            others = [i for i in nz if i != piv]
            if not others:
                break
            for i in others:
                qt = A[i][col] // A[piv][col]
                A[i] = [x - qt * y for x, y in zip(A[i], A[piv])]
        nz = [i for i in range(pr, len(A)) if A[i][col] != 0]
        if not nz:
            continue
        A[pr], A[nz[0]] = A[nz[0]], A[pr]
        if A[pr][col] < 0:
            A[pr] = [-x for x in A[pr]]
        p = A[pr][col]
        for i in range(pr):
            qt = A[i][col] // p
            if qt:
                A[i] = [x - qt * y for x, y in zip(A[i], A[pr])]
        pr += 1
        if pr == len(A):
            break
    return [r for r in A if any(r)]


def rref_mod(rows, ell):
    """Reduced row echelon form over F_ell; returns (rows, pivot columns)."""
    A = [[x % ell for x in r] for r in rows]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    pr = 0
    for col in range(ncols):
        piv = next((i for i in range(pr, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[pr], A[piv] = A[piv], A[pr]
        inv = pow(A[pr][col], -1, ell)
        A[pr] = [(x * inv) % ell for x in A[pr]]
        for i in range(len(A)):
            if i != pr and A[i][col]:
                f = A[i][col]
                A[i] = [(x - f * y) % ell for x, y in zip(A[i], A[pr])]
        pivots.append(col)
        pr += 1
        if pr == len(A):
            break
    return A[:pr], pivots


def normalize_line(v, ell):
    """Scale a nonzero F_ell vector so its first nonzero entry is 1."""
    lead = next(x for x in v if x % ell)
    inv = pow(lead, -1, ell)
    return tuple((x * inv) % ell for x in v)


def projective_points(k, ell):
    """All normalised nonzero vectors of F_ell^k, i.e. the lines through 0."""
    out = []
    for lead in range(k):
        for tail in itertools.product(range(ell), repeat=k - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


# --------------------------------------------------------------------------
# Image of phi* and the quotient
# --------------------------------------------------------------------------


@dataclass
class ImagePresentation:
    ell: int
    rows: list              # decompositions of phi*(Q_j), one per E*-generator
    hnf: list               # HNF of the image lattice (torsion relations included)
    index: int | None
    quotient_rank: int
    coords: list            # generator positions that survive mod ell
    rref: list
    pivots: list
    torsion_orders: list

    @property
    def elementary(self) -> bool:
        return self.index == self.ell ** self.quotient_rank

    def quotient_vector(self, coeffs) -> tuple:
        """Image of a coefficient vector in F_ell^k (coordinates = non-pivot columns)."""
        v = [coeffs[i] % self.ell for i in self.coords]
        for row, pc in zip(self.rref, self.pivots):
            f = v[pc]
            if f:
                v = [(x - f * y) % self.ell for x, y in zip(v, row)]
        free_cols = [j for j in range(len(self.coords)) if j not in self.pivots]
        return tuple(v[j] for j in free_cols)

    def contains(self, coeffs) -> bool:
        return not any(self.quotient_vector(coeffs))


def image_presentation(fam, E_basis: MWBasis, Estar_basis: MWBasis, ell: int | None = None,
                       bound: int = DEFAULT_BOUND) -> ImagePresentation:
    """Write phi*(Q_j) in the E-basis and reduce the image modulo ell."""
    ell = fam.ell if ell is None else ell
    rows = [decompose(fam.phi_star(Qj), E_basis, bound) for Qj in Estar_basis.generators]
    r = E_basis.rank
    orders = [n for _, n in E_basis.torsion]
    relations = []
    for i, n in enumerate(orders):
        rel = [0] * (r + len(orders))
        rel[r + i] = n
        relations.append(rel)
    hnf = hermite_normal_form([list(v) for v in rows] + relations)
    dim = r + len(orders)
    index = None
    if len(hnf) == dim:
        index = 1
        for i, row in enumerate(hnf):
            index *= row[i]
    coords = list(range(r)) + [r + i for i, n in enumerate(orders) if n % ell == 0]
    reduced = [[v[i] for i in coords] for v in rows]
    rref, pivots = rref_mod(reduced, ell)
    k = len(coords) - len(pivots)
    return ImagePresentation(ell, [tuple(v) for v in rows], hnf, index, k, coords, rref, pivots,
                             orders)


def membership(P: CurvePoint, pres: ImagePresentation, E_basis: MWBasis,
               bound: int = DEFAULT_BOUND) -> bool:
    """True iff P lies in phi*(E*(Q))."""
    if P is None:
        return True
    return pres.contains(decompose(P, E_basis, bound))


# --------------------------------------------------------------------------
# Classes
# --------------------------------------------------------------------------


@dataclass
class ClassEntry:
    subgroup: tuple          # normalised generator of the line in F_ell^k
    coefficients: tuple      # representative in generator coordinates
    representative: Point
    beta: Fraction | None
    polynomial: UniPoly | None


@dataclass
class Classification:
    ell: int
    quotient_rank: int
    image_hnf: list
    image_rows: list
    classes: list
    base_class: int | None = None
    base_coefficients: tuple | None = None

    def index_of(self, subgroup) -> int:
        for i, c in enumerate(self.classes):
            if c.subgroup == subgroup:
                return i
        raise KeyError(subgroup)


def _vectors_of_weight(w, ranges):
    """Coefficient vectors with sum |c_i| == w inside the given ranges."""
    if not ranges:
        if w == 0:
            yield ()
        return
    head, rest = ranges[0], ranges[1:]
    for c in sorted(head, key=lambda c: (abs(c), -c)):
        if abs(c) > w:
            continue
        for tail in _vectors_of_weight(w - abs(c), rest):
            yield (c,) + tail


def _rep_key(v):
    # positive coefficients and earlier generators first
    return (_weight(v), tuple(-c for c in v))


def class_of(coeffs, pres: ImagePresentation) -> tuple | None:
    q = pres.quotient_vector(coeffs)
    if not any(q):
        return None
    return normalize_line(q, pres.ell)


def enumerate_classes(pres: ImagePresentation, E_basis: MWBasis, fam=None) -> Classification:
    """One representative per order-ell subgroup of the quotient.

    Representatives minimise sum |c_i|, ties broken towards positive
    coefficients on earlier generators.
    """
    k = pres.quotient_rank
    if k == 0:
        raise EmptyQuotient("phi*(E*(Q)) is all of E(Q); every polynomial in the family is reducible")
    ell = pres.ell
    lines = projective_points(k, ell)
    found = {}
    ranges = E_basis.ranges(ell)
    max_weight = sum(max(abs(c) for c in r) for r in ranges)
    for w in range(1, max_weight + 1):
        for v in sorted(_vectors_of_weight(w, ranges), key=_rep_key):
            line = class_of(v, pres)
            if line is not None and line not in found:
                found[line] = v
        if len(found) == len(lines):
            break
    classes = []
    for line, v in sorted(found.items(), key=lambda kv: _rep_key(kv[1])):
        P = E_basis.point(v)
        beta = poly = None
        if fam is not None:
            beta = fam.beta(P)
            poly = fam.polynomial(P)
        classes.append(ClassEntry(line, v, P, beta, poly))
    return Classification(ell, k, pres.hnf, list(pres.rows), classes)


def base_class(fam, pres: ImagePresentation, E_basis: MWBasis, classification: Classification,
               bound: int = DEFAULT_BOUND, point: CurvePoint = None) -> int:
    """Index of the class containing the family's base point (or ``point``)."""
    P = fam.base_point() if point is None else point
    coeffs = decompose(P, E_basis, bound)
    line = class_of(coeffs, pres)
    if line is None:
        raise BaseReducibleFlag(f"base point {P} lies in phi*(E*(Q))")
    classification.base_coefficients = coeffs
    classification.base_class = classification.index_of(line)
    return classification.base_class


def classify(fam, E_basis: MWBasis, Estar_basis: MWBasis, bound: int = DEFAULT_BOUND,
             base_point: CurvePoint = None, use_base: bool = True) -> Classification:
    """Image presentation, classes, and (when available) the class of the base point."""
    pres = image_presentation(fam, E_basis, Estar_basis, bound=bound)
    result = enumerate_classes(pres, E_basis, fam)
    if use_base and (base_point is not None or hasattr(fam, "base_point")):
        try:
            base_class(fam, pres, E_basis, result, bound, base_point)
        except BaseReducibleFlag:
            result.base_class = None
    return result


# --------------------------------------------------------------------------
# Reducibility over Q, checked independently of the curve machinery
# --------------------------------------------------------------------------


def _integral_monic(p: UniPoly):
    """Monic integer polynomial with the same factorisation pattern as p."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    n = len(ints) - 1
    lead = ints[-1]
    return [ints[i] * lead ** (n - 1 - i) if i < n else 1 for i in range(n)] + [1]


def _divides(q_int, factor):
    """Exact test that the monic integer ``factor`` divides ``q_int`` (constant-first lists)."""
    rem = list(q_int)
    df = len(factor) - 1
    for k in range(len(rem) - 1, df - 1, -1):
        c = rem[k]
        if c:
            for j, b in enumerate(factor):
                rem[k - df + j] -= c * b
    return not any(rem[:df])


def reducibility_oracle(p: UniPoly, dps: int = 60) -> bool:
    """True iff p factors nontrivially over Q.

    Repeated factors are detected exactly via gcd(p, p').  Otherwise factors
    of a monic integral model are monic integral, so each candidate
    factor of degree <= n/2 is reconstructed by rounding elementary symmetric
    functions of numerically computed roots and then confirmed by exact
    division.  Precision is raised when the root finder does not converge.
    """
    n = p.degree
    if n <= 1:
        return False
    if p[0] == 0:
        return True
    if poly_gcd(p, p.derivative()).degree > 0:
        # a repeated factor is a proper factor; also keeps polyroots away from clusters
        return True
    q = _integral_monic(p)
    bound = 1 + max(abs(c) for c in q[:-1])
    digits = len(str(bound)) * (n // 2) + len(str(comb(n, n // 2)))
    work = max(dps, 2 * digits + 30)
    while True:
        with mpmath.workdps(work):
            try:
                roots = mpmath.polyroots(list(reversed(q)), maxsteps=400, extraprec=4 * work)
            except mpmath.libmp.NoConvergence:
                work *= 2
                if work > 20000:
                    raise
                continue
            tol = mpmath.mpf(10) ** (-(work // 3))
            for m in range(1, n // 2 + 1):
                for subset in itertools.combinations(roots, m):
                    poly = [mpmath.mpc(1)]  # constant-first
                    for r in subset:
                        poly = [(poly[i - 1] if i > 0 else 0) - r * (poly[i] if i < len(poly) else 0)
                                for i in range(len(poly) + 1)]
                    cand = []
                    ok = True
                    for c in poly:
                        re_part = mpmath.nint(c.real)
                        if abs(c.imag) > tol or abs(c.real - re_part) > tol * max(1, abs(c.real)):
                            ok = False
                            break
                        cand.append(int(re_part))
                    if ok and _divides(q, cand):
                        return True
            return False
