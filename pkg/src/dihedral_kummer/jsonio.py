"""JSON encodings.

Rationals are strings ``"p/q"`` (``"p"`` when q = 1), polynomials are
constant-first coefficient lists, points are ``{"x": .., "y": ..}`` or
``"inf"``.  Decoders accept JSON integers wherever a rational is expected.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .classify import Classification, ImagePresentation, MWBasis
from .curves import Point, WeierstrassCurve
from .errors import ShapeError
from .exact import Q, QuadExt, RatFunc, UniPoly
from .isogeny import IsogenyMap


def rat(x) -> str:
    if isinstance(x, QuadExt):
        return quad_to_json(x)
    return str(Q(x))


def parse_rat(s) -> Fraction:
    try:
        return Q(s)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ShapeError(f"not an exact rational: {s!r}") from exc


def quad_to_json(z: QuadExt) -> dict:
    return {"d": str(z.d), "u": str(z.u), "v": str(z.v)}


def quad_from_json(obj) -> QuadExt:
    return QuadExt(parse_rat(obj["d"]), parse_rat(obj["u"]), parse_rat(obj["v"]))


def poly_to_json(p: UniPoly) -> list:
    return [str(c) for c in p.coeffs]


def poly_from_json(obj) -> UniPoly:
    if not isinstance(obj, list):
        raise ShapeError("polynomial must be a coefficient list, constant term first")
    return UniPoly(parse_rat(c) for c in obj)


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def curve_to_json(C: WeierstrassCurve) -> dict:
    return {k: rat(v) for k, v in zip(("a1", "a2", "a3", "a4", "a6"), C.ainvs)}


def curve_from_json(obj) -> WeierstrassCurve:
    try:
        return WeierstrassCurve(*(parse_rat(obj.get(k, 0)) for k in ("a1", "a2", "a3", "a4", "a6")))
    except AttributeError as exc:
        raise ShapeError("curve must be an object with keys a1..a6") from exc


def point_to_json(P):
    if P is None:
        return "inf"
    return {"x": rat(P.x), "y": rat(P.y)}


def point_from_json(obj):
    if obj == "inf":
        return None
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return Point(parse_rat(obj[0]), parse_rat(obj[1]))
    if isinstance(obj, dict) and {"x", "y"} <= obj.keys():
        return Point(parse_rat(obj["x"]), parse_rat(obj["y"]))
    raise ShapeError(f"not a point: {obj!r}")


def parse_point_text(text: str):
    """Command-line form ``"x,y"`` (or ``"inf"``)."""
    if text.strip() == "inf":
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise ShapeError(f"point must look like 'x,y', got {text!r}")
    return Point(parse_rat(parts[0]), parse_rat(parts[1]))


def isogeny_to_json(iso: IsogenyMap) -> dict:
    return {
        "domain": curve_to_json(iso.domain),
        "codomain": curve_to_json(iso.codomain),
        "degree": iso.degree,
        "x_map": ratfunc_to_json(iso.x_map),
        "y_map": {"u": poly_to_json(iso.y_u), "v": poly_to_json(iso.y_v), "w": poly_to_json(iso.y_w)},
    }


def mwbasis_to_json(B: MWBasis) -> dict:
    return {
        "curve": curve_to_json(B.curve),
        "free": [point_to_json(P) for P in B.free],
        "torsion": [{"point": point_to_json(T), "order": n} for T, n in B.torsion],
    }


def mwbasis_from_json(obj) -> MWBasis:
    if not isinstance(obj, dict) or "curve" not in obj:
        raise ShapeError("MW basis must be an object with a 'curve' key")
    C = curve_from_json(obj["curve"])
    free = [point_from_json(p) for p in obj.get("free", [])]
    torsion = [(point_from_json(t["point"]), int(t["order"])) for t in obj.get("torsion", [])]
    return MWBasis(C, free, torsion)


def presentation_to_json(pres: ImagePresentation) -> dict:
    return {
        "ell": pres.ell,
        "rows": [list(r) for r in pres.rows],
        "image_hnf": pres.hnf,
        "index": pres.index,
        "quotient_rank": pres.quotient_rank,
    }


def classification_to_json(c: Classification) -> dict:
    return {
        "ell": c.ell,
        "quotient_rank": c.quotient_rank,
        "image_rows": [list(r) for r in c.image_rows],
        "image_hnf": c.image_hnf,
        "classes": [
            {
                "subgroup": list(e.subgroup),
                "coefficients": list(e.coefficients),
                "representative": point_to_json(e.representative),
                "beta": None if e.beta is None else rat(e.beta),
                "polynomial": None if e.polynomial is None else poly_to_json(e.polynomial),
            }
            for e in c.classes
        ],
        "base_class": c.base_class,
        "base_coefficients": None if c.base_coefficients is None else list(c.base_coefficients),
    }


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
