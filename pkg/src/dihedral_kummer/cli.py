"""Command-line front end.  Every command prints one JSON document on stdout.

Exit codes: 0 success, 2 invalid input, 3 decomposition not found within the
search bound, 4 fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import DEFAULT_BOUND, MWBasis, classify
from .cubic import (
    cubic_family,
    cubic_from_point,
    depressed,
    fixed_disc_curve,
    point_from_monic,
    reduce_to_family,
)
from .errors import DecompositionNotFound, KummerError
from .exact import UniPoly, parse_poly
from .fixtures import NAMES, bases, load, report, verify_all
from .jsonio import (
    classification_to_json,
    curve_to_json,
    dumps,
    isogeny_to_json,
    mwbasis_from_json,
    parse_point_text,
    parse_rat,
    point_to_json,
    poly_to_json,
    rat,
    ratfunc_to_json,
)
from .quintic import (
    brumer_from_point,
    doubling_orbit,
    family,
    hoshi_rikuna,
    kummer_poly,
    lecacheux_transform,
    point_to_beta,
    quintic_d,
    quintic_j,
    same_square_class,
)
from .septic import septic_family, septic_kernel_xcoords, septic_poly

EXIT_OK, EXIT_INPUT, EXIT_DECOMP, EXIT_MISMATCH = 0, 2, 3, 4


class InputError(Exception):
    pass


def _bound(args) -> int:
    if args.bound is not None:
        return args.bound
    env = os.environ.get("KD_DECOMP_BOUND")
    if env is None:
        return DEFAULT_BOUND
    try:
        b = int(env)
    except ValueError as exc:
        raise InputError(f"KD_DECOMP_BOUND must be an integer, got {env!r}") from exc
    if b < 0:
        raise InputError("KD_DECOMP_BOUND must be non-negative")
    return b


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise InputError(f"--{n.replace('_', '-')} is required for this command")


def _read_basis(path) -> MWBasis:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return mwbasis_from_json(obj)


def _fixture_for(kind: str, **params):
    """Shipped fixture whose family parameters equal ``params``, if any."""
    for name in NAMES:
        fx = load(name)
        kind_info = fx["family"]
        if kind_info["kind"] != kind:
            continue
        if all(parse_rat(kind_info[k]) == v for k, v in params.items()):
            return fx
    return None


def _bases_for(args, kind, **params):
    if args.mw is not None or args.mw_star is not None:
        _need(args, "mw", "mw_star")
        return _read_basis(args.mw), _read_basis(args.mw_star), None
    fx = _fixture_for(kind, **params)
    if fx is None:
        raise InputError("no shipped Mordell-Weil data for these parameters; pass --mw and --mw-star")
    E, Es = bases(fx)
    return E, Es, fx["name"]


def _point(args):
    _need(args, "point")
    return parse_point_text(args.point)


# --------------------------------------------------------------------------
# quintic
# --------------------------------------------------------------------------


def cmd_quintic_family(args):
    _need(args, "a", "b")
    fam = family(args.a, args.b)
    return {
        "a": rat(fam.a), "b": rat(fam.b), "d": rat(fam.d),
        "is_degenerate": fam.is_degenerate,
        "E": curve_to_json(fam.E),
        "Estar": curve_to_json(fam.Estar),
        "Ea": curve_to_json(fam.Ea),
        "Eastar": curve_to_json(fam.Eastar),
        "j_Estar": rat(quintic_j(fam.a)),
        "P0": point_to_json(fam.P0),
        "lambda_star": ratfunc_to_json(fam.lambda_star.x_map),
        "polynomial": poly_to_json(fam.polynomial_of_beta(fam.b)),
    }


def cmd_quintic_beta(args):
    _need(args, "a", "b")
    fam = family(args.a, args.b)
    P = _point(args)
    return {"beta": rat(point_to_beta(fam, P)), "polynomial": poly_to_json(brumer_from_point(fam, P))}


def cmd_quintic_classify(args):
    _need(args, "a", "b")
    fam = family(args.a, args.b)
    E, Es, source = _bases_for(args, "quintic", a=fam.a, b=fam.b)
    out = classification_to_json(classify(fam, E, Es, _bound(args)))
    out["family"] = {"kind": "quintic", "a": rat(fam.a), "b": rat(fam.b), "d": rat(fam.d)}
    out["mw_source"] = source or "user"
    return out


def cmd_quintic_transform(args):
    _need(args, "a", "b")
    fam = family(args.a, args.b)
    P = None if args.point is None else parse_point_text(args.point)
    orbit = doubling_orbit(fam, P, args.iterate)
    out = {
        "start": point_to_json(fam.P0 if P is None else P),
        "points": [point_to_json(Q) for Q, _ in orbit],
        "betas": [rat(b) for _, b in orbit],
        "square_class_ok": [same_square_class(quintic_d(fam.a, b), fam.d) for _, b in orbit],
    }
    try:
        hr = hoshi_rikuna(fam.a, fam.b)
        dh = quintic_d(fam.a, hr)
        out["closed_form"] = {"value": rat(hr), "square_class_ok": bool(dh) and same_square_class(dh, fam.d)}
    except KummerError as exc:
        out["closed_form"] = {"value": None, "error": str(exc)}
    return out


def cmd_quintic_kummer_poly(args):
    _need(args, "a", "b")
    fam = family(args.a, args.b)
    P = fam.P0 if args.point is None else parse_point_text(args.point)
    B = kummer_poly(fam, P)
    b = brumer_from_point(fam, P)
    return {
        "point": point_to_json(P),
        "B": poly_to_json(B),
        "brumer": poly_to_json(b),
        "lecacheux_identity": lecacheux_transform(B, fam.a) == b,
    }


# --------------------------------------------------------------------------
# cubic
# --------------------------------------------------------------------------


def cmd_cubic_family(args):
    _need(args, "a", "b")
    fam = cubic_family(args.a, args.b)
    return {
        "a": rat(fam.a), "b": rat(fam.b), "d": rat(fam.d),
        "is_degenerate": fam.is_degenerate,
        "E": curve_to_json(fam.E),
        "Estar": curve_to_json(fam.Estar),
        "Ea": curve_to_json(fam.Ea),
        "Eastar": curve_to_json(fam.Eastar),
        "P0": point_to_json(fam.P0),
        "phi": isogeny_to_json(fam.phi),
        "phi_star": isogeny_to_json(fam.phi_star_map),
        "lambda_star": ratfunc_to_json(fam.lambda_star.x_map),
    }


def cmd_cubic_classify(args):
    if args.D is not None:
        fam = fixed_disc_curve(args.D)
        E, Es, source = _bases_for(args, "fixed_disc", D=fam.D)
        out = classification_to_json(classify(fam, E, Es, _bound(args), use_base=False))
        out["family"] = {"kind": "fixed_disc", "D": rat(fam.D)}
    else:
        _need(args, "a", "b")
        fam = cubic_family(args.a, args.b)
        E, Es, source = _bases_for(args, "cubic", a=fam.a, b=fam.b)
        out = classification_to_json(classify(fam, E, Es, _bound(args)))
        out["family"] = {"kind": "cubic", "a": rat(fam.a), "b": rat(fam.b), "d": rat(fam.d)}
    out["mw_source"] = source or "user"
    return out


def _monic_from_args(args) -> UniPoly:
    g = parse_poly(args.poly)
    if g.degree != 3 or g.lc() != 1:
        raise InputError(f"expected a monic cubic, got {g}")
    return g


def cmd_cubic_fixed_disc(args):
    if args.poly is not None:
        g = _monic_from_args(args)
        D, P = point_from_monic(g)
        fd = fixed_disc_curve(D)
        return {
            "D": rat(D), "E_D": curve_to_json(fd.E_D), "point": point_to_json(P),
            "F": poly_to_json(cubic_from_point(fd, P)), "depressed": poly_to_json(depressed(g)),
        }
    _need(args, "D")
    fd = fixed_disc_curve(args.D)
    out = {"D": rat(fd.D), "E_D": curve_to_json(fd.E_D), "Estar": curve_to_json(fd.Estar)}
    if args.point is not None:
        P = parse_point_text(args.point)
        out["point"] = point_to_json(P)
        out["F"] = poly_to_json(cubic_from_point(fd, P))
    return out


def cmd_cubic_reduce(args):
    if args.poly is not None:
        D, P = point_from_monic(_monic_from_args(args))
        fd = fixed_disc_curve(D)
    else:
        _need(args, "D")
        fd = fixed_disc_curve(args.D)
        P = _point(args)
    params, s = reduce_to_family(fd, P)
    return {
        "D": rat(fd.D), "point": point_to_json(P),
        "a": rat(params.a), "b": rat(params.b), "d": rat(params.d), "scale": rat(s),
        "E_ab": curve_to_json(cubic_family(params.a, params.b).E),
    }


# --------------------------------------------------------------------------
# septic and fixtures
# --------------------------------------------------------------------------


def cmd_septic_poly(args):
    _need(args, "a", "b")
    p = septic_poly(args.a, args.b)
    return {"a": rat(args.a), "b": rat(args.b), "polynomial": poly_to_json(p)}


def cmd_septic_verify(args):
    _need(args, "a")
    sf = septic_family(args.a)
    return {
        "a": rat(sf.a),
        "C": curve_to_json(sf.C),
        "codomain": curve_to_json(sf.psi.codomain),
        "x_map": ratfunc_to_json(sf.psi.x_map),
        "kernel_x": sorted(rat(x) for x in septic_kernel_xcoords(sf.a)),
        "matches_printed": sf.matches_printed(),
    }


def cmd_verify_fixtures(args):
    rep = report(verify_all(_bound(args)))
    return rep, (EXIT_OK if rep["ok"] else EXIT_MISMATCH)


COMMANDS = {
    ("quintic", "family"): cmd_quintic_family,
    ("quintic", "beta"): cmd_quintic_beta,
    ("quintic", "classify"): cmd_quintic_classify,
    ("quintic", "transform"): cmd_quintic_transform,
    ("quintic", "kummer-poly"): cmd_quintic_kummer_poly,
    ("cubic", "family"): cmd_cubic_family,
    ("cubic", "classify"): cmd_cubic_classify,
    ("cubic", "fixed-disc"): cmd_cubic_fixed_disc,
    ("cubic", "reduce"): cmd_cubic_reduce,
    ("septic", "poly"): cmd_septic_poly,
    ("septic", "verify"): cmd_septic_verify,
    ("verify", "fixtures"): cmd_verify_fixtures,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would print usage; keep diagnostics to one line
        raise InputError(message)


def _rational_arg(text):
    try:
        return parse_rat(text)
    except KummerError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-kummer", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    for group in ("quintic", "cubic", "septic", "verify"):
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="command", required=True, parser_class=_Parser)
        for g, name in COMMANDS:
            if g != group:
                continue
            p = sub.add_parser(name)
            p.add_argument("--a", type=_rational_arg)
            p.add_argument("--b", type=_rational_arg)
            p.add_argument("--D", type=_rational_arg)
            p.add_argument("--point", help='rational point "x,y"')
            p.add_argument("--poly", help='monic cubic such as "X^3+X+1"')
            p.add_argument("--mw", help="Mordell-Weil basis JSON for E")
            p.add_argument("--mw-star", dest="mw_star", help="Mordell-Weil basis JSON for E*")
            p.add_argument("--bound", type=int)
            p.add_argument("--iterate", type=int, default=1)
            p.add_argument("--compact", action="store_true")
    return parser


_VALUE_FLAGS = ("--a", "--b", "--D", "--point", "--poly", "--mw", "--mw-star", "--bound", "--iterate")


def _glue(argv):
    # "--point -188,8836" would otherwise read the value as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv=None):
    """Parse ``argv`` and execute.  Returns (document, exit code, diagnostic, compact)."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue(argv))
        if args.bound is not None and args.bound < 0:
            raise InputError("--bound must be non-negative")
        if args.iterate < 1:
            raise InputError("--iterate must be at least 1")
        result = COMMANDS[(args.group, args.command)](args)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        return result, code, None, args.compact
    except DecompositionNotFound as exc:
        return None, EXIT_DECOMP, str(exc), False
    except (InputError, KummerError, ValueError, ZeroDivisionError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return None, EXIT_INPUT, msg, False


def main(argv=None) -> int:
    doc, code, diag, compact = run(argv)
    if doc is not None:
        sys.stdout.write(dumps(doc, compact) + "\n")
    if diag is not None:
        sys.stderr.write("error: " + " ".join(str(diag).split()) + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
