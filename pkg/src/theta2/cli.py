"""theta2 command line.

Every command prints a JSON report (``"schema": 1``); the census can also
emit CSV.  Mathematical verdicts, negative ones included, are data and exit
0.  Usage errors and malformed fields or forms exit 2.
"""

import argparse
import csv
import io
import json
import sys

from . import conics, cubics, fixtures
from .census import sdr_census
from .forms import TernaryForm, det, is_smooth
from .funcfield import RationalFunctionField
from .hassewitt import count_points, genus, hw_matrix, l_polynomial, p_rank, zeta_p_rank
from .parser import ParseError, parse_element, parse_field, parse_form
from .fields import GaloisField

SCHEMA = 1

__all__ = ["run", "main", "build_parser", "SCHEMA"]


class UsageError(Exception):
    pass


def _s(x):
    return None if x is None else str(x)


def _point(P):
    return None if P is None else [str(x) for x in P]


def _report(kind, field, **body):
    out = {"schema": SCHEMA, "kind": kind, "field": str(field)}
    out.update(body)
    return out


def _field(name):
    try:
        return parse_field(name)
    except ParseError as exc:
        raise UsageError(f"malformed field name: {exc}") from None


def _form(text, field, degree=None):
    try:
        return parse_form(text, field, degree)
    except ParseError as exc:
        raise UsageError(f"malformed form: {exc}") from None


def _elem(text, field, name):
    try:
        return parse_element(text, field)
    except (ParseError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed value for --{name}: {exc}") from None


# ---------------------------------------------------------------------------
# conic


def conic_report(F, budget=2, with_sdr=True):
    K = F.field
    body = {"form": str(F), "smooth": None, "criterion_value": None, "strange_point": None,
            "point": None, "t_value": None, "t_is_square": None, "sdr_matrix": None,
            "lambda": None, "det_check": None, "status": None, "method": None}
    coeffs = [F.coeffs.get(e, K.zero) for e in conics._MONOS]
    body["criterion_value"] = str(conics.smoothness_value(*coeffs))
    if not any(coeffs):
        body.update(smooth=False, status="singular")
        return _report("conic", K, **body)
    if any(coeffs[3:]):
        body["strange_point"] = _point(conics.strange_point(*coeffs))
    if not conics.is_smooth(*coeffs):
        body.update(smooth=False, status="singular",
                    method="strange point lies on the conic")
        return _report("conic", K, **body)
    C = conics.Conic.from_form(F)
    body["smooth"] = True
    ins = conics.inseparable_point_any(C)
    if ins.t is not None:
        body["t_value"] = str(ins.t)
        body["t_is_square"] = ins.rational
    found = conics.find_point(C, budget)
    body["method"] = found.method
    if found.status != "found":
        body["status"] = "no point found within budget"
        return _report("conic", K, **body)
    body["status"] = "point found"
    body["point"] = _point(found.point)
    if with_sdr:
        res = conics.conic_sdr(C, found.point)
        body["sdr_matrix"] = res.matrix.to_lists()
        body["lambda"] = str(res.lam)
        body["det_check"] = det(res.matrix) == F.scale(res.lam)
    return _report("conic", K, **body)


def _cmd_conic(args):
    K = _field(args.field)
    F = _form(args.form, K, 2)
    return conic_report(F, args.budget, with_sdr=args.action == "sdr")


# ---------------------------------------------------------------------------
# cubics


def _two_torsion_block(E):
    if not E.is_ordinary():
        return {"rational": False, "point": None, "obstruction": None,
                "over_K": False, "over_separable_closure": False,
                "over_purely_inseparable_quadratic_extension": False,
                "verdict": "supersingular: no nontrivial 2-torsion point",
                "doubles_to_identity": None}
    tt = cubics.two_torsion(E)
    ring = tt.extension or E.field
    Eb = E.base_change(ring) if tt.extension else E
    twice = Eb.double(tt.point)
    return {
        "rational": tt.rational,
        "point": _point(tt.point.coords()),
        "obstruction": str(tt.obstruction),
        "over_K": tt.rational,
        "over_separable_closure": tt.rational,
        "over_purely_inseparable_quadratic_extension": True,
        "extension": None if tt.rational else f"K(sqrt({tt.obstruction}))",
        "verdict": tt.verdict(),
        "doubles_to_identity": twice.is_identity,
    }


def weierstrass_report(E):
    return _report(
        "weierstrass", E.field,
        curve=str(E.form()),
        coefficients={k: str(getattr(E, k)) for k in ("a1", "a2", "a3", "a4", "a6")},
        smooth=True,
        discriminant=str(E.discriminant),
        j_invariant=str(E.j_invariant()),
        ordinary=E.is_ordinary(),
        two_torsion=_two_torsion_block(E),
        provenance="ordinary iff j != 0; the 2-torsion point solves a1 x + a3 = 0",
    )


def hesse_report(H, local_global=False, bound=3):
    K = H.field
    res = cubics.hesse_sdr(H)
    J = cubics.hesse_jacobian(H)
    sdr = {
        "exists": res.exists_over_K,
        "verdict": res.verdict,
        "over_K": res.exists_over_K,
        "over_separable_closure": res.exists_over_separable_closure,
        "over_purely_inseparable_quadratic_extension": res.exists_over_inseparable_extension,
        "square_value": _s(res.square_value),
        "extension": None if res.extension is None else f"K(sqrt({res.square_value}))",
        "matrix": res.matrix.to_lists() if res.matrix is not None else None,
        "lambda": _s(res.lam),
        "det_verified": res.verified,
        "provenance": res.criterion,
    }
    out = _report(
        "hesse", K,
        curve=str(H.form()),
        smooth=True,
        ordinary=res.ordinary,
        jacobian=str(J.form()),
        two_torsion=_two_torsion_block(J),
        sdr=sdr,
        local_global=None,
    )
    if local_global:
        if not isinstance(K, RationalFunctionField):
            raise UsageError("--local-global needs a field of the form ratfunc(...)")
        if not H.m:
            out["local_global"] = {"applicable": False,
                                   "reason": "m = 0: no representation over any field"}
        else:
            rep = cubics.hesse_local_global_report(H, bound)
            out["local_global"] = {
                "applicable": True,
                "max_place_degree": bound,
                "global": rep.global_exists,
                "places": [{"place": str(v), "exists": e} for v, e in rep.local],
                "everywhere_local": rep.everywhere_local,
                "any_single_place": rep.any_single_place,
                "consistent": rep.consistent,
            }
    return out


def _hesse_from_args(args):
    K = _field(args.field)
    vals = [_elem(getattr(args, n), K, n) for n in "abcm"]
    try:
        return cubics.HesseCubic(K, *vals), K, vals
    except ValueError:
        return None, K, vals


def _singular_hesse(K, vals):
    a, b, c, m = vals
    F = TernaryForm(K, 3, {(3, 0, 0): a, (0, 3, 0): b, (0, 0, 3): c, (1, 1, 1): m})
    return _report("hesse", K, curve=str(F),
                   smooth=False, ordinary=None, jacobian=None, two_torsion=None, sdr=None,
                   local_global=None)


def _cmd_cubic(args):
    if args.kind == "hesse":
        H, K, vals = _hesse_from_args(args)
        if H is None:
            return _singular_hesse(K, vals)
        return hesse_report(H, args.local_global, args.max_place_degree)
    K = _field(args.field)
    coeffs = [_elem(getattr(args, n), K, n) for n in ("a1", "a2", "a3", "a4", "a6")]
    try:
        E = cubics.WeierstrassCurve(K, *coeffs)
    except ValueError:
        return _report("weierstrass", K, coefficients=dict(zip(("a1", "a2", "a3", "a4", "a6"),
                                                                map(str, coeffs))),
                       smooth=False, ordinary=None, two_torsion=None)
    return weierstrass_report(E)


def _cmd_localglobal(args):
    H, K, vals = _hesse_from_args(args)
    if H is None:
        return _singular_hesse(K, vals)
    return hesse_report(H, True, args.max_place_degree)


# ---------------------------------------------------------------------------
# ordinariness


def ordinary_report(F, oracle=False):
    K = F.field
    if not is_smooth(F):
        return _report("ordinary", K, form=str(F), smooth=False, genus=genus(F.degree),
                       hw_matrix=None, hw_det_nonzero=None, p_rank=None, ordinary=None)
    A = hw_matrix(F, check_smooth=False)
    g = A.genus
    r = p_rank(A)
    out = _report(
        "ordinary", K, form=str(F), smooth=True, genus=g,
        hw_matrix=[[str(x) for x in row] for row in A.entries],
        hw_det_nonzero=bool(A.det()),
        p_rank=r,
        ordinary=bool(A.det()),
        provenance=("ordinary iff the Hasse-Witt matrix is invertible; "
                    "a symmetric representation over the algebraic closure needs an ordinary Jacobian"),
    )
    if oracle:
        if not isinstance(K, GaloisField):
            raise UsageError("--oracle needs a finite field")
        out["oracle_p_rank"] = zeta_p_rank(F)
        out["l_polynomial"] = l_polynomial(F)
        out["points"] = count_points(F)
    return out


def _cmd_ordinary(args):
    K = _field(args.field)
    return ordinary_report(_form(args.form, K), args.oracle)


# ---------------------------------------------------------------------------
# census


CSV_FIELDS = ("form", "smooth", "ordinary", "points", "classes")


def census_report(result):
    rows = [{"form": str(r.form), "smooth": r.smooth, "ordinary": r.ordinary,
             "points": r.points, "classes": r.class_count} for r in result.rows]
    return _report(
        "census", result.field,
        degree=result.degree,
        coverage=result.coverage,
        pencils=result.pencils,
        smooth_curves=len(rows),
        max_classes=max((r["classes"] for r in rows), default=0),
        rows=rows,
    )


def _census_csv(report):
    buf = io.StringIO()
    buf.write(f"# {report['coverage']}; degree {report['degree']} over {report['field']}\n")
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for row in report["rows"]:
        w.writerow(row)
    return buf.getvalue()


def _cmd_census(args):
    K = _field(args.field)
    try:
        res = sdr_census(args.degree, K, sample=args.sample, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return census_report(res)


# ---------------------------------------------------------------------------
# fixtures

FIXTURE_ALIASES = {"ex4.7": "f2-cubic", "sec6": "trivial-mw"}


def _cmd_fixtures(args):
    name = FIXTURE_ALIASES.get(args.name, args.name)
    if name == "f2-cubic":
        return _report("fixture", "gf2", name=name, **fixtures.f2_cubic_report())
    if name == "trivial-mw":
        return _report("fixture", "ratfunc(gf2)", name=name,
                       **fixtures.trivial_mw_report(args.budget))
    reports = [dict(label=label, **hesse_report(H)) for label, H in fixtures.hesse_instances()]
    return {"schema": SCHEMA, "kind": "fixture", "name": name, "instances": reports}


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="theta2", description="Symmetric determinantal representations "
                                "of plane curves in characteristic two.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("conic", help="analyze a conic or build its 2x2 representation")
    c.add_argument("action", choices=("analyze", "sdr"))
    c.add_argument("form")
    c.add_argument("--field", default="gf2")
    c.add_argument("--budget", type=int, default=2, help="polynomial degree bound of the point search")
    c.set_defaults(func=_cmd_conic)

    def hesse_args(sp):
        for n in "abcm":
            sp.add_argument(f"--{n}", required=True)
        sp.add_argument("--field", default="ratfunc(gf2)")
        sp.add_argument("--max-place-degree", type=int, default=3)

    cu = sub.add_parser("cubic", help="Hesse and Weierstrass cubics")
    csub = cu.add_subparsers(dest="kind", required=True)
    h = csub.add_parser("hesse")
    hesse_args(h)
    h.add_argument("--local-global", action="store_true")
    w = csub.add_parser("weierstrass")
    w.add_argument("--a1", default="1")
    w.add_argument("--a2", required=True)
    w.add_argument("--a3", default="0")
    w.add_argument("--a4", default="0")
    w.add_argument("--a6", required=True)
    w.add_argument("--field", default="ratfunc(gf2)")
    cu.set_defaults(func=_cmd_cubic)

    o = sub.add_parser("ordinary", help="Hasse-Witt p-rank of a smooth plane curve")
    o.add_argument("form")
    o.add_argument("--field", default="gf2")
    o.add_argument("--oracle", action="store_true", help="also count points and compare")
    o.set_defaults(func=_cmd_ordinary)

    ce = sub.add_parser("census", help="classify symmetric pencils over a tiny field")
    ce.add_argument("--degree", type=int, required=True)
    ce.add_argument("--field", default="gf2")
    ce.add_argument("--sample", type=int, default=None)
    ce.add_argument("--seed", type=int, default=0)
    fmt = ce.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    ce.set_defaults(func=_cmd_census, fmt="json")

    lg = sub.add_parser("localglobal", help="local-global report for a Hesse cubic over F_q(T)")
    lsub = lg.add_subparsers(dest="kind", required=True)
    hesse_args(lsub.add_parser("hesse"))
    lg.set_defaults(func=_cmd_localglobal)

    fx = sub.add_parser("fixtures", help="curated examples")
    fx.add_argument("name", choices=("f2-cubic", "trivial-mw", "hesse", *FIXTURE_ALIASES))
    fx.add_argument("--budget", type=int, default=1, help="height of the point search")
    fx.set_defaults(func=_cmd_fixtures)
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"theta2: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "fmt", "json") == "csv":
        out.write(_census_csv(report))
    else:
        out.write(json.dumps(report, indent=2) + "\n")
    return 0


def main():
    sys.exit(run())
