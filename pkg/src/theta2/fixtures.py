"""Curated fixtures: a symmetric 3x3 pencil over F_2, two curves over F_2(T)
with trivial Mordell-Weil group, and a few Hesse instances."""

from .cubics import HesseCubic, WeierstrassCurve, point_search
from .fields import field_new
from .forms import LinearPencil, det, is_smooth
from .funcfield import ratfunc_field
from .hassewitt import count_points, is_ordinary
from .parser import parse_form

__all__ = [
    "F2_CUBIC_MATRIX",
    "F2_CUBIC_EXPECTED",
    "f2_cubic_pencil",
    "f2_cubic_report",
    "trivial_mw_curves",
    "trivial_mw_report",
    "hesse_instances",
    "MW_CAPTION",
]

# rows of the pencil, as text over F_2
F2_CUBIC_MATRIX = (("Y", "0", "X"), ("0", "Z", "Y"), ("X", "Y", "X+Y+Z"))
F2_CUBIC_EXPECTED = "X^2*Z + X*Y*Z + Y^3 + Y^2*Z + Y*Z^2"

MW_CAPTION = "Mordell-Weil group taken as trivial from the literature; not recomputed"


def f2_cubic_pencil():
    K = field_new(1)
    rows = [[parse_form(x, K, degree=1) for x in row] for row in F2_CUBIC_MATRIX]
    return LinearPencil(rows)


def f2_cubic_report():
    K = field_new(1)
    M = f2_cubic_pencil()
    D = det(M)
    expected = parse_form(F2_CUBIC_EXPECTED, K)
    return {
        "matrix": M.to_lists(),
        "symmetric": M.symmetric,
        "determinant": str(D),
        "expected": str(expected),
        "matches_expected": D == expected,
        "smooth": is_smooth(D),
        "ordinary": is_ordinary(D),
        "points_over_f2": count_points(D),
    }


def trivial_mw_curves():
    """E1: Y^2 Z + T^3 Y Z^2 = X^3 + T^5 Z^3 and E2: Y^2 Z + T XYZ = X^3 + T^5 Z^3."""
    K = ratfunc_field(1)
    T = K.T
    E1 = WeierstrassCurve(K, 0, 0, T ** 3, 0, T ** 5)
    E2 = WeierstrassCurve(K, T, 0, 0, 0, T ** 5)
    return {"E1": E1, "E2": E2}


def trivial_mw_report(height=1):
    out = {}
    for name, E in trivial_mw_curves().items():
        pts = point_search(E, height)
        out[name] = {
            "curve": str(E.form()),
            "j_invariant": str(E.j_invariant()),
            "ordinary": E.is_ordinary(),
            "search_height": height,
            "points_found": [str(P) for P in pts],
            "only_identity": all(P.is_identity for P in pts),
        }
    out["caption"] = MW_CAPTION
    return out


def hesse_instances():
    """(label, HesseCubic) pairs covering the three verdicts."""
    R = ratfunc_field(1)
    T = R.T
    G8 = field_new(3)
    return [
        ("inseparable-only over F_2(T)", HesseCubic(R, 1, 1, 1, T)),
        ("square over F_2(T)", HesseCubic(R, 1, 1, 1, T * T)),
        ("GF(8) with m = g", HesseCubic(G8, 1, 1, 1, G8.gen)),
        ("non-ordinary over GF(4)", HesseCubic(field_new(2), 1, 1, 1, 0)),
    ]
