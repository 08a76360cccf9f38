"""Smooth plane conics in characteristic two.

Smoothness via the strange point, rational point search, the purely
inseparable point [sqrt(t) : f : d], and the explicit 2 x 2 symmetric
determinantal representation through a rational point.
"""

from dataclasses import dataclass
from itertools import permutations, product

from . import linalg
from .fields import GaloisField, InseparableExtension
from .forms import LinearPencil, TernaryForm, linear_form, partials, projective_points, substitute
from .funcfield import (
    LaurentSeries,
    Poly,
    RationalFunctionField,
    expand_at,
    hensel_lift,
    HenselError,
    default_precision,
    gcd,
)

__all__ = [
    "Conic",
    "is_smooth",
    "smoothness_value",
    "strange_point",
    "find_point",
    "find_local_point",
    "PointSearch",
    "LocalPoint",
    "arrange_for_inseparable",
    "inseparable_point",
    "inseparable_point_any",
    "InseparablePoint",
    "conic_sdr",
    "ConicSDR",
]

_MONOS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1))


def smoothness_value(a, b, c, d, e, f):
    """a e^2 + b f^2 + c d^2 + d e f: the form evaluated at the strange point [e:f:d]."""
    return a * e * e + b * f * f + c * d * d + d * e * f


def is_smooth(a, b, c, d, e, f):
    if not any((a, b, c, d, e, f)):
        raise ValueError("all conic coefficients are zero")
    return bool(smoothness_value(a, b, c, d, e, f))


def strange_point(a, b, c, d, e, f):
    """Common zero [e : f : d] of the three partial derivatives."""
    return (e, f, d)


@dataclass(frozen=True)
class Conic:
    """a X^2 + b Y^2 + c Z^2 + d XY + e YZ + f XZ."""

    field: object
    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    def __post_init__(self):
        for name in "abcdef":
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, self.field(v))
        if not is_smooth(*self.coefficients()):
            raise ValueError(f"conic {self.form()} is singular")

    @classmethod
    def from_form(cls, F):
        if F.degree != 2:
            raise ValueError("not a conic")
        return cls(F.field, *(F.coefficient(m) for m in _MONOS))

    @classmethod
    def from_coefficients(cls, field, *coeffs):
        return cls(field, *coeffs)

    def coefficients(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def form(self):
        return TernaryForm(self.field, 2, dict(zip(_MONOS, self.coefficients())))

    def __call__(self, x, y, z):
        a, b, c, d, e, f = self.coefficients()
        return a * x * x + b * y * y + c * z * z + d * x * y + e * y * z + f * x * z

    def smoothness_value(self):
        return smoothness_value(*self.coefficients())

    def strange_point(self):
        return strange_point(*self.coefficients())

    def __str__(self):
        return str(self.form())


@dataclass
class PointSearch:
    status: str  # "found", "not-found"
    point: tuple = None
    method: str = ""


def _on_curve(C, P):
    return not C(*P) and any(P)


def _poly_candidates(base, budget):
    q = base.order
    polys = []
    for deg in range(budget + 1):
        for idx in range(q ** deg * (q - 1) if deg else q):
            coeffs, x = [], idx
            for _ in range(deg):
                coeffs.append(base.from_int(x % q))
                x //= q
            lead = base.from_int(x + 1) if deg else base.from_int(x)
            polys.append(Poly(base, coeffs + [lead]))
    return polys  # zero first, then by degree


def _search_ratfunc(C, budget):
    K = C.field
    polys = _poly_candidates(K.base, budget)
    height = {p: max(p.degree, 0) for p in polys}
    triples = []
    for x, y, z in product(polys, repeat=3):
        first = next((v for v in (x, y, z) if v), None)
        if first is None or first.lc() != 1:
            continue
        triples.append((max(height[x], height[y], height[z]), x, y, z))
    triples.sort(key=lambda t: t[0])
    # clear denominators once; the scan then runs on polynomials only
    den = Poly(K.base, [1])
    for c in C.coefficients():
        den = den * c.den // gcd(den, c.den)
    a, b, c, d, e, f = (x.num * (den // x.den) for x in C.coefficients())
    sq = {p: p * p for p in polys}
    for _, x, y, z in triples:
        if not (a * sq[x] + b * sq[y] + c * sq[z] + d * x * y + e * y * z + f * x * z):
            P = (K(x), K(y), K(z))
            assert not C(*P)
            return P
    return None


def find_point(C, budget=2):
    """A K-rational point of a smooth conic.

    Finite fields: exhaustive scan (always succeeds).  F_q(T): the
    t-shortcut, then a search over polynomial coordinates of degree at most
    ``budget``; "not-found" only means the search was incomplete.
    """
    K = C.field
    if isinstance(K, GaloisField):
        for P in projective_points(K):
            if not C(*P):
                return PointSearch("found", P, "exhaustive scan")
        raise AssertionError("smooth conic over a finite field without a point")
    shortcut = inseparable_point_any(C)
    if shortcut.rational:
        P = shortcut.point_on_original
        assert _on_curve(C, P)
        return PointSearch("found", P, "t-shortcut" if shortcut.t is not None else "coordinate point")
    if isinstance(K, RationalFunctionField):
        P = _search_ratfunc(C, budget)
        if P is not None:
            assert _on_curve(C, P)
            return PointSearch("found", P, f"height search (degree <= {budget})")
        return PointSearch("not-found", None, f"no point found within budget {budget}")
    return PointSearch("not-found", None, "no search strategy for this field")


# ---------------------------------------------------------------------------
# purely inseparable points


def _perm_matrix(field, perm):
    # column j is e_{perm[j]}: new variable j plays the role of old variable perm[j]
    M = [[field.zero] * 3 for _ in range(3)]
    for j, i in enumerate(perm):
        M[i][j] = field.one
    return M


def arrange_for_inseparable(C):
    """Permute coordinates so that d != 0 and [1:0:0] is off the conic (a != 0).

    Returns ``(C', P)`` with C'(v) = C(P v), or ``(None, point)`` when some
    coordinate point already lies on C.
    """
    K = C.field
    F = C.form()
    for perm in permutations(range(3)):
        P = _perm_matrix(K, perm)
        C2 = Conic.from_form(substitute(F, P, check=False))
        if C2.d and C2.a:
            return C2, P
    for perm in permutations(range(3)):
        P = _perm_matrix(K, perm)
        C2 = Conic.from_form(substitute(F, P, check=False))
        if C2.d and not C2.a:
            e1 = (K.one, K.zero, K.zero)
            pt = tuple(linalg.matmul(P, [[x] for x in e1])[i][0] for i in range(3))
            return None, pt
    raise AssertionError("smooth conic with d = e = f = 0")


@dataclass
class InseparablePoint:
    t: object  # a^-1 (b f^2 + c d^2 + e f d); None if a coordinate point was used
    rational: bool  # t is a square in K
    point: tuple  # [sqrt(t) : f : d] on the arranged conic (in K or in K(sqrt t))
    extension: object = None  # K(sqrt t) when t is not a square
    arrangement: list = None  # P with arranged(v) = C(P v)
    point_on_original: tuple = None


def inseparable_point(C):
    """t = a^-1 (b f^2 + c d^2 + e f d) and the point [sqrt(t) : f : d] of C.

    Requires d != 0 and a != 0.  When t is a square of K the point is
    K-rational; otherwise it lives in the purely inseparable extension K(sqrt t).
    """
    a, b, c, d, e, f = C.coefficients()
    if not d or not a:
        raise ValueError("inseparable point needs d != 0 and a != 0")
    K = C.field
    t = (b * f * f + c * d * d + e * f * d) / a
    if K.is_square(t):
        P = (K.sqrt(t), f, d)
        return InseparablePoint(t, True, P)
    L = InseparableExtension(K, t)
    P = (L.root, L(f), L(d))
    return InseparablePoint(t, False, P, extension=L)


def inseparable_point_any(C):
    """Arrange coordinates, then apply :func:`inseparable_point`; map the point back."""
    C2, P = arrange_for_inseparable(C)
    if C2 is None:
        return InseparablePoint(None, True, P, point_on_original=P)
    res = inseparable_point(C2)
    res.arrangement = P
    ring = res.extension or C.field
    back = tuple(sum((ring(P[i][j]) * res.point[j] for j in range(3)), ring.zero) for i in range(3))
    res.point_on_original = back
    return res


# ---------------------------------------------------------------------------
# the 2 x 2 representation


@dataclass
class ConicSDR:
    matrix: LinearPencil
    lam: object  # det(matrix) = lam * F
    transform: list  # A with F(A v) in the normalized shape (a = d = 0, f != 0)
    normalized: Conic


def _complete_basis(P, field):
    i0 = next(i for i in range(3) if P[i])
    others = [j for j in range(3) if j != i0]
    cols = [list(P)] + [[field.one if r == j else field.zero for r in range(3)] for j in others]
    return linalg.transpose(cols)


def conic_sdr(C, P):
    """Symmetric 2 x 2 pencil M with det(M) = lam * F, built through the K-point P.

    Coordinates are changed so that P = [1:0:0] with tangent line Z = 0;
    there a = d = 0 and b, f != 0, and [[Z, bY], [bY, bfX + beY + bcZ]] has
    determinant b * F.  The pencil is pulled back to the original coordinates.
    """
    K = C.field
    P = tuple(K(x) if isinstance(x, int) else x for x in P)
    if not any(P) or C(*P):
        raise ValueError("point is not on the conic")
    A1 = _complete_basis(P, K)
    F1 = Conic.from_form(substitute(C.form(), A1))
    assert not F1.a
    # tangent at [1:0:0] is d Y + f Z = 0; make it Z = 0
    if F1.f:
        A2 = [[K.one, K.zero, K.zero], [K.zero, K.one, K.zero], [K.zero, F1.d / F1.f, K.one]]
    else:
        A2 = [[K.one, K.zero, K.zero], [K.zero, K.zero, K.one], [K.zero, K.one, K.zero]]
    A = linalg.matmul(A1, A2)
    N = Conic.from_form(substitute(C.form(), A))
    assert not N.a and not N.d and N.f and N.b, "normalization failed on a smooth conic"
    b, c, e, f = N.b, N.c, N.e, N.f
    zero = K.zero
    Mn = [[linear_form(K, zero, zero, K.one), linear_form(K, zero, b, zero)],
          [linear_form(K, zero, b, zero), linear_form(K, b * f, b * e, b * c)]]
    Ainv = linalg.inverse(A, K)
    M = LinearPencil([[substitute(x, Ainv, check=False) for x in row] for row in Mn], symmetric=True)
    return ConicSDR(M, b, A, N)


# ---------------------------------------------------------------------------
# local points


@dataclass
class LocalPoint:
    status: str  # "found" or "undecided"
    point: tuple = None  # LaurentSeries coordinates
    residue_point: tuple = None
    precision: int = 0
    reason: str = ""


def find_local_point(C, place, N=None, max_weight=3):
    """A point of C over the completion K_v, to precision N.

    For each weighting (X, Y, Z) -> (pi^i X, pi^j Y, pi^k Z) with weights up
    to ``max_weight``, the coefficients are scaled to be integral with a
    unit among them; a residue point where some partial derivative is a
    unit is Hensel-lifted along that coordinate.  If no weighting yields
    such a point the answer is "undecided": local solvability is then not
    decided here.
    """
    N = default_precision() if N is None else N
    base = [expand_at(x, place, N + 8) for x in C.coefficients()]
    res = base[0].field
    weights = sorted(product(range(max_weight + 1), repeat=3), key=lambda w: (sum(w), w))
    for w in weights:
        if min(w):
            continue
        series = [LaurentSeries(s.field, s.offset + sum(wi * ei for wi, ei in zip(w, mono)), s.coeffs)
                  for s, mono in zip(base, _MONOS)]
        m = min(s.offset for s in series if s.coeffs)
        series = [LaurentSeries(s.field, s.offset - m, s.coeffs) for s in series]
        found = _lift_residue_point(series, res, N)
        if found is not None:
            point, Pbar = found
            scale = [LaurentSeries(res, wi, [res.one], N) for wi in w]
            original = tuple(x * u for x, u in zip(point, scale))
            return LocalPoint("found", original, Pbar, N, f"chart weights {w}")
    return LocalPoint("undecided", None, None, N,
                      "no smooth residue point in the charts tried; local solvability not decided")


def _lift_residue_point(series, res, N):
    red = [s.coefficient(0) if s.precision > 0 else res.zero for s in series]
    Fbar = TernaryForm(res, 2, dict(zip(_MONOS, red)))
    if not Fbar:
        return None
    grads = partials(Fbar)
    for Pbar in projective_points(res):
        if Fbar(*Pbar):
            continue
        g = [G(*Pbar) for G in grads]
        k = next((i for i in range(3) if g[i]), None)
        if k is None:
            continue
        consts = [LaurentSeries.constant(res, x, N) for x in Pbar]
        # F as a quadratic in coordinate k with the others fixed
        poly = _restrict(series, consts, k, res, N)
        try:
            y = hensel_lift(poly, Pbar[k], N)
        except HenselError:
            continue
        point = list(consts)
        point[k] = y
        value = _evaluate_series(series, point)
        assert not value.coeffs or value.offset >= N
        return tuple(point), Pbar
    return None


def _evaluate_series(coeffs, P):
    x, y, z = P
    a, b, c, d, e, f = coeffs
    return a * x * x + b * y * y + c * z * z + d * x * y + e * y * z + f * x * z


def _restrict(coeffs, consts, k, res, N):
    a, b, c, d, e, f = coeffs
    zero = LaurentSeries(res, N, [])
    # monomial coefficient table: (exponents of x, y, z) -> coefficient
    terms = {(2, 0, 0): a, (0, 2, 0): b, (0, 0, 2): c, (1, 1, 0): d, (0, 1, 1): e, (1, 0, 1): f}
    out = [zero, zero, zero]
    for mono, coeff in terms.items():
        term = coeff
        for v in range(3):
            if v != k:
                for _ in range(mono[v]):
                    term = term * consts[v]
        out[mono[k]] = out[mono[k]] + term
    return out
