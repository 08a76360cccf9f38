"""Plane cubics in characteristic two: Weierstrass curves and the Hesse family.

Weierstrass invariants and the chord-tangent law are written with their
usual integer coefficients; the field coercion reduces them mod 2.
"""

from dataclasses import dataclass, field as dc_field

from .fields import GaloisField, InseparableExtension
from .forms import LinearPencil, TernaryForm, det, linear_form
from .funcfield import RationalFunctionField, is_square_local, places_up_to

__all__ = [
    "WeierstrassCurve",
    "CurvePoint",
    "HesseCubic",
    "TwoTorsion",
    "HesseSDR",
    "ordinary_normal_form",
    "j_invariant",
    "is_ordinary",
    "add_points",
    "double",
    "two_torsion",
    "hesse_jacobian",
    "hesse_matrix",
    "hesse_sdr",
    "hesse_local_global_report",
    "point_search",
    "VERDICT_EXISTS",
    "VERDICT_INSEPARABLE",
    "VERDICT_NON_ORDINARY",
]


@dataclass(frozen=True)
class CurvePoint:
    """Projective point, normalized so the last nonzero coordinate is 1."""

    x: object
    y: object
    z: object

    @classmethod
    def make(cls, x, y, z):
        if z:
            return cls(x / z, y / z, z / z)
        if y:
            return cls(x / y, y / y, z)
        if x:
            return cls(x / x, y, z)
        raise ValueError("[0:0:0] is not a point")

    @property
    def is_identity(self):
        return not self.z

    def coords(self):
        return (self.x, self.y, self.z)

    def __str__(self):
        return f"[{self.x} : {self.y} : {self.z}]"


@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 Z + a1 XYZ + a3 YZ^2 = X^3 + a2 X^2 Z + a4 XZ^2 + a6 Z^3."""

    field: object
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, self.field(v))
        if not self.discriminant:
            raise ValueError(f"singular Weierstrass curve: {self.form()} (discriminant 0)")

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self):
        c4 = self.c4
        return c4 * c4 * c4 / self.discriminant

    def is_ordinary(self):
        return bool(self.j_invariant())

    def form(self):
        K = self.field
        one = K.one
        coeffs = {(0, 2, 1): one, (1, 1, 1): self.a1, (0, 1, 2): self.a3, (3, 0, 0): one,
                  (2, 0, 1): self.a2, (1, 0, 2): self.a4, (0, 0, 3): self.a6}
        return TernaryForm(K, 3, coeffs)

    def base_change(self, L):
        return WeierstrassCurve(L, L(self.a1), L(self.a2), L(self.a3), L(self.a4), L(self.a6))

    @property
    def identity(self):
        K = self.field
        return CurvePoint(K.zero, K.one, K.zero)

    def contains(self, P):
        return not self.form()(P.x, P.y, P.z)

    def point(self, x, y, z=None):
        K = self.field
        P = CurvePoint.make(x, y, K.one if z is None else z)
        if not self.contains(P):
            raise ValueError(f"{P} is not on {self}")
        return P

    def negate(self, P):
        if P.is_identity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3, P.z)

    def add(self, P, Q):
        return add_points(self, P, Q)

    def double(self, P):
        return add_points(self, P, P)

    def multiply(self, n, P):
        result, base = self.identity, P
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def points(self):
        """All rational points over a finite field, identity first."""
        K = self.field
        out = [self.identity]
        F = self.form()
        for x in K.elements():
            for y in K.elements():
                if not F(x, y, K.one):
                    out.append(CurvePoint(x, y, K.one))
        return out

    def __str__(self):
        lhs = ["Y^2*Z"]
        for c, m in ((self.a1, "X*Y*Z"), (self.a3, "Y*Z^2")):
            if c:
                lhs.append(m if c == 1 else f"({c})*{m}")
        rhs = ["X^3"]
        for c, m in ((self.a2, "X^2*Z"), (self.a4, "X*Z^2"), (self.a6, "Z^3")):
            if c:
                rhs.append(m if c == 1 else f"({c})*{m}")
        return " + ".join(lhs) + " = " + " + ".join(rhs)


def ordinary_normal_form(field, a2, a6):
    """Y^2 Z + XYZ = X^3 + a2 X^2 Z + a6 Z^3, the normal form of an ordinary curve."""
    return WeierstrassCurve(field, field.one, a2, field.zero, field.zero, a6)


def j_invariant(E):
    return E.j_invariant()


def is_ordinary(E):
    return E.is_ordinary()


def add_points(E, P, Q):
    """Chord-tangent addition with identity [0:1:0]."""
    for R in (P, Q):
        if not E.contains(R):
            raise ValueError(f"{R} is not on the curve")
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2 and not (y1 + y2 + a1 * x2 + a3):
        return E.identity
    if x1 != x2:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    else:
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    one = E.field.one
    return CurvePoint(x3, y3, one)


def double(E, P):
    return add_points(E, P, P)


@dataclass
class TwoTorsion:
    rational: bool  # the nontrivial 2-torsion point is defined over K
    point: CurvePoint  # over K, or over K(sqrt(obstruction)) when not rational
    obstruction: object  # y^2 of the point; a6 in the normal form
    extension: object = None

    def verdict(self):
        if self.rational:
            return "rational over K"
        return ("not rational over K nor over its separable closure; rational over "
                f"K(sqrt({self.obstruction})), a purely inseparable quadratic extension")


def two_torsion(E):
    """The unique nontrivial 2-torsion point of an ordinary curve.

    P = -P forces a1 x + a3 = 0, so x0 = a3/a1 and y0^2 = x0^3 + a2 x0^2 + a4 x0 + a6;
    for Y^2 Z + XYZ = X^3 + a2 X^2 Z + a6 Z^3 this is [0 : sqrt(a6) : 1].
    """
    if not E.is_ordinary():
        raise ValueError("supersingular curve: no nontrivial 2-torsion in characteristic two")
    K = E.field
    x0 = E.a3 / E.a1
    w = x0 * x0 * x0 + E.a2 * x0 * x0 + E.a4 * x0 + E.a6
    if K.is_square(w):
        return TwoTorsion(True, CurvePoint(x0, K.sqrt(w), K.one), w)
    L = InseparableExtension(K, w)
    P = CurvePoint(L(x0), L.root, L.one)
    return TwoTorsion(False, P, w, extension=L)


# ---------------------------------------------------------------------------
# the Hesse family


@dataclass(frozen=True)
class HesseCubic:
    """a X^3 + b Y^3 + c Z^3 + m XYZ."""

    field: object
    a: object
    b: object
    c: object
    m: object

    def __post_init__(self):
        for name in "abcm":
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, self.field(v))
        if not self.smoothness_value():
            raise ValueError(f"singular Hesse cubic {self.form()}")

    def smoothness_value(self):
        a, b, c, m = self.a, self.b, self.c, self.m
        return a * b * c * (m * m * m + 27 * a * b * c)

    def form(self):
        K = self.field
        return TernaryForm(K, 3, {(3, 0, 0): self.a, (0, 3, 0): self.b, (0, 0, 3): self.c,
                                  (1, 1, 1): self.m})

    def __str__(self):
        return str(self.form())


def hesse_jacobian(H):
    """Y^2 Z + m XYZ + 9abc YZ^2 = X^3 + (-27 a^2 b^2 c^2 + m^3 abc) Z^3, reduced mod 2."""
    a, b, c, m = H.a, H.b, H.c, H.m
    abc = a * b * c
    K = H.field
    return WeierstrassCurve(K, m, K.zero, 9 * abc, K.zero, -27 * abc * abc + m * m * m * abc)


def hesse_matrix(H, s):
    """[[aX, sZ, sY], [sZ, bY, sX], [sY, sX, cZ]] over the field of s."""
    L = s.field
    a, b, c = (L(x) for x in (H.a, H.b, H.c))
    z = L.zero
    rows = [[linear_form(L, a, z, z), linear_form(L, z, z, s), linear_form(L, z, s, z)],
            [linear_form(L, z, z, s), linear_form(L, z, b, z), linear_form(L, s, z, z)],
            [linear_form(L, z, s, z), linear_form(L, s, z, z), linear_form(L, z, z, c)]]
    return LinearPencil(rows, symmetric=True)


VERDICT_EXISTS = "exists over K"
VERDICT_INSEPARABLE = "inseparable-only"
VERDICT_NON_ORDINARY = "non-ordinary"


@dataclass
class HesseSDR:
    verdict: str
    ordinary: bool
    exists_over_K: bool
    exists_over_separable_closure: bool
    exists_over_inseparable_extension: bool
    square_value: object = None  # m^-1 abc
    root: object = None  # sqrt(m^-1 abc), in K or in K(sqrt(m^-1 abc))
    matrix: LinearPencil = None
    lam: object = None
    extension: object = None
    criterion: str = ""
    verified: bool = False


def hesse_sdr(H):
    """Decide and construct the symmetric representation of a smooth Hesse cubic.

    m = 0: non-ordinary Jacobian, no representation even over the algebraic
    closure.  Otherwise a representation over K exists iff w = m^-1 abc is
    a square; if it is not, the same matrix works over K(sqrt w), which is
    purely inseparable, and no separable extension helps.
    """
    K = H.field
    if not H.m:
        return HesseSDR(VERDICT_NON_ORDINARY, False, False, False, False,
                        criterion="Jacobian not ordinary: no symmetric representation over the algebraic closure")
    w = H.a * H.b * H.c / H.m
    F = H.form()
    if K.is_square(w):
        s = K.sqrt(w)
        M = hesse_matrix(H, s)
        ok = det(M) == F.scale(w)
        assert ok
        return HesseSDR(VERDICT_EXISTS, True, True, True, True, w, s, M, w, None,
                        criterion="m^-1 abc is a square in K", verified=ok)
    L = InseparableExtension(K, w)
    M = hesse_matrix(H, L.root)
    ok = det(M) == F.map_coefficients(L, L).scale(L(w))
    assert ok
    return HesseSDR(VERDICT_INSEPARABLE, True, False, False, True, w, L.root, M, L(w), L,
                    criterion="m^-1 abc is not a square in K: only a purely inseparable extension helps",
                    verified=ok)


@dataclass
class LocalGlobalReport:
    curve: HesseCubic
    square_value: object
    global_exists: bool
    local: list = dc_field(default_factory=list)  # (place, exists)

    @property
    def everywhere_local(self):
        return all(e for _, e in self.local)

    @property
    def any_single_place(self):
        return any(e for _, e in self.local)

    @property
    def consistent(self):
        verdicts = {e for _, e in self.local}
        return verdicts <= {self.global_exists}


def hesse_local_global_report(H, bound=3, N=None):
    """SDR existence for H over K = F_q(T) and over K_v for every place of degree <= bound."""
    K = H.field
    if not isinstance(K, RationalFunctionField):
        raise TypeError("local-global report needs a curve over F_q(T)")
    if not H.m:
        raise ValueError("the local-global report needs m != 0")
    w = H.a * H.b * H.c / H.m
    glob = K.is_square(w)
    local = [(v, is_square_local(w, v, N)) for v in places_up_to(K, bound)]
    return LocalGlobalReport(H, w, glob, local)


def point_search(E, height):
    """Points of a curve over F_q(T) with polynomial coordinates of degree <= height."""
    from .conics import _poly_candidates

    K = E.field
    polys = _poly_candidates(K.base, height)
    F = E.form()
    found = []
    for x in polys:
        for y in polys:
            for z in polys:
                first = next((v for v in (x, y, z) if v), None)
                if first is None or first.lc() != 1:
                    continue
                if not F(K(x), K(y), K(z)):
                    P = CurvePoint.make(K(x), K(y), K(z))
                    if P not in found:
                        found.append(P)
    return found
