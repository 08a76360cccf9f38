"""Ordinariness of smooth plane curves through the Hasse-Witt matrix.

For a plane curve F = 0 of degree d in characteristic p = 2, regular
differentials are indexed by exponent triples (r, s, t) with r, s, t >= 1
and r + s + t = d, and the Hasse-Witt matrix has entry

    A[(r,s,t), (r',s',t')] = coefficient of X^(2r'-r) Y^(2s'-s) Z^(2t'-t) in F^(p-1) = F.

The operator is v -> A v^sigma with sigma the entrywise squaring.  The
independent check is the L-polynomial from exhaustive point counts: the
p-rank is the degree of L(t) mod 2.
"""

from dataclasses import dataclass

from . import linalg
from .fields import GaloisField, embedding, field_new
from .forms import is_smooth as form_is_smooth, monomials, projective_points

__all__ = [
    "HasseWittMatrix",
    "hw_matrix",
    "p_rank",
    "is_ordinary",
    "genus",
    "count_points",
    "l_polynomial",
    "zeta_p_rank",
    "SingularCurveError",
]

MAX_COUNT_FIELD = 12  # largest GF(2^k) the point-counting oracle will scan


class SingularCurveError(ValueError):
    pass


def genus(d):
    return (d - 1) * (d - 2) // 2


@dataclass
class HasseWittMatrix:
    field: object
    indices: tuple
    entries: list

    @property
    def genus(self):
        return len(self.indices)

    def det(self):
        if not self.indices:
            return self.field.one
        return linalg.det(self.entries, self.field)

    def frobenius_twist(self):
        return [[x * x for x in row] for row in self.entries]

    def __str__(self):
        return "\n".join("[ " + "  ".join(str(x) for x in row) + " ]" for row in self.entries)


def hw_matrix(F, check_smooth=True):
    """Hasse-Witt matrix of the smooth plane curve F = 0 (empty for d < 3)."""
    d = F.degree
    if check_smooth and not form_is_smooth(F):
        raise SingularCurveError(f"{F} is singular")
    idx = tuple(e for e in monomials(d) if min(e) >= 1) if d >= 3 else ()
    zero = F.field.zero
    rows = []
    for (r, s, t) in idx:
        row = []
        for (r2, s2, t2) in idx:
            e = (2 * r2 - r, 2 * s2 - s, 2 * t2 - t)
            row.append(F.coeffs.get(e, zero) if min(e) >= 0 else zero)
        rows.append(row)
    return HasseWittMatrix(F.field, idx, rows)


def p_rank(A):
    """Stable rank of v -> A v^sigma: rank of A A^sigma ... A^(sigma^(g-1))."""
    g = A.genus
    if g == 0:
        return 0
    prod = A.entries
    twist = A.entries
    for _ in range(g - 1):
        twist = [[x * x for x in row] for row in twist]
        prod = linalg.matmul(prod, twist)
    return linalg.rank(prod, A.field)


def is_ordinary(F, check_smooth=True):
    """Jacobian ordinary iff the Hasse-Witt matrix is invertible (vacuous for g = 0)."""
    return bool(hw_matrix(F, check_smooth).det())


# ---------------------------------------------------------------------------
# point counting oracle


def count_points(F, ext=1):
    """#C(GF(q^ext)) for F over GF(q) = GF(2^k), by scanning P^2."""
    base = F.field
    if not isinstance(base, GaloisField):
        raise TypeError("point counting needs a finite coefficient field")
    k = base.k * ext
    if k > MAX_COUNT_FIELD:
        raise ValueError(f"counting over GF(2^{k}) is beyond the desk-scale limit")
    big = field_new(k)
    emb = embedding(base, big)
    G = F.map_coefficients(emb, big)
    return sum(1 for P in projective_points(big) if not G(*P))


def l_polynomial(F):
    """Integer coefficients c_0..c_2g of L(t) = prod (1 - alpha_i t)."""
    d = F.degree
    g = genus(d)
    q = F.field.order
    if g == 0:
        return [1]
    S = [None]
    for i in range(1, g + 1):
        S.append(q ** i + 1 - count_points(F, i))
    c = [1]
    for j in range(1, g + 1):
        acc = sum(S[i] * c[j - i] for i in range(1, j + 1))
        if acc % j:
            raise ArithmeticError("point counts inconsistent with a smooth curve")
        c.append(-acc // j)
    for j in range(g + 1, 2 * g + 1):
        c.append(q ** (j - g) * c[2 * g - j])
    return c


def zeta_p_rank(F):
    """p-rank as the degree of L(t) mod 2 (number of unit reciprocal roots)."""
    c = l_polynomial(F)
    return max(j for j, x in enumerate(c) if x % 2)
