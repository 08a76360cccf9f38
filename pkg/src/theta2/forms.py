"""Homogeneous ternary forms, matrices of linear forms and their determinants.

Forms are sparse maps from exponent triples (i, j, l) to nonzero
coefficients; coefficients live in any field following the protocol in
:mod:`theta2.fields`.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import linalg

__all__ = [
    "TernaryForm",
    "LinearPencil",
    "Equivalence",
    "monomials",
    "variables",
    "linear_form",
    "det",
    "apply_equivalence",
    "substitute",
    "partials",
    "is_smooth",
    "field_of",
    "projective_points",
]


@lru_cache(maxsize=None)
def monomials(d):
    """Exponent triples of degree d in graded-lex order, X > Y > Z."""
    return tuple((i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1))


def _mono_str(e):
    parts = []
    for name, k in zip("XYZ", e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _coeff_str(c):
    s = str(c)
    if any(ch in s for ch in "+/") and not (s.startswith("(") and s.endswith(")") and s.count("(") == 1):
        return f"({s})"
    return s


class TernaryForm:
    """F(X, Y, Z) homogeneous of degree ``degree``; zero coefficients are never stored."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs=None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if sum(e) != degree:
                raise ValueError(f"monomial {e} does not have degree {degree}")
            if c:
                clean[tuple(e)] = c
        self.field = field
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def zero(cls, field, degree=0):
        return cls(field, degree)

    @classmethod
    def constant(cls, field, c):
        return cls(field, 0, {(0, 0, 0): c})

    @classmethod
    def from_dense(cls, field, degree, values):
        """Form from coefficients listed in :func:`monomials` order."""
        return cls(field, degree, dict(zip(monomials(degree), values)))

    def dense(self):
        zero = self.field.zero
        return [self.coeffs.get(e, zero) for e in monomials(self.degree)]

    def coefficient(self, e):
        return self.coeffs.get(tuple(e), self.field.zero)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return not self.coeffs and not other.coeffs
        if self.degree != other.degree or self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(c == other.coeffs[e] for e, c in self.coeffs.items())

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return TernaryForm(self.field, self.degree, out)

    __sub__ = __add__

    def __neg__(self):
        return self

    def scale(self, c):
        if not c:
            return TernaryForm(self.field, self.degree)
        return TernaryForm(self.field, self.degree, {e: c * x for e, x in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return TernaryForm(self.field, self.degree + other.degree, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        result = TernaryForm.constant(self.field, self.field.one)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x, y, z):
        """Evaluate at a point; coordinates may live in an extension of the field."""
        acc = None
        for (i, j, l), c in self.coeffs.items():
            term = c * (x ** i) * (y ** j) * (z ** l) if (i or j or l) else c
            acc = term if acc is None else acc + term
        if acc is None:
            return self.field.zero
        return acc

    def map_coefficients(self, fn, field):
        return TernaryForm(field, self.degree, {e: fn(c) for e, c in self.coeffs.items()})

    def normalized(self):
        """Scalar multiple whose leading coefficient (graded-lex) is one."""
        for e in monomials(self.degree):
            c = self.coeffs.get(e)
            if c:
                return self.scale(c.inverse()), c
        return self, self.field.one

    def proportional_to(self, other):
        """The scalar c with self = c * other, or None when there is none."""
        if not other:
            return None
        a, ca = self.normalized()
        b, cb = other.normalized()
        if a == b and self:
            return ca / cb
        return None

    def __repr__(self):
        return f"TernaryForm({self})"

    def __str__(self):
        terms = []
        for e in monomials(self.degree):
            c = self.coeffs.get(e)
            if not c:
                continue
            m = _mono_str(e)
            if not m:
                terms.append(str(c))
            elif c == 1:
                terms.append(m)
            else:
                terms.append(f"{_coeff_str(c)}*{m}")
        return "+".join(terms) if terms else "0"


def field_of(*items):
    for x in items:
        if hasattr(x, "field"):
            return x.field
    raise ValueError("cannot infer coefficient field")


def variables(field):
    """The forms X, Y, Z."""
    one = field.one
    return tuple(TernaryForm(field, 1, {e: one}) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def linear_form(field, p, q, r):
    """pX + qY + rZ."""
    vals = [field(v) if isinstance(v, int) else v for v in (p, q, r)]
    return TernaryForm(field, 1, dict(zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), vals)))


def _linear_coeffs(L):
    return tuple(L.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


class LinearPencil:
    """d x d matrix of linear forms M = X*A + Y*B + Z*C."""

    def __init__(self, entries, symmetric=None):
        rows = [list(r) for r in entries]
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("pencil must be square")
        field = field_of(*(x for r in rows for x in r))
        for r in rows:
            for x in r:
                if x and x.degree != 1:
                    raise ValueError(f"entry {x} is not a linear form")
        rows = [[x if x else TernaryForm(field, 1) for x in r] for r in rows]
        is_sym = all(rows[i][j] == rows[j][i] for i in range(d) for j in range(i))
        if symmetric and not is_sym:
            raise ValueError("pencil flagged symmetric but entries differ")
        self.size = d
        self.field = field
        self.entries = tuple(tuple(r) for r in rows)
        self.symmetric = is_sym if symmetric is None else symmetric

    @classmethod
    def from_matrices(cls, A, B, C, symmetric=None, field=None):
        field = field or A[0][0].field
        d = len(A)
        return cls([[linear_form(field, A[i][j], B[i][j], C[i][j]) for j in range(d)]
                    for i in range(d)], symmetric=symmetric)

    def matrices(self):
        """(A, B, C) with M = X*A + Y*B + Z*C."""
        out = ([], [], [])
        for row in self.entries:
            cs = [_linear_coeffs(x) for x in row]
            for k in range(3):
                out[k].append([c[k] for c in cs])
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, LinearPencil) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def map_entries(self, fn):
        return LinearPencil([[fn(x) for x in r] for r in self.entries])

    def to_lists(self):
        return [[str(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"LinearPencil({self.to_lists()})"

    def __str__(self):
        width = max(len(str(x)) for r in self.entries for x in r)
        return "\n".join("[ " + "  ".join(str(x).rjust(width) for x in r) + " ]" for r in self.entries)


@dataclass(frozen=True)
class Equivalence:
    """The action M -> lam * S^t M S."""

    lam: object
    S: tuple

    def __post_init__(self):
        S = tuple(tuple(r) for r in self.S)
        object.__setattr__(self, "S", S)
        if not self.lam:
            raise ValueError("scalar must be nonzero")
        if not linalg.is_invertible([list(r) for r in S], self.lam.field):
            raise ValueError("S is singular")

    def inverse(self):
        Sinv = linalg.inverse([list(r) for r in self.S], self.lam.field)
        return Equivalence(self.lam.inverse(), Sinv)


def det(M):
    """Exact determinant of a pencil by cofactor expansion with memoised minors."""
    d = M.size
    field = M.field
    rows = M.entries
    memo = {}

    def minor(r, cols):
        if r == d:
            return TernaryForm.constant(field, field.one)
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = TernaryForm(field, d - r)
        for c in range(d):
            if cols >> c & 1 and rows[r][c]:
                # signs vanish in characteristic two
                acc = acc + rows[r][c] * minor(r + 1, cols & ~(1 << c))
        memo[key] = acc
        return acc

    result = minor(0, (1 << d) - 1)
    if not result:
        return TernaryForm(field, d)
    return result


def apply_equivalence(M, e):
    """lam * S^t M S as a new pencil."""
    S = [list(r) for r in e.S]
    if len(S) != M.size:
        raise ValueError("size mismatch")
    St = linalg.transpose(S)
    mats = []
    for A in M.matrices():
        P = linalg.matmul(linalg.matmul(St, A), S)
        mats.append([[e.lam * x for x in r] for r in P])
    out = LinearPencil.from_matrices(*mats, field=M.field)
    if M.symmetric:
        out.symmetric = True
    return out


def substitute(F, A, check=True):
    """F composed with (X, Y, Z) -> A (X, Y, Z); a right action of GL_3."""
    field = F.field
    if check and not linalg.is_invertible(A, field):
        raise ValueError("substitution matrix is singular")
    images = [linear_form(field, *A[i]) for i in range(3)]
    powers = [[TernaryForm.constant(field, field.one)] for _ in range(3)]
    out = TernaryForm(field, F.degree)
    for e, c in F.coeffs.items():
        term = TernaryForm.constant(field, c)
        for v in range(3):
            while len(powers[v]) <= e[v]:
                powers[v].append(powers[v][-1] * images[v])
            term = term * powers[v][e[v]]
        out = out + term
    if not out:
        return TernaryForm(field, F.degree)
    return out


def partials(F):
    """Formal partial derivatives (d/dX, d/dY, d/dZ), multipliers taken mod 2."""
    out = []
    for v in range(3):
        terms = {}
        for e, c in F.coeffs.items():
            if e[v] & 1:
                e2 = list(e)
                e2[v] -= 1
                terms[tuple(e2)] = c
        out.append(TernaryForm(F.field, max(F.degree - 1, 0), terms))
    return tuple(out)


def is_smooth(F):
    """Smoothness of the projective curve F = 0 over the algebraic closure.

    The singular locus is cut out by F and its partials.  It is empty iff
    the ideal they generate contains every form of degree 3d - 2 (three
    generic degree-d combinations form a regular sequence, and Macaulay's
    bound applies).  That is a rank condition on a matrix over the
    coefficient field, so the test is exact over any field.
    """
    d = F.degree
    if not F:
        return False
    if d == 1:
        return True
    if d == 0:
        return False
    gens = [F, *partials(F)]
    D = 3 * d - 2
    cols = {e: i for i, e in enumerate(monomials(D))}
    rows = []
    for G in gens:
        if not G:
            continue
        for m in monomials(D - G.degree):
            row = [F.field.zero] * len(cols)
            for e, c in G.coeffs.items():
                row[cols[(e[0] + m[0], e[1] + m[1], e[2] + m[2])]] = c
            rows.append(row)
    if len(rows) < len(cols):
        return False
    return linalg.rank(rows, F.field) == len(cols)


def projective_points(field):
    """P^2 over a finite field: [1:y:z], then [0:1:z], then [0:0:1]."""
    elems = field.elements()
    one, zero = field.one, field.zero
    for y in elems:
        for z in elems:
            yield (one, y, z)
    for z in elems:
        yield (zero, one, z)
    yield (zero, zero, one)
