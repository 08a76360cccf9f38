"""Dense matrices over any field of the package (lists of lists)."""

__all__ = ["identity", "matmul", "transpose", "det", "inverse", "rank", "is_invertible"]

from .fields import GaloisField


def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(row) for row in zip(*A)]


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = A[i][0] * B[0][j]
            for k in range(1, m):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def _echelon(A, field):
    """Row-reduce a copy of A; returns (reduced rows, rank, determinant factor)."""
    M = [list(r) for r in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    det = field.one
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            det = field.zero
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        det = det * M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x + f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return M, r, det


def det(A, field=None):
    """Determinant by elimination (characteristic two: row swaps carry no sign)."""
    n = len(A)
    if n == 0:
        return field.one
    field = field or A[0][0].field
    _, r, d = _echelon(A, field)
    return d if r == n else field.zero


def _rank_galois(A, field):
    """Rank over GF(2^k) on raw integer values (the hot path of smoothness tests)."""
    if field.k == 1:
        pivots = {}
        for row in A:
            v = 0
            for x in row:
                v = (v << 1) | x.value
            while v:
                top = v.bit_length()
                if top in pivots:
                    v ^= pivots[top]
                else:
                    pivots[top] = v
                    break
        return len(pivots)
    mul, inv = field._mul, field._inv
    M = [[x.value for x in row] for row in A]
    r = 0
    cols = len(M[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = inv(M[r][c])
        pr = [mul(x, s) for x in M[r]]
        M[r] = pr
        for i in range(r + 1, len(M)):
            f = M[i][c]
            if f:
                row = M[i]
                for j in range(c, cols):
                    if pr[j]:
                        row[j] ^= mul(f, pr[j])
        r += 1
        if r == len(M):
            break
    return r


def rank(A, field=None):
    if not A:
        return 0
    field = field or A[0][0].field
    if isinstance(field, GaloisField):
        return _rank_galois(A, field)
    return _echelon(A, field)[1]


def is_invertible(A, field=None):
    return len(A) == 0 or bool(det(A, field))


def inverse(A, field=None):
    n = len(A)
    field = field or A[0][0].field
    aug = [list(A[i]) + identity(field, n)[i] for i in range(n)]
    M, r, _ = _echelon(aug, field)
    if r < n or any(not M[i][i] for i in range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in M]
