"""Exhaustive classification of symmetric determinantal representations.

Symmetric pencils M = X A + Y B + Z C over GF(2) or GF(4) are coded as
integers: the upper triangles of A, B, C (row-major) are base-q digits,
A lowest.  Determinants and group actions are evaluated on whole arrays of
codes at once with numpy, using the field's multiplication table; in
characteristic two the determinant is the permanent, so no signs appear.
"""

from dataclasses import dataclass, field as dc_field
from itertools import permutations, product
import random as _random

import numpy as np

from .fields import GaloisField
from .forms import LinearPencil, TernaryForm, is_smooth, linear_form, monomials
from .hassewitt import count_points, is_ordinary

__all__ = [
    "enumerate_symmetric_pencils",
    "pencil_count",
    "encode_pencil",
    "decode_pencil",
    "general_linear_group",
    "sdr_census",
    "CensusResult",
    "CensusRow",
    "MAX_PENCILS",
]

MAX_PENCILS = 1 << 20
MAX_GROUP_SCAN = 1 << 18
CENSUS_FIELDS = (1, 2)


def _check_field(field):
    if not isinstance(field, GaloisField) or field.k not in CENSUS_FIELDS:
        raise ValueError("census fields are GF(2) and GF(4)")


def _tables(field):
    q = field.order
    mul = np.array([[field._mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    inv = np.array([0] + [field._inv(a) for a in range(1, q)], dtype=np.int64)
    return mul, inv


def _upper(d):
    return [(i, j) for i in range(d) for j in range(i, d)]


def pencil_count(d, field):
    return field.order ** (3 * len(_upper(d)))


def _guard(d, field):
    _check_field(field)
    if d < 1:
        raise ValueError("pencil size must be positive")
    n = pencil_count(d, field)
    if n > MAX_PENCILS:
        raise ValueError(f"{n} symmetric {d}x{d} pencils over {field!r} exceeds the exhaustive limit "
                         f"{MAX_PENCILS}; use sampling")
    return n


def _digits(codes, q, count):
    out = []
    c = np.asarray(codes, dtype=np.int64)
    for _ in range(count):
        out.append(c % q)
        c = c // q
    return out


def _codes_to_mats(codes, d, q):
    """(len, 3, d, d) int arrays of the coefficient matrices A, B, C."""
    up = _upper(d)
    n = len(up)
    digs = _digits(codes, q, 3 * n)
    mats = np.zeros((len(digs[0]), 3, d, d), dtype=np.int64)
    for m in range(3):
        for t, (i, j) in enumerate(up):
            mats[:, m, i, j] = digs[m * n + t]
            mats[:, m, j, i] = digs[m * n + t]
    return mats


def _mats_to_codes(mats, d, q):
    up = _upper(d)
    n = len(up)
    code = np.zeros(mats.shape[0], dtype=np.int64)
    for m in range(3):
        for t, (i, j) in enumerate(up):
            code += mats[:, m, i, j] * q ** (m * n + t)
    return code


def encode_pencil(M):
    """Integer code of a symmetric pencil over GF(2) or GF(4)."""
    if not M.symmetric:
        raise ValueError("only symmetric pencils are coded")
    q = M.field.order
    A = np.array([[[int(x) for x in row] for row in mat] for mat in M.matrices()], dtype=np.int64)
    return int(_mats_to_codes(A[None], M.size, q)[0])


def decode_pencil(code, d, field):
    mats = _codes_to_mats([code], d, field.order)[0]
    el = [field.from_int(v) for v in range(field.order)]
    rows = [[linear_form(field, el[mats[0, i, j]], el[mats[1, i, j]], el[mats[2, i, j]])
             for j in range(d)] for i in range(d)]
    return LinearPencil(rows, symmetric=True)


def enumerate_symmetric_pencils(d, field):
    """Every symmetric d x d pencil over ``field`` exactly once, in code order."""
    n = _guard(d, field)
    for code in range(n):
        yield decode_pencil(code, d, field)


# ---------------------------------------------------------------------------
# vectorized forms


def _form_mul(f, g, mul):
    out = {}
    for e1, a in f.items():
        for e2, b in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            p = mul[a, b]
            out[e] = out[e] ^ p if e in out else p
    return out


def _pencil_dets(mats, d, mul):
    """Dense determinant coefficients, shape (len, #monomials(d))."""
    units = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    total = {}
    for sigma in permutations(range(d)):
        prod_form = {(0, 0, 0): np.ones(mats.shape[0], dtype=np.int64)}
        for i in range(d):
            lin = {units[m]: mats[:, m, i, sigma[i]] for m in range(3)}
            prod_form = _form_mul(prod_form, lin, mul)
        for e, v in prod_form.items():
            total[e] = total[e] ^ v if e in total else v
    zero = np.zeros(mats.shape[0], dtype=np.int64)
    return np.stack([total.get(e, zero) for e in monomials(d)], axis=1)


def _normalize_rows(dense, mul, inv):
    """Scale each row so its first nonzero entry is 1; zero rows stay zero."""
    nz = dense != 0
    has = nz.any(axis=1)
    first = np.argmax(nz, axis=1)
    lead = dense[np.arange(dense.shape[0]), first]
    lead = np.where(has, lead, 1)
    scale = inv[lead]
    return mul[scale[:, None], dense], has


def _row_codes(dense, q):
    code = np.zeros(dense.shape[0], dtype=np.int64)
    for t in range(dense.shape[1]):
        code += dense[:, t] * q ** t
    return code


# ---------------------------------------------------------------------------
# the group


def general_linear_group(d, field):
    """All invertible d x d matrices over GF(2) or GF(4), shape (n, d, d)."""
    _check_field(field)
    q = field.order
    if q ** (d * d) > MAX_GROUP_SCAN:
        raise ValueError(f"GL_{d}({field!r}) is too large to enumerate")
    mul, _ = _tables(field)
    codes = np.arange(q ** (d * d), dtype=np.int64)
    digs = _digits(codes, q, d * d)
    mats = np.stack(digs, axis=1).reshape(-1, d, d)
    det = np.zeros(len(codes), dtype=np.int64)
    for sigma in permutations(range(d)):
        term = np.ones(len(codes), dtype=np.int64)
        for i in range(d):
            term = mul[term, mats[:, i, sigma[i]]]
        det ^= term
    return mats[det != 0]


def _act(group, pencil_mats, lam, mul):
    """Codes-ready images lam * S^t P S for every S in ``group`` (one pencil)."""
    n, d, _ = group.shape
    out = np.zeros((n, 3, d, d), dtype=np.int64)
    for m in range(3):
        P = pencil_mats[m]
        # T = P S, then S^t T
        T = np.zeros((n, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                acc = np.zeros(n, dtype=np.int64)
                for k in range(d):
                    if P[i, k]:
                        acc ^= mul[P[i, k], group[:, k, j]]
                T[:, i, j] = acc
        for i in range(d):
            for j in range(d):
                acc = np.zeros(n, dtype=np.int64)
                for k in range(d):
                    acc ^= mul[group[:, k, i], T[:, k, j]]
                out[:, m, i, j] = mul[lam, acc]
    return out


def _orbit(code, d, field, group, mul):
    q = field.order
    mats = _codes_to_mats([code], d, q)[0]
    images = [_mats_to_codes(_act(group, mats, lam, mul), d, q) for lam in range(1, q)]
    return np.unique(np.concatenate(images))


# ---------------------------------------------------------------------------
# census


@dataclass
class CensusRow:
    form: TernaryForm
    smooth: bool
    ordinary: bool
    points: int
    classes: list  # canonical (least) code of each equivalence class

    @property
    def class_count(self):
        return len(self.classes)


@dataclass
class CensusResult:
    degree: int
    field: object
    exhaustive: bool
    pencils: int
    rows: list = dc_field(default_factory=list)

    @property
    def coverage(self):
        return "exhaustive" if self.exhaustive else "sampled, not exhaustive"

    def row_for(self, F):
        key = F.normalized()[0]
        for r in self.rows:
            if r.form == key:
                return r
        return None


def _all_forms(d, field):
    """Every nonzero form of degree d with leading coefficient one."""
    q = field.order
    el = [field.from_int(v) for v in range(q)]
    monos = monomials(d)
    for digits in product(range(q), repeat=len(monos)):
        digits = digits[::-1]
        first = next((t for t, v in enumerate(digits) if v), None)
        if first is None or digits[first] != 1:
            continue
        yield TernaryForm(field, d, {e: el[v] for e, v in zip(monos, digits) if v})


def _form_key(F, q):
    return sum(int(c) * q ** t for t, c in enumerate(F.dense()))


def sdr_census(d, field, sample=None, seed=0):
    """Equivalence classes of symmetric representations of every smooth curve of degree d.

    Exhaustive over all symmetric pencils unless ``sample`` is given, in
    which case ``sample`` random pencils are drawn and the result is
    labelled as sampled.  Classes are orbits of M -> lam S^t M S,
    S in GL_d, lam nonzero.
    """
    _check_field(field)
    q = field.order
    mul, inv = _tables(field)
    if sample is None:
        total = _guard(d, field)
        codes = np.arange(total, dtype=np.int64)
    else:
        total = pencil_count(d, field)
        rng = _random.Random(seed)
        codes = np.unique(np.array([rng.randrange(total) for _ in range(sample)], dtype=np.int64))
    mats = _codes_to_mats(codes, d, q)
    dense = _pencil_dets(mats, d, mul)
    normalized, nonzero = _normalize_rows(dense, mul, inv)
    keys = _row_codes(normalized, q)
    codes, keys = codes[nonzero], keys[nonzero]
    order = np.argsort(keys, kind="stable")
    codes, keys = codes[order], keys[order]
    bounds = {}
    if len(keys):
        starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
        ends = np.r_[starts[1:], len(keys)]
        bounds = {int(keys[s]): (s, e) for s, e in zip(starts, ends)}

    group = general_linear_group(d, field)
    result = CensusResult(d, field, sample is None, int(len(mats)))
    forms = _all_forms(d, field) if sample is None else (
        _decode_form(k, d, field) for k in sorted(bounds))
    for F in forms:
        if not is_smooth(F):
            continue
        key = _form_key(F, q)
        classes = []
        if key in bounds:
            s, e = bounds[key]
            curve_codes = set(int(c) for c in codes[s:e])
            remaining = set(curve_codes)
            while remaining:
                orb = _orbit(min(remaining), d, field, group, mul)
                orb_set = set(int(x) for x in orb)
                # the action preserves the determinant up to a unit
                assert sample is not None or orb_set <= curve_codes
                classes.append(int(orb.min()))
                remaining -= orb_set
        g_ok = is_ordinary(F, check_smooth=False)
        result.rows.append(CensusRow(F, True, g_ok, count_points(F), classes))
    return result


def _decode_form(key, d, field):
    q = field.order
    monos = monomials(d)
    digs = []
    for _ in monos:
        digs.append(key % q)
        key //= q
    return TernaryForm(field, d, {e: field.from_int(v) for e, v in zip(monos, digs) if v})
