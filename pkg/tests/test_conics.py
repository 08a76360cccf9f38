import pytest

from theta2.conics import (Conic, conic_sdr, find_local_point, find_point, inseparable_point,
                           inseparable_point_any, is_smooth, smoothness_value, strange_point)
from theta2.fields import InseparableExtension, field_new
from theta2.forms import TernaryForm, det, is_smooth as form_is_smooth
from theta2.funcfield import expand_at, places_up_to
from theta2.parser import parse_form
from theta2.symbolic import SymbolicField


def _conic(text, field):
    return Conic.from_form(parse_form(text, field))


def test_criterion_values(F2, K):
    one, zero = F2.one, F2.zero
    assert smoothness_value(one, one, one, zero, zero, zero) == zero
    assert smoothness_value(zero, one, zero, zero, zero, one) == one
    C = _conic("X^2+X*Y+T*Z^2", K)
    assert C.smoothness_value() == K.T


def test_strange_point_kills_partials(F4):
    C = _conic("X^2+g*X*Y+Y*Z+Z^2", F4)
    P = strange_point(*C.coefficients())
    F = C.form()
    from theta2.forms import partials
    assert all(not D(*P) for D in partials(F))


def test_singular_conic_rejected(F2):
    with pytest.raises(ValueError):
        _conic("X^2+Y^2+Z^2", F2)


def test_criterion_matches_macaulay_on_all_f2_and_gf4_conics(F2, F4):
    for F in (F2, F4):
        q = F.order
        for idx in range(q ** 6):
            c = [F.from_int((idx // q ** i) % q) for i in range(6)]
            if not any(c):
                continue
            form = TernaryForm(F, 2, dict(zip(((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0),
                                               (0, 1, 1), (1, 0, 1)), c)))
            assert is_smooth(*c) == form_is_smooth(form)


def test_sdr_of_xz_plus_y2(F2):
    res = conic_sdr(_conic("X*Z+Y^2", F2), (F2.one, F2.zero, F2.zero))
    assert res.matrix.to_lists() == [["Z", "Y"], ["Y", "X"]]
    assert res.lam == F2.one


def test_point_over_ratfunc(K):
    C = _conic("X^2+X*Y+T*Z^2", K)
    res = find_point(C)
    assert res.status == "found"
    assert not C(*res.point)
    # another known point
    T = K.T
    assert not C(K.one, T + 1, K.one)
    ins = inseparable_point_any(C)
    assert ins.t == T and not ins.rational


def test_inseparable_point_lies_on_conic(K):
    T = K.T
    C = Conic(K, T, 1, T + 1, 1, T, 1)
    ins = inseparable_point(C)
    L = ins.extension or K
    F = C.form().map_coefficients(L, L) if ins.extension else C.form()
    assert not F(*ins.point)


def test_symbolic_inseparable_point():
    S = SymbolicField(list("abcdef"))
    a, b, c, d, e, f = (S[n] for n in "abcdef")
    t = (b * f * f + c * d * d + e * f * d) / a
    L = InseparableExtension(S, t)
    F = lambda X, Y, Z: a * X * X + b * Y * Y + c * Z * Z + d * X * Y + e * Y * Z + f * X * Z
    assert not (L(a) * F(L.root, L(f), L(d)))


def test_all_f2_conics_have_representations(F2):
    count = 0
    for idx in range(1, 64):
        c = [F2((idx >> i) & 1) for i in range(6)]
        if not is_smooth(*c):
            continue
        C = Conic(F2, *c)
        P = find_point(C).point
        res = conic_sdr(C, P)
        assert res.matrix.symmetric
        assert det(res.matrix) == C.form().scale(res.lam)
        count += 1
    assert count == 28


def test_local_points_everywhere(K):
    C = _conic("X^2+X*Y+T*Z^2", K)
    for v in places_up_to(K, 2):
        res = find_local_point(C, v, N=16)
        assert res.status == "found", (str(v), res.reason)
        # the lifted point satisfies the equation to the working precision
        a, b, c, d, e, f = (expand_at(x, v, 16) for x in C.coefficients())
        x, y, z = res.point
        value = a * x * x + b * y * y + c * z * z + d * x * y + e * y * z + f * x * z
        assert value.is_zero() and value.precision >= 16
