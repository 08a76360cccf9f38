import random

import pytest
from hypothesis import given, settings, strategies as st

from theta2 import linalg
from theta2.fields import field_new
from theta2.forms import (Equivalence, LinearPencil, TernaryForm, apply_equivalence, det,
                          is_smooth, linear_form, monomials, partials, projective_points)
from theta2.parser import parse_form


def _brute_smooth(F):
    """No singular point over GF(2^k) for k up to 4 (a necessary-condition oracle)."""
    for k in (1, 2, 3, 4):
        L = field_new(k)
        from theta2.fields import embedding
        G = F.map_coefficients(embedding(F.field, L), L)
        gens = [G, *partials(G)]
        for P in projective_points(L):
            if all(not H(*P) for H in gens):
                return False
    return True


def test_monomials_order():
    assert list(monomials(2)) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert len(monomials(4)) == 15


def test_f2_cubic_determinant():
    F2 = field_new(1)
    rows = [[parse_form(x, F2, 1) for x in r] for r in (("Y", "0", "X"), ("0", "Z", "Y"),
                                                         ("X", "Y", "X+Y+Z"))]
    M = LinearPencil(rows)
    assert M.symmetric
    assert str(det(M)) == "X^2*Z+X*Y*Z+Y^3+Y^2*Z+Y*Z^2"


def test_smoothness_examples():
    F2 = field_new(1)
    assert not is_smooth(parse_form("X^2+Y^2+Z^2", F2))
    assert is_smooth(parse_form("X*Z+Y^2", F2))
    assert not is_smooth(parse_form("X^3+Y^3+Z^3+X*Y*Z", F2))
    assert is_smooth(parse_form("X^3+Y^3+Z^3", F2))
    assert not is_smooth(parse_form("Y^2*Z+X^3", F2))  # cusp


def test_smoothness_matches_point_search_on_all_f2_conics():
    F2 = field_new(1)
    for bits in range(1, 64):
        F = TernaryForm.from_dense(F2, 2, [F2((bits >> i) & 1) for i in range(6)])
        if is_smooth(F):
            assert _brute_smooth(F)
        else:
            # a singular plane conic has a singular point over GF(4) at worst
            assert not _brute_smooth(F)


def test_smoothness_sampled_cubics(rng):
    F2 = field_new(1)
    for _ in range(60):
        F = TernaryForm.from_dense(F2, 3, [F2(rng.randrange(2)) for _ in range(10)])
        if not F:
            continue
        if is_smooth(F):
            assert _brute_smooth(F)


def test_equivalence_preserves_determinant_up_to_scalar():
    F4 = field_new(2)
    rng = random.Random(5)
    for _ in range(10):
        A = [[F4.random(rng) for _ in range(3)] for _ in range(3)]
        B = [[F4.random(rng) for _ in range(3)] for _ in range(3)]
        C = [[F4.random(rng) for _ in range(3)] for _ in range(3)]
        sym = lambda X: [[X[min(i, j)][max(i, j)] for j in range(3)] for i in range(3)]
        M = LinearPencil.from_matrices(sym(A), sym(B), sym(C))
        while True:
            S = [[F4.random(rng) for _ in range(3)] for _ in range(3)]
            if linalg.is_invertible(S):
                break
        lam = F4.random_nonzero(rng)
        e = Equivalence(lam, S)
        M2 = apply_equivalence(M, e)
        assert M2.symmetric
        dS = linalg.det(S)
        assert det(M2) == det(M).scale(lam ** 3 * dS * dS)


def test_equivalence_rejects_singular():
    F2 = field_new(1)
    with pytest.raises(ValueError):
        Equivalence(F2.one, [[F2.one, F2.one], [F2.one, F2.one]])


coeff = st.integers(min_value=0, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, min_size=6, max_size=6), st.lists(coeff, min_size=6, max_size=6))
def test_form_arithmetic_is_evaluation_compatible(u, v):
    F4 = field_new(2)
    F = TernaryForm.from_dense(F4, 2, [F4.from_int(x) for x in u])
    G = TernaryForm.from_dense(F4, 2, [F4.from_int(x) for x in v])
    for P in [(F4.one, F4.gen, F4.zero), (F4.gen, F4.gen, F4.one)]:
        assert (F * G)(*P) == F(*P) * G(*P)
        assert (F + G)(*P) == F(*P) + G(*P)


def test_linear_form_and_pencil_lists():
    F2 = field_new(1)
    L = linear_form(F2, 1, 1, 0)
    assert str(L) == "X+Y"
    M = LinearPencil([[L, L], [L, L]])
    assert M.to_lists() == [["X+Y", "X+Y"], ["X+Y", "X+Y"]]
