import pytest
from hypothesis import given, settings, strategies as st

from theta2.funcfield import (LaurentSeries, Place, Poly, PrecisionError, default_precision,
                              expand_at, hensel_lift, is_square_global, is_square_local,
                              monic_irreducibles, places_up_to, ratfunc_field, valuation)


def test_places_up_to_three(K):
    names = [str(v) for v in places_up_to(K, 3)]
    assert names == ["(T)", "(T+1)", "(T^2+T+1)", "(T^3+T+1)", "(T^3+T^2+1)", "inf"]


def test_irreducible_counts(K):
    # number of monic irreducibles of degree n over F_2: 2, 1, 2, 3, 6, 9
    counts = [len(monic_irreducibles(K.base, n)) for n in range(1, 7)]
    assert counts == [2, 1, 2, 3, 6, 9]


def test_global_square_examples(K):
    T = K.T
    assert is_square_global(T * T + 1)[0]
    ok, obstruction = is_square_global(T ** 3 + T)
    assert not ok and obstruction == Poly(K.base, [K.base.one, K.base.one])
    assert not K.is_square(T)
    assert K.sqrt(T ** 4 / (T + 1) ** 2) == T ** 2 / (T + 1)


def test_valuations(K):
    T = K.T
    f = T ** 3 * (T + 1) / (T ** 2 + T + 1)
    p = lambda bits: Place(Poly.from_bits(K.base, bits))
    assert valuation(f, p(0b10)) == 3
    assert valuation(f, p(0b11)) == 1
    assert valuation(f, p(0b111)) == -1
    assert valuation(f, Place()) == -2


def test_expansions(K):
    T = K.T
    one = Place(Poly.from_bits(K.base, 0b11))
    s = expand_at(T, one, 6)
    assert str(s) == "1 + pi + O(pi^6)"
    assert expand_at(T, Place(), 6).valuation == -1


def test_expansion_is_a_ring_map(K, rng):
    for v in places_up_to(K, 2):
        for _ in range(5):
            f, g = K.random_nonzero(rng), K.random_nonzero(rng)
            N = 12
            lhs = expand_at(f * g, v, N)
            rhs = expand_at(f, v, N) * expand_at(g, v, N)
            assert lhs.agrees_with(rhs, lhs.valuation + 8)


@pytest.mark.parametrize("bits", [0b10, 0b11, 0b111, 0b1011])
def test_residue_expansion_of_uniformizer(K, bits):
    p = Poly.from_bits(K.base, bits)
    s = expand_at(K(p), Place(p), 8)
    assert s.valuation == 1


def test_local_square_examples(K):
    T = K.T
    for v in places_up_to(K, 3):
        assert not is_square_local(T, v)
        assert is_square_local((T + 1) ** 2 / T ** 4, v)


def test_local_square_obeys_precision_env(K, monkeypatch):
    monkeypatch.setenv("THETA2_PRECISION", "64")
    assert default_precision() == 64
    monkeypatch.setenv("THETA2_PRECISION", "junk")
    with pytest.raises(ValueError):
        default_precision()


def test_precision_cap(K):
    T = K.T
    big = (T ** 200 + T + 1) / (T ** 90 + 1)
    with pytest.raises(PrecisionError):
        _force_cap(big)


def _force_cap(f):
    from theta2 import funcfield
    old = funcfield.PRECISION_CAP
    funcfield.PRECISION_CAP = 64
    try:
        return funcfield.is_square_local(f, funcfield.Place())
    finally:
        funcfield.PRECISION_CAP = old


def test_hensel_lift_square_root(K):
    # y^2 + y = T has a root in the completion at (T) with y(0) = 0
    v = Place(Poly.from_bits(K.base, 0b10))
    N = 10
    T = expand_at(K.T, v, N)
    one = LaurentSeries.constant(T.field, T.field.one, N)
    y = hensel_lift([T, one, one], T.field.zero, N)
    assert (y * y + y).agrees_with(T, N)


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 12 - 1), st.integers(min_value=1, max_value=2 ** 8 - 1))
def test_local_global_squares(nb, db):
    K = ratfunc_field(1)
    if nb == 0:
        return
    f = K(Poly.from_bits(K.base, nb)) / K(Poly.from_bits(K.base, db))
    glob = K.is_square(f)
    for v in places_up_to(K, 2):
        assert is_square_local(f, v) == glob
    assert K.is_square(f * f)


def test_random_functions_over_gf4(rng):
    K4 = ratfunc_field(2)
    for _ in range(20):
        f = K4.random_nonzero(rng)
        glob = K4.is_square(f)
        for v in places_up_to(K4, 1):
            assert is_square_local(f, v) == glob
