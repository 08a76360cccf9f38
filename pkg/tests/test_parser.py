import pytest

from theta2.fields import field_new
from theta2.funcfield import ratfunc_field
from theta2.parser import ParseError, parse_element, parse_field, parse_form
from theta2.symbolic import SymbolicField


def test_field_names():
    assert parse_field("gf2").order == 2
    assert parse_field("gf4").k == 2
    assert parse_field("gf(2^5)").k == 5
    assert str(parse_field("ratfunc(gf2)")) == "ratfunc(gf2)"
    assert str(parse_field("sym(a,b)")) == "sym(a,b)"


@pytest.mark.parametrize("name", ["gf3", "gf(3^2)", "ratfunc(gf6)", "reals", "sym()"])
def test_bad_field_names(name):
    with pytest.raises(ParseError):
        parse_field(name)


def test_round_trip_forms():
    F = field_new(1)
    text = "X^2*Z+X*Y*Z+Y^3+Y^2*Z+Y*Z^2"
    assert str(parse_form(text, F)) == text


def test_coefficients_over_ratfunc():
    K = ratfunc_field(1)
    F = parse_form("X^2 + X*Y + T*Z^2", K)
    assert F.degree == 2
    assert F.coefficient((0, 0, 2)) == K.T
    G = parse_form("(T+1)^2*X*Z + (1/T)*Y^2", K)
    assert G.coefficient((0, 2, 0)) == K.T.inverse()


def test_integers_reduce_mod_two_and_minus_is_plus():
    F = field_new(1)
    assert parse_form("3*X - Y + 2*Z", F) == parse_form("X+Y", F)


def test_gf4_generator():
    F4 = field_new(2)
    assert parse_element("g^2", F4) == F4.gen + 1


def test_inhomogeneous_names_monomial():
    with pytest.raises(ParseError, match="offending monomial"):
        parse_form("X^2 + Y", field_new(1))


def test_degree_mismatch():
    with pytest.raises(ParseError):
        parse_form("X^3", field_new(1), degree=2)


@pytest.mark.parametrize("text", ["X^", "X + * Y", "(X+Y", "X/Y", "X^-1*Y^2", "W*X"])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_form(text, field_new(1))


def test_symbolic_coefficients():
    S = SymbolicField(["a", "b"])
    F = parse_form("a*X^2 + b*Y*Z", S)
    assert F.coefficient((2, 0, 0)) == S["a"]
