"""Text input for forms, field elements and field names.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

NAME is X, Y, Z (form variables) or a constant of the coefficient field
(``g`` for GF(2^k), ``T`` for F_q(T), indeterminate names for symbolic
fields).  Integers are reduced mod 2 and '-' means '+'.  Division and
negative powers are allowed only on constants.
"""

import re

from .fields import field_new
from .forms import TernaryForm, monomials
from .funcfield import ratfunc_field
from .symbolic import SymbolicField

__all__ = ["ParseError", "parse_form", "parse_element", "parse_field", "field_name"]


class ParseError(ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Poly:
    """Possibly inhomogeneous polynomial in X, Y, Z used during parsing."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {e: c for e, c in terms.items() if c}

    def is_constant(self):
        return all(e == (0, 0, 0) for e in self.terms)

    def constant(self, field):
        return self.terms.get((0, 0, 0), field.zero)


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbols = field.symbols()

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2], self.text)
        self.i += 1
        return tok

    def add(self, a, b):
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out[e] + c if e in out else c
        return _Poly(out)

    def mul(self, a, b):
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return _Poly(out)

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            self.take()
            value = self.add(value, self.term())
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in "*/":
            op = self.take()
            rhs = self.factor()
            if op[0] == "*":
                value = self.mul(value, rhs)
            else:
                if not rhs.is_constant():
                    raise ParseError("division by a non-constant", op[2], self.text)
                c = rhs.constant(self.field)
                if not c:
                    raise ParseError("division by zero", op[2], self.text)
                inv = c.inverse()
                value = _Poly({e: x * inv for e, x in value.terms.items()})
        return value

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            op = self.take()
            neg = False
            if self.peek()[0] == "-":
                self.take()
                neg = True
            n = self.take("int")[1]
            if neg:
                if not base.is_constant():
                    raise ParseError("negative power of a non-constant", op[2], self.text)
                c = base.constant(self.field)
                if not c:
                    raise ParseError("negative power of zero", op[2], self.text)
                return _Poly({(0, 0, 0): c.inverse() ** n})
            result = _Poly({(0, 0, 0): self.field.one})
            for _ in range(n):
                result = self.mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return _Poly({(0, 0, 0): self.field(tok[1])})
        if tok[0] == "name":
            self.take()
            name = tok[1]
            if name in ("X", "Y", "Z"):
                e = tuple(1 if v == name else 0 for v in "XYZ")
                return _Poly({e: self.field.one})
            if name in self.symbols:
                return _Poly({(0, 0, 0): self.symbols[name]})
            raise ParseError(f"unknown symbol {name!r} for {self.field}", tok[2], self.text)
        if tok[0] == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {got}", tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty input", 0, self.text)
        value = self.expr()
        self.take("end")
        return value


def _inhomogeneous(poly):
    degrees = {sum(e) for e in poly.terms}
    if len(degrees) <= 1:
        return None
    by_degree = {}
    for e in poly.terms:
        by_degree.setdefault(sum(e), []).append(e)
    top = max(by_degree, key=lambda d: len(by_degree[d]))
    for d in sorted(by_degree):
        if d != top:
            return by_degree[d][0]
    return None


def parse_form(text, field, degree=None):
    """Parse a homogeneous form; the zero form takes ``degree`` (default 0)."""
    poly = _Parser(text, field).parse()
    bad = _inhomogeneous(poly)
    if bad is not None:
        from .forms import _mono_str
        raise ParseError(f"inhomogeneous input: offending monomial {_mono_str(bad) or '1'}", None, text)
    if not poly.terms:
        return TernaryForm(field, degree or 0)
    d = sum(next(iter(poly.terms)))
    if degree is not None and d != degree:
        raise ParseError(f"expected a form of degree {degree}, got degree {d}", None, text)
    return TernaryForm(field, d, poly.terms)


def parse_element(text, field):
    """Parse a constant of ``field``, e.g. ``g^2+1`` or ``(T^2+1)/(T^3+T+1)``."""
    poly = _Parser(text, field).parse()
    if not poly.is_constant():
        raise ParseError("expected a field element, found form variables", None, text)
    return poly.constant(field)


_GF = re.compile(r"^gf(?:(\d+)|\(2\^(\d+)\))$")


def parse_field(name):
    """Field from its name: gf2, gf4, gf8, gf(2^k), ratfunc(<finite field>), sym(a,b,...)."""
    s = name.strip().replace(" ", "").lower() if not name.strip().startswith("sym") else name.strip()
    m = _GF.match(s)
    if m:
        if m.group(1) is not None:
            q = int(m.group(1))
            k = q.bit_length() - 1
            if q < 2 or q != 1 << k:
                raise ParseError(f"field size {q} is not a power of two", None, name)
        else:
            k = int(m.group(2))
        try:
            return field_new(k)
        except ValueError as exc:
            raise ParseError(str(exc), None, name) from None
    if s.startswith("ratfunc(") and s.endswith(")"):
        base = parse_field(s[len("ratfunc("):-1])
        if not hasattr(base, "k"):
            raise ParseError("ratfunc needs a finite base field", None, name)
        return ratfunc_field(base.k)
    if s.startswith("sym(") and s.endswith(")"):
        names = [n.strip() for n in s[4:-1].split(",") if n.strip()]
        if not names:
            raise ParseError("sym() needs at least one indeterminate", None, name)
        try:
            return SymbolicField(names)
        except ValueError as exc:
            raise ParseError(str(exc), None, name) from None
    raise ParseError(f"unknown field name {name!r}", None, name)


def field_name(field):
    """Inverse of :func:`parse_field` for the supported fields."""
    return str(field)
