"""Fractions of multivariate polynomials over F_2 in named indeterminates.

Used to check the identities behind the constructions with symbolic
coefficients.  A polynomial over F_2 is just a set of exponent vectors
(addition is symmetric difference).  Fractions are not reduced beyond
cancelling common monomial factors; equality is tested by
cross-multiplication, so no multivariate gcd is needed.
"""

__all__ = ["SymbolicField", "SymFrac", "mpoly_mul"]


def mpoly_mul(a, b):
    out = set()
    for x in a:
        for y in b:
            m = tuple(i + j for i, j in zip(x, y))
            if m in out:
                out.remove(m)
            else:
                out.add(m)
    return frozenset(out)


def _content(p):
    return tuple(min(col) for col in zip(*p))


def _shift(p, e):
    return frozenset(tuple(i - j for i, j in zip(m, e)) for m in p)


class SymbolicField:
    """F_2(x_1, ..., x_n)."""

    characteristic = 2

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate indeterminate names")
        for n in names:
            if n in ("X", "Y", "Z"):
                raise ValueError(f"{n} is reserved for the form variables")
        self.names = names
        n = len(names)
        self._unit = (0,) * n
        self.zero = SymFrac(self, frozenset(), frozenset([self._unit]))
        self.one = SymFrac(self, frozenset([self._unit]), frozenset([self._unit]))
        self.gens = {}
        for i, name in enumerate(names):
            e = tuple(1 if j == i else 0 for j in range(n))
            self.gens[name] = SymFrac(self, frozenset([e]), frozenset([self._unit]))

    def __repr__(self):
        return f"SymbolicField({', '.join(self.names)})"

    def __str__(self):
        return f"sym({','.join(self.names)})"

    def __call__(self, value):
        if isinstance(value, SymFrac):
            return value
        if isinstance(value, int):
            return self.one if value & 1 else self.zero
        if isinstance(value, str):
            return self.gens[value]
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def __getitem__(self, name):
        return self.gens[name]

    def symbols(self):
        return dict(self.gens)

    def is_square(self, x):
        return all(e % 2 == 0 for m in mpoly_mul(x.num, x.den) for e in m)

    def sqrt(self, x):
        if not self.is_square(x):
            raise ValueError(f"{x} is not a square in {self}")
        nd = mpoly_mul(x.num, x.den)
        root = frozenset(tuple(e // 2 for e in m) for m in nd)
        return SymFrac(self, root, x.den)


class SymFrac:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            c = tuple(min(a, b) for a, b in zip(_content(num), _content(den)))
            if any(c):
                num, den = _shift(num, c), _shift(den, c)
            if num == den:
                num = den = frozenset([field._unit])
        else:
            den = frozenset([field._unit])
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, SymFrac):
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return SymFrac(self.field, self.num ^ o.num, self.den)
        return SymFrac(self.field, mpoly_mul(self.num, o.den) ^ mpoly_mul(o.num, self.den),
                       mpoly_mul(self.den, o.den))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return SymFrac(self.field, mpoly_mul(self.num, o.num), mpoly_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return SymFrac(self.field, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return mpoly_mul(self.num, o.den) == mpoly_mul(o.num, self.den)

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def _pstr(self, p):
        if not p:
            return "0"
        terms = []
        for m in sorted(p, reverse=True):
            parts = []
            for name, e in zip(self.field.names, m):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            terms.append("*".join(parts) if parts else "1")
        return "+".join(terms)

    def __repr__(self):
        return f"SymFrac({self})"

    def __str__(self):
        n = self._pstr(self.num)
        if self.den == frozenset([self.field._unit]):
            return n
        d = self._pstr(self.den)
        n = f"({n})" if "+" in n else n
        d = f"({d})" if ("+" in d or "*" in d) else d
        return f"{n}/{d}"
