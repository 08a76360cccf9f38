"""The rational function field F_q(T), q = 2^k, its places and completions.

Completions are modelled by truncated Laurent series in a uniformizer:
``p(T)`` at a finite place, ``1/T`` at infinity.  The coefficient field of
the completion at a place of degree e is GF(q^e); the image of T is found by
Hensel-lifting a root of p, so every expansion is a genuine field embedding
to the stated precision.
"""

import os
import random as _random
from dataclasses import dataclass
from functools import lru_cache

from .fields import GaloisElem, embedding, enumerate_field, field_new

__all__ = [
    "Poly",
    "RatFunc",
    "RationalFunctionField",
    "ratfunc_field",
    "Place",
    "places_up_to",
    "monic_irreducibles",
    "LaurentSeries",
    "expand_at",
    "valuation",
    "is_square_global",
    "is_square_local",
    "hensel_lift",
    "HenselError",
    "PrecisionError",
    "default_precision",
    "PRECISION_CAP",
]

DEFAULT_PRECISION = 32
PRECISION_CAP = 256


def default_precision():
    """Laurent precision, overridable through ``THETA2_PRECISION``."""
    value = os.environ.get("THETA2_PRECISION")
    if value:
        n = int(value)
        if n < 1:
            raise ValueError("THETA2_PRECISION must be positive")
        return n
    return DEFAULT_PRECISION


class HenselError(ArithmeticError):
    """Newton lifting impossible: the derivative at the residue root is not a unit."""


class PrecisionError(ArithmeticError):
    """The precision cap was reached before the answer was determined."""


# ---------------------------------------------------------------------------
# univariate polynomials over GF(2^k)


class Poly:
    """Polynomial in T over a GaloisField, coefficients stored low to high."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = [field(x) if isinstance(x, int) else x for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_bits(cls, field, bits):
        """F_2 polynomial from an int bit vector (bit i = coefficient of T^i)."""
        return cls(field, [bits >> i & 1 for i in range(bits.bit_length())])

    @classmethod
    def monomial(cls, field, n, c=None):
        return cls(field, [field.zero] * n + [field.one if c is None else c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly(self.field, [other])
        return NotImplemented

    def __hash__(self):
        return hash(tuple(x.value for x in self.coeffs))

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, GaloisElem)):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(self.field, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result, base = Poly(self.field, [1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lc = other.lc().inverse()
        quot = [self.field.zero] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                factor = c * inv_lc
                quot[i - dq] = factor
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] = rem[i - dq + j] + factor * y
        return Poly(self.field, quot), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return Poly(self.field, [x * inv for x in self.coeffs])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc if acc is not None else self.field.zero

    def map_coeffs(self, fn):
        return [fn(c) for c in self.coeffs]

    def derivative(self):
        return Poly(self.field, [c if i & 1 else self.field.zero for i, c in enumerate(self.coeffs)][1:])

    def is_irreducible(self):
        """Ben-Or test: no factor of degree i divides T^(q^i) - T for i <= n/2."""
        n = self.degree
        if n < 1:
            return False
        if n == 1:
            return True
        T = Poly(self.field, [0, 1])
        x = T
        for _ in range(n // 2):
            for _ in range(self.field.k):
                x = (x * x) % self
            if gcd(self, x - T).degree > 0:
                return False
        return True

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _poly_str(self.coeffs, "T")


def _poly_str(coeffs, var):
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if not mono:
            terms.append(cs)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"({cs})*{mono}" if "+" in cs else f"{cs}*{mono}")
    return "+".join(terms)


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


def _multiplicity(f, p):
    n = 0
    while f:
        q, r = divmod(f, p)
        if r:
            break
        f, n = q, n + 1
    return n, f


def _even_odd_split(poly):
    """(A, B) with poly = A^2 + T*B^2, using square roots of the coefficients."""
    f = poly.field
    even = [c.sqrt() for c in poly.coeffs[0::2]]
    odd = [c.sqrt() for c in poly.coeffs[1::2]]
    return Poly(f, even), Poly(f, odd)


# ---------------------------------------------------------------------------
# the global field


class RatFunc:
    """Reduced fraction num/den with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, _reduced=False):
        base = field.base
        if den is None:
            den = Poly(base, [1])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc()
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        try:
            return self.field(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.field, self.num + o.num, self.den)
        return RatFunc(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.field, self.den, self.num)

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
        return RatFunc(self.field, self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = str(self.num)
        if self.den.degree == 0:
            return n
        if "+" in n:
            n = f"({n})"
        d = str(self.den)
        if "+" in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"


class RationalFunctionField:
    """K = F_q(T) over a base GaloisField (default F_2)."""

    characteristic = 2

    def __init__(self, base):
        self.base = base
        self.zero = RatFunc(self, Poly(base), _reduced=True)
        self.one = RatFunc(self, Poly(base, [1]), _reduced=True)
        self.T = RatFunc(self, Poly(base, [0, 1]), _reduced=True)

    def __repr__(self):
        return f"RationalFunctionField({self.base!r})"

    def __str__(self):
        return f"ratfunc({self.base})"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base == self.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def __reduce__(self):
        return (ratfunc_field, (self.base.k,))

    def __call__(self, value, den=None):
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, int):
            return self.one if value & 1 else self.zero
        if isinstance(value, GaloisElem):
            return RatFunc(self, Poly(self.base, [value]), _reduced=True)
        if isinstance(value, Poly):
            if den is None:
                return RatFunc(self, value, _reduced=True)
            return RatFunc(self, value, den)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def poly(self, coeffs):
        return Poly(self.base, coeffs)

    def symbols(self):
        syms = {"T": self.T}
        if self.base.k > 1:
            syms["g"] = self(self.base.gen)
        return syms

    def square_split(self, f):
        """(A, B) in K with f = A^2 + T*B^2."""
        A, B = _even_odd_split(f.num * f.den)
        return RatFunc(self, A, f.den), RatFunc(self, B, f.den)

    def is_square(self, f):
        return is_square_global(f)[0]

    def sqrt(self, f):
        ok, w = is_square_global(f)
        if not ok:
            raise ValueError(f"{f} is not a square in {self}")
        return w

    def sqrt_in_extension(self, p, t):
        """(r0, r1) with (r0 + r1*s)^2 = p where s^2 = t, t a non-square."""
        P0, P1 = self.square_split(p)
        t0, t1 = self.square_split(t)
        r1 = P1 / t1
        return P0 + r1 * t0, r1

    def random_poly(self, max_degree, rng=_random):
        return Poly(self.base, [self.base.random(rng) for _ in range(max_degree + 1)])

    def random(self, rng=_random, max_degree=3):
        num = self.random_poly(max_degree, rng)
        den = self.random_poly(max_degree, rng)
        while not den:
            den = self.random_poly(max_degree, rng)
        return RatFunc(self, num, den)

    def random_nonzero(self, rng=_random, max_degree=3):
        while True:
            f = self.random(rng, max_degree)
            if f:
                return f


@lru_cache(maxsize=None)
def ratfunc_field(k=1):
    """F_{2^k}(T); k = 1 gives F_2(T)."""
    return RationalFunctionField(field_new(k))


def is_square_global(f):
    """Global squareness via f*den^2 = num*den = A^2 + T*B^2.

    Returns ``(True, sqrt(f))`` or ``(False, B)``, B being the nonzero
    obstruction.  Zero counts as a square with root zero.
    """
    K = f.field
    if not f:
        return True, K.zero
    A, B = _even_odd_split(f.num * f.den)
    if B:
        return False, RatFunc(K, B, _reduced=True)
    return True, RatFunc(K, A, f.den)


# ---------------------------------------------------------------------------
# places


@dataclass(frozen=True)
class Place:
    """A finite place (monic irreducible ``poly``) or the infinite place (poly None)."""

    poly: Poly = None

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    def __str__(self):
        return "inf" if self.poly is None else f"({self.poly})"

    @property
    def residue_field(self):
        return _residue_data(self)[0]


def monic_irreducibles(base, n):
    """All monic irreducible polynomials of degree n over ``base``, in integer order."""
    out = []
    q = base.order
    for idx in range(q ** n):
        coeffs, x = [], idx
        for _ in range(n):
            coeffs.append(base.from_int(x % q))
            x //= q
        p = Poly(base, coeffs + [base.one])
        if p.is_irreducible():
            out.append(p)
    return out


def places_up_to(K, bound):
    """Finite places of degree <= bound (by degree, then integer order) and infinity."""
    if bound < 1:
        raise ValueError("degree bound must be at least 1")
    out = []
    for n in range(1, bound + 1):
        out.extend(Place(p) for p in monic_irreducibles(K.base, n))
    out.append(Place(None))
    return out


def valuation(f, place):
    """v(f); raises ValueError for f = 0."""
    if not f:
        raise ValueError("valuation of zero")
    if place.is_infinite:
        return f.den.degree - f.num.degree
    return _multiplicity(f.num, place.poly)[0] - _multiplicity(f.den, place.poly)[0]


@lru_cache(maxsize=None)
def _residue_data(place):
    """(residue field, base embedding, image of T in the residue field)."""
    if place.is_infinite:
        raise ValueError("the infinite place has the base field as residue field")
    p = place.poly
    base = p.field
    k = base.k * p.degree
    res = field_new(k)
    emb = embedding(base, res)
    pc = p.map_coeffs(emb)
    for r in enumerate_field(res):
        acc = res.zero
        for c in reversed(pc):
            acc = acc * r + c
        if not acc:
            return res, emb, r
    raise AssertionError(f"no root of {p} in {res!r}")


@lru_cache(maxsize=None)
def _t_series(place, prec):
    """T as a power series in pi = p(T): the Hensel lift of p(Y) = pi."""
    res, emb, theta = _residue_data(place)
    pc = [LaurentSeries.constant(res, c, prec) for c in place.poly.map_coeffs(emb)]
    pc[0] = pc[0] + LaurentSeries(res, 1, [res.one], prec - 1)
    return hensel_lift(pc, theta, prec)


# ---------------------------------------------------------------------------
# truncated Laurent series


class LaurentSeries:
    """sum_i coeffs[i] * pi^(offset + i), known modulo pi^(offset + len(coeffs)).

    Leading zeros are stripped on construction; a series with no stored
    coefficients is zero to its precision ``offset``.
    """

    __slots__ = ("field", "offset", "coeffs")

    def __init__(self, field, offset, coeffs, n=None):
        c = list(coeffs)
        if n is not None:
            c = (c + [field.zero] * n)[:n]
        i = 0
        while i < len(c) and not c[i]:
            i += 1
        self.field = field
        self.offset = offset + i
        self.coeffs = tuple(c[i:])

    @classmethod
    def constant(cls, field, c, prec):
        """The exact constant c known to absolute precision ``prec``."""
        return cls(field, 0, [c], max(prec, 0)) if prec > 0 else cls(field, prec, [])

    @property
    def precision(self):
        """Absolute precision: the value is known modulo pi^precision."""
        return self.offset + len(self.coeffs)

    @property
    def valuation(self):
        if not self.coeffs:
            raise PrecisionError("valuation undetermined: series is zero to its precision")
        return self.offset

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, e):
        """Coefficient of pi^e (absolute exponent)."""
        if e >= self.precision:
            raise PrecisionError(f"coefficient of pi^{e} beyond precision {self.precision}")
        if e < self.offset:
            return self.field.zero
        return self.coeffs[e - self.offset]

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, int):
            other = self.field(other)
        if isinstance(other, GaloisElem):
            return LaurentSeries.constant(self.field, other, max(self.precision, 1))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prec = min(self.precision, o.precision)
        lo = min(self.offset, o.offset, prec)
        out = [self.field.zero] * (prec - lo)
        for s in (self, o):
            for i, c in enumerate(s.coeffs):
                e = s.offset + i
                if e < prec:
                    out[e - lo] = out[e - lo] + c
        return LaurentSeries(self.field, lo, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        off = self.offset + o.offset
        if not self.coeffs or not o.coeffs:
            # zero to precision P times valuation w is zero to precision P + w
            return LaurentSeries(self.field, off, [])
        n = min(len(self.coeffs), len(o.coeffs))
        zero = self.field.zero
        out = [zero] * n
        a, b = self.coeffs, o.coeffs
        for i in range(n):
            x = a[i]
            if x:
                for j in range(n - i):
                    y = b[j]
                    if y:
                        out[i + j] = out[i + j] + x * y
        return LaurentSeries(self.field, off, out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        a = self.coeffs
        n = len(a)
        inv0 = a[0].inverse()
        out = [inv0]
        for m in range(1, n):
            acc = self.field.zero
            for i in range(1, m + 1):
                if a[i]:
                    acc = acc + a[i] * out[m - i]
            out.append(acc * inv0)
        return LaurentSeries(self.field, -self.offset, out)

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
        result = LaurentSeries.constant(self.field, self.field.one, max(len(self.coeffs), 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate(self, prec):
        """Drop terms at absolute exponents >= prec."""
        keep = max(0, min(len(self.coeffs), prec - self.offset))
        return LaurentSeries(self.field, self.offset, self.coeffs[:keep])

    def agrees_with(self, other, prec=None):
        """Equality modulo pi^prec (default: the common precision)."""
        d = self - other
        target = d.precision if prec is None else prec
        return not d.coeffs or d.offset >= target

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.offset + i
                mono = "1" if e == 0 else ("pi" if e == 1 else f"pi^{e}")
                cs = str(c)
                if e == 0:
                    terms.append(cs)
                elif c == 1:
                    terms.append(mono)
                else:
                    terms.append(f"({cs})*{mono}")
        terms.append(f"O(pi^{self.precision})")
        return " + ".join(terms)


def _series_of_poly_at(poly, place, prec, residue, emb):
    if place.is_infinite:
        raise AssertionError
    t = _t_series(place, prec)
    acc = LaurentSeries(residue, prec, [])
    for c in reversed(poly.coeffs):
        acc = acc * t + LaurentSeries.constant(residue, emb(c), prec)
    return acc


def expand_at(f, place, N=None):
    """Expansion of f in K_v with N significant terms, offset v(f).

    The zero function returns the zero series to absolute precision N.
    """
    N = default_precision() if N is None else N
    if N < 1:
        raise ValueError("precision must be positive")
    if place.is_infinite:
        base = f.field.base
        if not f:
            return LaurentSeries(base, N, [])
        n, m = f.num.degree, f.den.degree
        num = LaurentSeries(base, 0, list(reversed(f.num.coeffs)), N)
        den = LaurentSeries(base, 0, list(reversed(f.den.coeffs)), N)
        q = num / den
        return LaurentSeries(base, q.offset + m - n, q.coeffs)
    residue, emb, _ = _residue_data(place)
    if not f:
        return LaurentSeries(residue, N, [])
    a, n1 = _multiplicity(f.num, place.poly)
    b, d1 = _multiplicity(f.den, place.poly)
    num = _series_of_poly_at(n1, place, N, residue, emb)
    den = _series_of_poly_at(d1, place, N, residue, emb)
    q = num / den
    return LaurentSeries(residue, q.offset + a - b, q.coeffs)


def _precision_needed(f):
    # f = n/d is a square iff n*d is; the first odd exponent of n*d, when
    # there is one, sits at most deg(n*d) + 1 terms past its valuation
    return f.num.degree + f.den.degree + 2


def is_square_local(f, place, N=None):
    """Squareness of f in the completion K_v, read off its expansion.

    Squares in k((pi)) with k perfect are exactly the series with no odd
    exponents.  The working precision starts at N and doubles until it
    covers the degree bound for the first odd term; past PRECISION_CAP a
    PrecisionError is raised.
    """
    if not f:
        return True
    N = default_precision() if N is None else N
    need = _precision_needed(f)
    while N < need:
        N *= 2
        if N > PRECISION_CAP:
            raise PrecisionError(f"squareness of {f} at {place} needs more than {PRECISION_CAP} terms")
    s = expand_at(f, place, N)
    return all(not c for i, c in enumerate(s.coeffs) if (s.offset + i) & 1)


def hensel_lift(coeffs, root, N):
    """Newton-lift a simple residue root of sum coeffs[i] * y^i to precision N.

    ``coeffs`` are LaurentSeries of non-negative valuation (their precision
    must be at least N); ``root`` is a residue-field element.  The returned
    series y satisfies F(y) = 0 mod pi^N.
    """
    if not coeffs:
        raise ValueError("empty polynomial")
    res = root.field
    deriv = [coeffs[i] if i & 1 else LaurentSeries(res, N, []) for i in range(1, len(coeffs))]

    def horner(cs, y):
        acc = LaurentSeries(res, N, [])
        for c in reversed(cs):
            acc = acc * y + c
        return acc

    y = LaurentSeries.constant(res, root, N)
    value = horner(coeffs, y)
    if value.coeffs and value.offset <= 0:
        raise HenselError(f"{root} is not a root of the residual polynomial")
    d = horner(deriv, y) if deriv else LaurentSeries(res, N, [])
    if not d.coeffs or d.offset > 0:
        raise HenselError("derivative at the residue root is not a unit")
    prec = 1
    while prec < N:
        prec *= 2
        value = horner(coeffs, y)
        d = horner(deriv, y)
        y = (y - value / d).truncate(N)
        y = LaurentSeries(res, y.offset, y.coeffs, N - y.offset)
    residual = horner(coeffs, y)
    if residual.coeffs and residual.offset < N:
        raise AssertionError("Newton iteration failed to converge")
    return y
