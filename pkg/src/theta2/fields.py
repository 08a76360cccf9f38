"""Exact arithmetic in GF(2^k) and a purely inseparable quadratic extension.

Every coefficient domain in the package (finite fields, rational function
fields, the symbolic field and the extensions below) follows the same
duck-typed protocol, so the polynomial code never needs to know which one
it is working over:

    field.zero, field.one       distinguished elements
    field(n)                    coerce an integer (reduced mod 2)
    field.is_square(x)          exact squareness test
    field.sqrt(x)               square root, ValueError if none exists
    field.symbols()             names the parser may bind to constants

Elements support ``+ - * / **``, ``==``, ``bool`` (nonzero test), mixed
arithmetic with Python ints, and carry a ``.field`` back-reference.
"""

from functools import lru_cache
import random as _random

__all__ = [
    "GaloisField",
    "GaloisElem",
    "InseparableExtension",
    "QuadElem",
    "field_new",
    "enumerate_field",
    "embedding",
    "clmul",
    "poly_mod",
    "is_irreducible_gf2",
    "MODULI",
]

# Least (as an integer bit vector) monic irreducible polynomial of each
# degree over F_2.  Degree 1 is plain F_2 and carries no modulus.
MODULI = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B,
    14: 0x4021, 15: 0x8003, 16: 0x1002B,
}

MAX_DEGREE = 16


def clmul(a, b):
    """Carryless product of two bit-vector polynomials over F_2."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a, m):
    """Remainder of bit-vector polynomial ``a`` modulo ``m``."""
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible_gf2(p):
    """Irreducibility of a bit-vector polynomial over F_2 by trial division."""
    d = p.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if q.bit_length() - 1 <= d // 2 and poly_mod(p, q) == 0:
            return False
    return True


def _bits_to_str(value, var):
    if value == 0:
        return "0"
    terms = []
    for i in range(value.bit_length() - 1, -1, -1):
        if value >> i & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)


class GaloisField:
    """GF(2^k) in polynomial basis; obtain instances through :func:`field_new`."""

    characteristic = 2

    def __init__(self, k, modulus=None):
        if k < 1 or k > MAX_DEGREE:
            raise ValueError(f"extension degree {k} outside 1..{MAX_DEGREE}")
        self.k = k
        self.order = 1 << k
        self.modulus = modulus if k > 1 else None
        self._exp = None
        self._log = None
        self.zero = GaloisElem(self, 0)
        self.one = GaloisElem(self, 1)
        self.gen = GaloisElem(self, 2 if k > 1 else 1)

    def __repr__(self):
        return f"GF(2^{self.k})"

    def __str__(self):
        return "gf2" if self.k == 1 else f"gf(2^{self.k})"

    def __eq__(self, other):
        return isinstance(other, GaloisField) and other.k == self.k and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.k, self.modulus))

    def __reduce__(self):
        return (field_new, (self.k,))

    def __call__(self, value):
        if isinstance(value, GaloisElem):
            if value.field != self:
                raise ValueError(f"cannot coerce {value.field!r} element into {self!r}")
            return value
        if isinstance(value, int):
            return self.one if value & 1 else self.zero
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_int(self, bits):
        """Element whose polynomial-basis coordinates are the bits of ``bits``."""
        if not 0 <= bits < self.order:
            raise ValueError(f"{bits} is not a bit vector of length {self.k}")
        return GaloisElem(self, bits)

    def elements(self):
        return enumerate_field(self)

    def random(self, rng=_random):
        return GaloisElem(self, rng.randrange(self.order))

    def random_nonzero(self, rng=_random):
        return GaloisElem(self, rng.randrange(1, self.order))

    def symbols(self):
        return {"g": self.gen} if self.k > 1 else {}

    def is_square(self, x):
        return True

    def sqrt(self, x):
        return x.sqrt()

    # exp/log tables relative to a primitive element, built on first use
    def _tables(self):
        if self._exp is None:
            n = self.order - 1
            for cand in range(2, self.order) if self.k > 1 else [1]:
                exp = [0] * (2 * n)
                x = 1
                seen_one = False
                for i in range(n):
                    exp[i] = x
                    x = self._slow_mul(x, cand)
                    if x == 1 and i < n - 1:
                        seen_one = True
                        break
                if not seen_one:
                    break
            for i in range(n, 2 * n):
                exp[i] = exp[i - n]
            log = [0] * self.order
            for i in range(n):
                log[exp[i]] = i
            self._exp, self._log = exp, log
        return self._exp, self._log

    def _slow_mul(self, a, b):
        if self.k == 1:
            return a & b
        return poly_mod(clmul(a, b), self.modulus)

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return 1
        exp, log = self._tables()
        return exp[log[a] + log[b]]

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.k == 1:
            return 1
        exp, log = self._tables()
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]


@lru_cache(maxsize=None)
def field_new(k):
    """Return GF(2^k), 1 <= k <= 16, with the least irreducible modulus."""
    if not isinstance(k, int) or k < 1 or k > MAX_DEGREE:
        raise ValueError(f"extension degree must be an integer in 1..{MAX_DEGREE}, got {k!r}")
    return GaloisField(k, MODULI.get(k))


def enumerate_field(field):
    """All elements of ``field`` in integer order of their bit vectors."""
    return [GaloisElem(field, v) for v in range(field.order)]


class GaloisElem:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, GaloisElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other & 1
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return GaloisElem(self.field, self.value ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __pos__(self):
        return self

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return GaloisElem(self.field, self.field._mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self):
        return GaloisElem(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return GaloisElem(self.field, self.field._mul(self.value, self.field._inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return GaloisElem(self.field, self.field._mul(b, self.field._inv(self.value)))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.value == 0:
            return self.field.one if n == 0 else self
        if self.field.k == 1:
            return self
        exp, log = self.field._tables()
        return GaloisElem(self.field, exp[(log[self.value] * n) % (self.field.order - 1)])

    def sqrt(self):
        # Frobenius has order k, so its inverse is squaring k-1 times
        x = self
        for _ in range(self.field.k - 1):
            x = x * x
        return x

    def __eq__(self, other):
        if isinstance(other, GaloisElem):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == (other & 1) if other in (0, 1) else False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.k, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GaloisElem({self.field!r}, {self})"

    def __str__(self):
        return _bits_to_str(self.value, "g")


def embedding(small, big):
    """Field embedding GF(2^a) -> GF(2^b), a | b, sending g to the least root of the modulus."""
    if big.k % small.k:
        raise ValueError(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return lambda x: big.one if x.value else big.zero
    if small == big:
        return lambda x: x
    root = None
    for r in enumerate_field(big):
        acc = big.zero
        for i in range(small.k, -1, -1):
            acc = acc * r + (small.modulus >> i & 1)
        if not acc:
            root = r
            break
    powers = [big.one]
    for _ in range(small.k - 1):
        powers.append(powers[-1] * root)

    def emb(x):
        acc = big.zero
        for i in range(small.k):
            if x.value >> i & 1:
                acc = acc + powers[i]
        return acc

    return emb


class InseparableExtension:
    """The field K(s) with s^2 = t for a non-square t of K.

    In characteristic two the norm form is a square, so
    (p + q s)^-1 = (p + q s) / (p^2 + q^2 t).
    """

    characteristic = 2

    def __init__(self, base, t, name="s"):
        t = base(t) if isinstance(t, int) else t
        if base.is_square(t):
            raise ValueError(f"{t} is a square in {base}; adjoining its root is trivial")
        self.base = base
        self.t = t
        self.name = name
        self.zero = QuadElem(self, base.zero, base.zero)
        self.one = QuadElem(self, base.one, base.zero)
        self.root = QuadElem(self, base.zero, base.one)

    def __repr__(self):
        return f"{self.base}({self.name}), {self.name}^2 = {self.t}"

    def __str__(self):
        return f"{self.base}(sqrt({self.t}))"

    def __call__(self, value):
        if isinstance(value, QuadElem):
            return value
        return QuadElem(self, self.base(value) if isinstance(value, int) else value, self.base.zero)

    def symbols(self):
        syms = dict(self.base.symbols())
        syms[self.name] = self.root
        return syms

    def is_square(self, x):
        # (p' + q' s)^2 = p'^2 + q'^2 t lies in K, so squares have q = 0
        if x.q:
            return False
        if self.base.is_square(x.p):
            return True
        split = getattr(self.base, "sqrt_in_extension", None)
        if split is None:
            raise NotImplementedError(f"squareness in {self} beyond the base field")
        return split(x.p, self.t) is not None

    def sqrt(self, x):
        if x.q:
            raise ValueError(f"{x} is not a square in {self}")
        if self.base.is_square(x.p):
            return self(self.base.sqrt(x.p))
        split = getattr(self.base, "sqrt_in_extension", None)
        if split is None:
            raise NotImplementedError(f"square roots in {self} beyond the base field")
        r = split(x.p, self.t)
        if r is None:
            raise ValueError(f"{x} is not a square in {self}")
        return QuadElem(self, r[0], r[1])


class QuadElem:
    """p + q*s in an :class:`InseparableExtension`."""

    __slots__ = ("field", "p", "q")

    def __init__(self, field, p, q):
        self.field = field
        self.p = p
        self.q = q

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, int):
            return self.field(other)
        try:
            return QuadElem(self.field, self.field.base.zero + other, self.field.base.zero)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.field, self.p + o.p, self.q + o.q)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        t = self.field.t
        return QuadElem(self.field, self.p * o.p + self.q * o.q * t, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def norm(self):
        return self.p * self.p + self.q * self.q * self.field.t

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return QuadElem(self.field, self.p / n, self.q / n)

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
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __repr__(self):
        return f"QuadElem({self})"

    def __str__(self):
        name = self.field.name
        if not self.q:
            return str(self.p)
        qs = name if self.q == 1 else f"({self.q})*{name}"
        return qs if not self.p else f"{self.p}+{qs}"
