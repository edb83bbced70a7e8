"""Arithmetic in the finite fields F_{p^r} for r <= 4.

Elements are polynomials in a root ``a`` of a fixed monic irreducible
modulus.  The modulus for (p, r) is the first monic irreducible polynomial
of degree r in the ordering by the base-p integer sum(c_i * p^i), so the
table is reproducible for every prime without shipping it as data.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import ParseError, UnsupportedExtension

MAX_EXTENSION_DEGREE = 4


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int, bound: int = 10 ** 6) -> list[int]:
    """Prime factors of |n| found by trial division up to ``bound``.

    A cofactor left above the bound is included only if it is prime.
    """
    n = abs(n)
    out = []
    q = 2
    while q * q <= n and q <= bound:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1 and is_prime(n):
        out.append(n)
    return out


# -- univariate helpers over F_p; polynomials are coefficient lists, low degree first

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result, base = [1], _pmod(list(a), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic f over F_p."""
    r = len(f) - 1
    if r <= 0:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** r, f, p), x, p):
        return False
    for q in prime_factors(r):
        h = _psub(_ppowmod(x, p ** (r // q), f, p), x, p)
        g = _pgcd(f, h, p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def modulus(p: int, r: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree r over F_p (coefficients low first)."""
    if not 1 <= r <= MAX_EXTENSION_DEGREE:
        raise UnsupportedExtension(
            f"extension degree {r} unsupported (1 <= r <= {MAX_EXTENSION_DEGREE})")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r == 1:
        return (0, 1)
    for k in range(p ** r):
        coeffs = []
        n = k
        for _ in range(r):
            coeffs.append(n % p)
            n //= p
        if coeffs[0] == 0:
            continue
        f = coeffs + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GaloisField:
    """The field F_{p^r} presented as F_p[a] / (modulus)."""

    def __init__(self, p: int, r: int = 1):
        self.modulus = modulus(p, r)
        self.p = p
        self.r = r
        self.order = p ** r

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash((GaloisField, self.p, self.r))

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __call__(self, value) -> "GFElement":
        if isinstance(value, GFElement):
            if value.field != self:
                raise ValueError(f"cannot coerce {value!r} into {self!r}")
            return value
        if isinstance(value, (tuple, list)):
            coeffs = list(value)[: self.r]
            return GFElement(self, tuple(c % self.p for c in coeffs) + (0,) * (self.r - len(coeffs)))
        return self.from_int(value)

    def from_int(self, n) -> "GFElement":
        if hasattr(n, "denominator") and n.denominator != 1:
            den = n.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            n = n.numerator * pow(den, -1, self.p)
        return GFElement(self, (int(n) % self.p,) + (0,) * (self.r - 1))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def generator(self):
        """The class of ``a`` (equal to the root of the modulus)."""
        if self.r == 1:
            return self.one()
        return self((0, 1))

    def elements(self):
        for k in range(self.order):
            coeffs = []
            for _ in range(self.r):
                coeffs.append(k % self.p)
                k //= self.p
            yield GFElement(self, tuple(coeffs))

    def nonzero_elements(self):
        return [x for x in self.elements() if x]

    def random_nonzero(self, rng) -> "GFElement":
        while True:
            x = GFElement(self, tuple(rng.randrange(self.p) for _ in range(self.r)))
            if x:
                return x

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(a(?:\^(\d+))?)?")

    def parse(self, text: str) -> "GFElement":
        """Parse ``3 + 2*a + a^2`` style element notation."""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty field element")
        coeffs = [0] * max(self.r, 1)
        pos = 0
        while pos < len(s):
            m = self._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse field element {text!r}")
            sign, digits, var, exp = m.groups()
            if not digits and not var:
                raise ParseError(f"cannot parse field element {text!r}")
            c = int(digits) if digits else 1
            e = (int(exp) if exp else 1) if var else 0
            if sign == "-":
                c = -c
            if e >= self.r:
                raise ParseError(f"power a^{e} must be reduced below the extension degree {self.r}")
            coeffs[e] += c
            pos = m.end()
        return self(coeffs)


class GFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GaloisField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.field.from_int(other)
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.field.r == 1:
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return GFElement(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple(-x % p for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.r == 1:
            return GFElement(f, (self.coeffs[0] * other.coeffs[0] % f.p,))
        prod = _pmulmod(list(self.coeffs), list(other.coeffs), list(f.modulus), f.p)
        return GFElement(f, tuple(prod) + (0,) * (f.r - len(prod)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        f = self.field
        if f.r == 1:
            return GFElement(f, (pow(self.coeffs[0], -1, f.p),))
        return self ** (f.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __repr__(self):
        return f"{self}"

    def __str__(self):
        if self.field.r == 1:
            return str(self.coeffs[0])
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mon = "a" if e == 1 else f"a^{e}"
                parts.append(mon if c == 1 else f"{c}*{mon}")
        return "+".join(parts) if parts else "0"
