"""Exact coefficients, monomial orders and sparse multivariate polynomials.

A :class:`LaurentRing` stands for k[t1^+-1, ..., tN^+-1], but polynomials
only ever carry non-negative exponents.  Laurent behaviour is recovered by
saturating ideals at t1*...*tN (see :mod:`torusjump.groebner`), so every
locus computed downstream lives on the torus.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (DomainError, ExactDivisionError, NotATorusPoint, ParseError,
                     RingMismatchError)
from .galois import GaloisField, GFElement, is_prime

PRIME_BOUND = 2 ** 31


# ---------------------------------------------------------------- coefficients

@dataclass(frozen=True)
class CoefficientDomain:
    """One of QQ, ZZ or F_p (p prime, p < 2^31)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("QQ", "ZZ", "Fp"):
            raise ValueError(f"unknown coefficient domain {self.kind!r}")
        if self.kind == "Fp":
            if not isinstance(self.p, int) or not 2 <= self.p < PRIME_BOUND or not is_prime(self.p):
                raise ValueError(f"F_p needs a prime p < 2^31, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no modulus")

    @property
    def is_field(self) -> bool:
        return self.kind != "ZZ"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __str__(self):
        return f"F{self.p}" if self.kind == "Fp" else self.kind

    def __repr__(self):
        return f"Fp({self.p})" if self.kind == "Fp" else self.kind

    # -- element handling
    def convert(self, x):
        """Canonical representative: int or Fraction for QQ, int for ZZ, 0 <= int < p for F_p."""
        if isinstance(x, GFElement):
            if self.kind == "Fp" and x.field.p == self.p and x.field.r == 1:
                return x.coeffs[0]
            raise DomainError(f"cannot use {x!r} as a coefficient in {self}")
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise DomainError(f"cannot use {x!r} as a coefficient in {self}")
        if self.kind == "Fp":
            if isinstance(x, Fraction):
                den = x.denominator % self.p
                if den == 0:
                    raise DomainError(f"denominator of {x} vanishes in {self}")
                return x.numerator * pow(den, -1, self.p) % self.p
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return int(x.numerator)
            if self.kind == "ZZ":
                raise DomainError(f"{x} is not an integer")
        return x

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Fp":
            return pow(a, -1, self.p)
        if self.kind == "QQ":
            r = Fraction(1) / a
            return int(r) if r.denominator == 1 else r
        if a in (1, -1):
            return a
        raise ExactDivisionError(f"{a} is not a unit in ZZ")

    def div(self, a, b):
        return self.mul(a, self.inv(b)) if self.kind != "QQ" else _qq(Fraction(a) / b)

    def symmetric(self, c):
        """Smallest-magnitude integer representative (used for printing)."""
        if self.kind == "Fp" and c > self.p // 2:
            return c - self.p
        return c

    def to_json(self):
        return {"Fp": self.p} if self.kind == "Fp" else self.kind

    @classmethod
    def from_json(cls, obj) -> "CoefficientDomain":
        if obj in ("QQ", "ZZ"):
            return cls(obj)
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            return cls("Fp", obj["Fp"])
        raise ValueError(f"bad coefficient domain {obj!r}")

    @classmethod
    def parse(cls, text: str) -> "CoefficientDomain":
        """Parse the CLI selector ``qq`` / ``zz`` / ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("qq", "q"):
            return QQ
        if t in ("zz", "z"):
            return ZZ
        if t.startswith("fp:") or t.startswith("f:"):
            return Fp(int(t.split(":", 1)[1]))
        raise ValueError(f"bad coefficient selector {text!r} (use qq, zz or fp:<p>)")


def _qq(x: Fraction):
    return int(x.numerator) if x.denominator == 1 else x


QQ = CoefficientDomain("QQ")
ZZ = CoefficientDomain("ZZ")


@lru_cache(maxsize=None)
def Fp(p: int) -> CoefficientDomain:
    return CoefficientDomain("Fp", p)


# ---------------------------------------------------------------- rings, orders

@dataclass(frozen=True)
class LaurentRing:
    num_vars: int
    coeff: CoefficientDomain
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a Laurent ring needs at least one variable")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"t{i + 1}" for i in range(self.num_vars)))
        elif len(self.names) != self.num_vars:
            raise ValueError("one name per variable")

    def __str__(self):
        return f"{self.coeff}[{', '.join(n + '^+-1' for n in self.names)}]"

    def with_coeff(self, coeff: CoefficientDomain) -> "LaurentRing":
        return LaurentRing(self.num_vars, coeff, self.names)

    def extend(self, k: int, prefix: str = "y") -> "LaurentRing":
        """Ring with k extra variables placed *before* the current ones."""
        extra = tuple(f"{prefix}{i + 1}" if k > 1 else prefix for i in range(k))
        return LaurentRing(self.num_vars + k, self.coeff, extra + self.names)

    def concat(self, other: "LaurentRing") -> "LaurentRing":
        if self.coeff != other.coeff:
            raise RingMismatchError(f"coefficient mismatch: {self.coeff} vs {other.coeff}")
        n = self.num_vars + other.num_vars
        return LaurentRing(n, self.coeff)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: 1})

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: c})

    def var(self, i: int) -> "Polynomial":
        """The variable t_{i+1} (0-based index)."""
        e = [0] * self.num_vars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.num_vars)]

    def monomial(self, exps, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): c})

    def torus_product(self) -> "Polynomial":
        """t1 * t2 * ... * tN, the element whose inversion defines the torus."""
        return self.monomial((1,) * self.num_vars)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


def _degrevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex``, ``lex`` or ``elim`` (block order eliminating the first ``block_size`` variables)."""

    kind: str = "degrevlex"
    block_size: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if (self.kind == "elim") != (self.block_size > 0):
            raise ValueError("block_size > 0 exactly for elimination orders")

    @property
    def key(self):
        return _key_function(self.kind, self.block_size)

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@lru_cache(maxsize=None)
def _key_function(kind, block):
    if kind == "degrevlex":
        f = _degrevlex_key
    elif kind == "lex":
        def f(m):
            return m
    else:
        def f(m):
            return _degrevlex_key(m[:block]) + _degrevlex_key(m[block:])
    return lru_cache(maxsize=1 << 16)(f)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def Elimination(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


# ---------------------------------------------------------------- polynomials

class Polynomial:
    """Immutable sparse polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms=None, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        K = ring.coeff
        out = {}
        n = ring.num_vars
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, ring has {n} variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponents are not representable; "
                                 "multiply by a monomial (loci are saturated at t1*...*tN)")
            c = K.convert(c)
            if exps in out:
                c = K.add(out[exps], c)
            if c == 0:
                out.pop(exps, None)
            else:
                out[exps] = c
        self.terms = out

    # -- construction helpers
    @classmethod
    def _make(cls, ring, terms):
        return cls(ring, terms, _trusted=True)

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    # -- predicates / accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.num_vars, 0)

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        key = order.key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder = DEGREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        K = self.ring.coeff
        if not K.is_field:
            raise DomainError("monic normalisation needs field coefficients")
        inv = K.inv(self.leading_coeff(order))
        return self.scale(inv)

    def primitive(self) -> "Polynomial":
        """Integer-content-free, positive-leading representative (QQ/ZZ); monic over F_p."""
        if not self.terms:
            return self
        K = self.ring.coeff
        if K.kind == "Fp":
            return self.monic()
        from math import gcd, lcm
        den = 1
        for c in self.terms.values():
            den = lcm(den, Fraction(c).denominator)
        nums = [int(Fraction(c) * den) for c in self.terms.values()]
        g = 0
        for x in nums:
            g = gcd(g, x)
        lead = self.leading_coeff()
        sign = -1 if lead < 0 else 1
        return self.scale(Fraction(den * sign, g))

    # -- arithmetic
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        K = self.ring.coeff
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = K.add(out.get(m, 0), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.coeff
        return Polynomial._make(self.ring, {m: K.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        K = self.ring.coeff
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = K.add(out.get(m, 0), K.mul(c1, c2))
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = self.ring.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        K = self.ring.coeff
        c = K.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._make(self.ring, {m: K.mul(v, c) for m, v in self.terms.items()})

    def mul_monomial(self, exps, c=1) -> "Polynomial":
        K = self.ring.coeff
        c = K.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._make(self.ring, {tuple(a + b for a, b in zip(m, exps)): K.mul(v, c)
                                            for m, v in self.terms.items()})

    def divide_by_monomial(self, exps) -> "Polynomial":
        """Exact division by t^exps; raises if some term is not divisible."""
        out = {}
        for m, c in self.terms.items():
            q = tuple(a - b for a, b in zip(m, exps))
            if any(e < 0 for e in q):
                raise ExactDivisionError(f"{self} is not divisible by the monomial {exps}")
            out[q] = c
        return Polynomial._make(self.ring, out)

    def exact_divide(self, other: "Polynomial") -> "Polynomial":
        """Quotient q with self == q * other, or ExactDivisionError."""
        other = self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        K = self.ring.coeff
        key = DEGREVLEX.key
        lm = max(other.terms, key=key)
        lc = other.terms[lm]
        rest = [(m, c) for m, c in other.terms.items() if m != lm]
        r = dict(self.terms)
        q = {}
        while r:
            m = max(r, key=key)
            c = r.pop(m)
            d = tuple(a - b for a, b in zip(m, lm))
            if any(e < 0 for e in d):
                raise ExactDivisionError(f"{other} does not divide {self}")
            if K.kind == "ZZ":
                if c % lc:
                    raise ExactDivisionError(f"{other} does not divide {self} over ZZ")
                f = c // lc
            else:
                f = K.div(c, lc)
            q[d] = f
            for gm, gc in rest:
                mm = tuple(a + b for a, b in zip(gm, d))
                v = K.sub(r.get(mm, 0), K.mul(f, gc))
                if v == 0:
                    r.pop(mm, None)
                else:
                    r[mm] = v
        return Polynomial._make(self.ring, q)

    # -- ring changes
    def change_ring(self, ring: LaurentRing, offset: int = 0) -> "Polynomial":
        """Re-express in ``ring`` with variable i moved to i + offset (same coefficients)."""
        if ring.coeff != self.ring.coeff:
            raise RingMismatchError("use reduce_coefficients to change coefficients")
        n, N = self.ring.num_vars, ring.num_vars
        out = {}
        for m, c in self.terms.items():
            if offset >= 0:
                if offset + n > N and any(m[N - offset:]):
                    raise ValueError("polynomial uses variables absent from the target ring")
                mm = (0,) * offset + m[: N - offset] + (0,) * max(0, N - offset - n)
            else:
                if any(m[: -offset]):
                    raise ValueError("polynomial uses the variables being dropped")
                mm = m[-offset:][:N]
                mm = mm + (0,) * (N - len(mm))
            out[mm] = c
        return Polynomial._make(ring, out)

    def scale_variables(self, factors) -> "Polynomial":
        """Substitute t_i -> factors[i] * t_i (twisting by a rank-one local system)."""
        K = self.ring.coeff
        fs = [K.convert(f) for f in factors]
        if len(fs) != self.ring.num_vars:
            raise ValueError("one factor per variable")
        if any(f == 0 for f in fs):
            raise NotATorusPoint("twist factors must be nonzero")
        out = {}
        for m, c in self.terms.items():
            v = c
            for f, e in zip(fs, m):
                if e:
                    v = K.mul(v, _power(K, f, e))
            out[m] = v
        return Polynomial(self.ring, out)

    def evaluate(self, point):
        return evaluate(self, point)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ring.coeff!r})"


def _power(K, f, e):
    if K.kind == "Fp":
        return pow(f, e, K.p)
    return f ** e


# ---------------------------------------------------------------- evaluation

def _coerce_point(ring: LaurentRing, point):
    point = list(point)
    if len(point) != ring.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, ring has {ring.num_vars} variables")
    K = ring.coeff
    out = []
    if K.kind == "Fp":
        base = GaloisField(K.p, 1)
        for x in point:
            if isinstance(x, GFElement):
                if x.field.p != K.p:
                    raise DomainError(f"point coordinate {x} lives in characteristic {x.field.p}, not {K.p}")
            else:
                if isinstance(x, str):
                    x = Fraction(x)
                x = base.from_int(x)
            out.append(x)
        fields_ = {x.field for x in out}
        if len(fields_) > 1:
            raise DomainError("point coordinates live in different extension fields")
    else:
        for x in point:
            if isinstance(x, str):
                x = Fraction(x)
            if isinstance(x, GFElement) or isinstance(x, bool) or not isinstance(x, (int, Fraction)):
                raise DomainError(f"point coordinate {x!r} is not a rational number")
            out.append(_qq(Fraction(x)) if K.kind == "QQ" else x)
    for i, x in enumerate(out):
        if not x:
            raise NotATorusPoint(f"coordinate {i + 1} is zero: not a point of the torus")
    return out


def evaluate(p: Polynomial, point):
    """Exact value of p at a torus point (coordinates in k or, for F_p, in some F_{p^r})."""
    xs = _coerce_point(p.ring, point)
    K = p.ring.coeff
    if K.kind == "Fp":
        zero = xs[0].field.zero()
    else:
        zero = 0
    total = zero
    powers = [dict() for _ in xs]
    for m, c in p.terms.items():
        v = c
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                if e not in cache:
                    cache[e] = xs[i] ** e
                v = cache[e] * v
        total = total + v
    if K.kind == "Fp":
        return xs[0].field(total) if not isinstance(total, GFElement) else total
    return _qq(Fraction(total)) if K.kind == "QQ" else total


def reduce_coefficients(p: Polynomial, target: CoefficientDomain) -> Polynomial:
    """Image of p under ZZ -> k (also QQ -> F_p when denominators are units)."""
    src = p.ring.coeff
    if src == target:
        return p
    if src.kind == "Fp":
        raise DomainError(f"cannot reduce {src} coefficients to {target}")
    if src.kind == "QQ" and target.kind == "ZZ":
        raise DomainError("cannot reduce QQ coefficients to ZZ")
    return Polynomial(p.ring.with_coeff(target), p.terms)


# ---------------------------------------------------------------- text syntax

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*\*)|(.))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, caret, other = m.groups()
        if num is not None:
            out.append(("num", int(num), m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        elif caret is not None:
            out.append(("^", caret, m.start(3)))
        elif other is not None:
            if other not in "+-*/()":
                raise ParseError(f"unexpected character {other!r} at offset {m.start(4)} in {text!r}")
            out.append((other, other, m.start(4)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}", tok[2])
        self.i += 1
        return tok

    def fail(self, msg, offset=None):
        if offset is None:
            offset = self.toks[self.i][2]
        raise ParseError(f"{msg} at offset {offset} in {self.text!r}")

    def parse(self):
        if self.peek() == "end":
            self.fail("empty polynomial")
        p = self.expr()
        if self.peek() != "end":
            self.fail(f"unexpected {self.toks[self.i][1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() == "-":
                self.fail("negative exponents are not accepted: Laurent monomials are handled by "
                          "saturating at t1*...*tN, so clear denominators by multiplying the entry "
                          "by a monomial")
            e = self.take("num")[1]
            return base ** e
        return base

    def atom(self):
        kind, val, off = self.take()
        if kind == "num":
            if self.peek() == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    self.fail("division by zero", off)
                if self.ring.coeff.kind == "ZZ" and val % den:
                    self.fail("rational coefficient in a ZZ polynomial", off)
                return self.ring.constant(Fraction(val, den))
            return self.ring.constant(val)
        if kind == "name":
            if val not in self.index:
                self.fail(f"unknown variable {val!r} (ring variables: {', '.join(self.ring.names)})", off)
            return self.ring.var(self.index[val])
        if kind == "(":
            p = self.expr()
            self.take(")")
            return p
        self.fail(f"unexpected {val!r}", off)


def parse_polynomial(text: str, ring: LaurentRing) -> Polynomial:
    """Parse ``"2*t1^2*t2 - t1 + 1/2"``; whitespace-insensitive, parentheses allowed."""
    if not isinstance(text, str):
        raise ParseError(f"polynomial must be a string, got {type(text).__name__}")
    return _Parser(text, ring).parse()


def _format_coeff(K, c):
    c = K.symmetric(c)
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in descending degrevlex order, unit coefficients elided."""
    if not p.terms:
        return "0"
    K = p.ring.coeff
    names = p.ring.names
    pieces = []
    for m, c in p.sorted_terms(DEGREVLEX):
        c = K.symmetric(c)
        neg = c < 0
        a = -c if neg else c
        mon = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
        if not mon:
            body = str(a)
        elif a == 1:
            body = mon
        else:
            body = f"{a}*{mon}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)
