"""Checks on jump loci: the propagation package, acyclicity, abelian duality, and the fiber oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .caps import Caps
from .chaincx import FreeComplex, euler_characteristic
from .errors import DomainError
from .galois import GaloisField, GFElement, is_prime, prime_factors
from .groebner import Ideal, dimension, same_variety, variety_containment
from .jumploci import JumpLocusSet, fitting_ideal, jump_loci
from .polymat import determinantal_ideal
from .ring import LEX, QQ, CoefficientDomain, Fp, LaurentRing, Polynomial, evaluate

CAVEAT = "torsion-freeness certified only for the primes tested"
COMPONENTS_NEEDED = "needs component data; use verify_components"
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


def format_value(x) -> str:
    return str(x)


def format_point(point) -> str:
    return "(" + ", ".join(format_value(x) for x in point) + ")"


def point_field(point, coeff: CoefficientDomain) -> str:
    if coeff.kind == "Fp":
        x = point[0]
        if isinstance(x, GFElement) and x.field.r > 1:
            return f"F{x.field.p}^{x.field.r}"
        return f"F{coeff.p}"
    return "QQ"


# ---------------------------------------------------------------- fiber oracle

def _field_rank(rows) -> int:
    """Rank of a matrix over QQ (Fractions) or a finite field (GFElements)."""
    M = [list(r) for r in rows]
    if not M or not M[0]:
        return 0
    nr, nc = len(M), len(M[0])
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nr) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col] if not isinstance(M[r][col], GFElement) else M[r][col].inverse()
        for i in range(r + 1, nr):
            if M[i][col]:
                f = M[i][col] * inv
                for j in range(col, nc):
                    if M[r][j]:
                        M[i][j] = M[i][j] - f * M[r][j]
        r += 1
        if r == nr:
            break
    return r


@dataclass
class FiberBetti:
    point: tuple
    betti: dict
    field: str = "QQ"

    def euler(self) -> int:
        return sum((-1) ** (i % 2) * b for i, b in self.betti.items())

    def __getitem__(self, i):
        return self.betti.get(i, 0)

    def to_dict(self):
        return {"point": [format_value(x) for x in self.point], "field": self.field,
                "betti": {str(i): b for i, b in sorted(self.betti.items())}}


def _field_complex(c: FreeComplex, coeff: CoefficientDomain | None) -> FreeComplex:
    if coeff is not None and coeff != c.coeff:
        return c.with_coeff(coeff)
    if not c.coeff.is_field:
        return c.with_coeff(QQ)
    return c


def fiber_betti(c: FreeComplex, point, coeff: CoefficientDomain | None = None) -> FiberBetti:
    """dim H^i of the complex evaluated at a character, by exact Gaussian elimination."""
    c = _field_complex(c, coeff)
    point = tuple(point)
    ranks = {}
    for i in range(c.lo - 1, c.hi + 1):
        A = c.d(i)
        if not A.rows or not A.cols or A.is_zero():
            ranks[i] = 0
            continue
        vals = A.evaluate(point)
        if c.coeff.kind == "QQ":
            vals = [[Fraction(x) for x in row] for row in vals]
        ranks[i] = _field_rank(vals)
    betti = {i: c.rank(i) - ranks[i] - ranks[i - 1] for i in c.degrees}
    return FiberBetti(point, betti, point_field(point, c.coeff))


# ---------------------------------------------------------------- reports

@dataclass
class IndexingMode:
    """Perverse: the top degree is relabelled 0. Space(n): degrees are read as 0..n, top n."""

    kind: str
    n: int | None = None

    @classmethod
    def perverse(cls):
        return cls("perverse")

    @classmethod
    def space(cls, n: int):
        return cls("space", n)

    @classmethod
    def parse(cls, text: str) -> "IndexingMode":
        t = text.strip().lower()
        if t == "perverse":
            return cls.perverse()
        if t.startswith("space:"):
            return cls.space(int(t.split(":", 1)[1]))
        raise ValueError(f"bad mode {text!r} (use perverse or space:<n>)")

    def top(self, c: FreeComplex) -> int:
        if self.kind == "perverse":
            return c.hi
        if not c.lo <= self.n <= c.hi:
            raise ValueError(f"space:{self.n} is outside the degree span [{c.lo}, {c.hi}]")
        return self.n

    def label(self, c: FreeComplex, i: int) -> int:
        return i - c.hi if self.kind == "perverse" else i

    def __str__(self):
        return "perverse" if self.kind == "perverse" else f"space:{self.n}"


@dataclass
class PropertyResult:
    status: str                      # "pass", "fail" or "skipped"
    witness: object = None
    reason: str | None = None

    @classmethod
    def skipped(cls, reason):
        return cls("skipped", None, reason)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self):
        out = {"status": self.status, "witness": self.witness}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class VerificationReport:
    mode: str
    properties: dict = field(default_factory=dict)
    duality: dict | None = None
    oracle: dict | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(p.ok for p in self.properties.values())

    def __getitem__(self, name) -> PropertyResult:
        return self.properties[name]

    def to_dict(self):
        out = {"mode": self.mode,
               "properties": {k: v.to_dict() for k, v in self.properties.items()},
               "passed": self.passed}
        if self.duality is not None:
            out["duality"] = self.duality
        if self.oracle is not None:
            out["oracle"] = self.oracle
        out.update(self.extra)
        return out


# ---------------------------------------------------------------- propagation

def _ideal_at(l: JumpLocusSet, i: int) -> Ideal:
    return l.ideal(i)


def _codim(l: JumpLocusSet, i: int):
    rec = l[i]
    return None if rec is None else rec.dim.codim   # None: empty locus, codimension infinite


def verify_propagation(l: JumpLocusSet, mode: IndexingMode, components=None) -> VerificationReport:
    c = l.complex
    top = mode.top(c)
    lab = lambda i: f"V^{mode.label(c, i)}"
    props = {}

    # (i) V^top contains V^{top-1} contains ... contains V^lo
    fail = None
    for i in range(top, c.lo, -1):
        if not variety_containment(_ideal_at(l, i - 1), _ideal_at(l, i)):
            fail = {"contained": lab(i - 1), "container": lab(i),
                    "degrees": [mode.label(c, i - 1), mode.label(c, i)]}
            break
    props["i"] = PropertyResult("fail", fail) if fail else PropertyResult("pass")

    # (ii) codim V^{top-k} >= k
    fail = None
    for k in range(0, top - c.lo + 1):
        cd = _codim(l, top - k)
        if cd is not None and cd < k:
            fail = {"locus": lab(top - k), "codim": cd, "required": k}
            break
    props["ii"] = PropertyResult("fail", fail) if fail else PropertyResult("pass")

    props["iii"] = PropertyResult.skipped(COMPONENTS_NEEDED)

    # (iv) with d = codim V^top: V^top = ... = V^{top-d}, and V^{top-d} != V^{top-d-1}
    d = _codim(l, top)
    if d is None:
        props["iv"] = PropertyResult("pass", {"codim_top": None, "note": "top locus is empty"})
    else:
        fail = None
        for k in range(1, d + 1):
            if not same_variety(_ideal_at(l, top), _ideal_at(l, top - k)):
                fail = {"unequal": [lab(top), lab(top - k)], "codim_top": d}
                break
        if fail is None and same_variety(_ideal_at(l, top - d), _ideal_at(l, top - d - 1)):
            fail = {"equal": [lab(top - d), lab(top - d - 1)], "codim_top": d}
        props["iv"] = (PropertyResult("fail", fail) if fail
                       else PropertyResult("pass", {"codim_top": d,
                                                    "chain": [lab(top - k) for k in range(d + 1)]}))
    props["iv_purity"] = PropertyResult.skipped(COMPONENTS_NEEDED)

    # (v) generic vanishing: every locus below the top is a proper subvariety
    fail = None
    for i in range(top - 1, c.lo - 1, -1):
        cd = _codim(l, i)
        if cd is not None and cd < 1:
            fail = {"locus": lab(i), "codim": cd}
            break
    props["v"] = PropertyResult("fail", fail) if fail else PropertyResult("pass")

    # (vi) signed Euler characteristic
    chi = euler_characteristic(c)
    signed = (-1) ** (top % 2) * chi
    top_whole = l[top] is not None and l[top].whole_torus
    ok = signed >= 0 and ((signed == 0) == (not top_whole))
    props["vi"] = PropertyResult("pass" if ok else "fail",
                                 {"signed_euler": signed, "top_is_whole_torus": top_whole})

    report = VerificationReport(str(mode), props)
    if components is not None:
        frag = verify_components(l, mode, components)
        report.properties["iii"] = frag["iii"]
        report.properties["iv_purity"] = frag["iv_purity"]
        report.properties["cover"] = frag["cover"]
    return report


def verify_components(l: JumpLocusSet, mode: IndexingMode, components) -> dict:
    """Check user-supplied irreducible components of the top locus."""
    c = l.complex
    top = mode.top(c)
    J = _ideal_at(l, top)
    comps = [P if isinstance(P, Ideal) else Ideal(l.ring, P) for P in components]
    lab = lambda i: f"V^{mode.label(c, i)}"

    bad = None
    for k, P in enumerate(comps):
        if not variety_containment(P, J):
            bad = {"component": k, "problem": f"V(component) is not inside {lab(top)}"}
            break
    if bad is None:
        prod = Ideal.unit(l.ring)
        for P in comps:
            prod = prod * P
        if not variety_containment(J, prod):
            bad = {"problem": f"{lab(top)} is not covered by the components"}
    cover = PropertyResult("fail", bad) if bad else PropertyResult("pass")

    codims = []
    bad = None
    for k, P in enumerate(comps):
        dd = dimension(P).codim
        codims.append(dd)
        if dd is None:
            continue
        if not variety_containment(P, _ideal_at(l, top - dd)):
            bad = {"component": k, "codim": dd, "target": lab(top - dd)}
            break
    iii = PropertyResult("fail", bad) if bad else PropertyResult(
        "pass", {"codims": codims, "targets": [lab(top - d) if d is not None else None
                                               for d in codims]})
    pure = len({d for d in codims if d is not None}) <= 1
    purity = PropertyResult("pass" if pure else "fail", {"codims": codims})
    return {"cover": cover, "iii": iii, "iv_purity": purity}


# ---------------------------------------------------------------- acyclicity

@dataclass
class AcyclicityResult:
    acyclic: bool
    witness: dict | None = None

    def __bool__(self):
        return self.acyclic


def acyclic_off_top(c: FreeComplex, n: int, caps: Caps | None = None) -> AcyclicityResult:
    """Is H^i(c) = 0 for every i != n? Decided by rank additivity and fitting-ideal codimension.

    Read as a chain complex F_j = F^{n-j} with d_j = d^{n-j}; exactness at every j >= 1
    holds iff rank F_j = rank d_j + rank d_{j+1} and codim I_{rank d_j}(d_j) >= j.
    """
    if not c.coeff.is_field:
        raise DomainError("acyclicity is decided over a field; reduce coefficients first")
    if any(c.rank(i) for i in range(n + 1, c.hi + 1)):
        raise ValueError(f"complex has nonzero terms above degree {n}")
    if n < c.lo:
        raise ValueError(f"degree {n} is below the complex (starts at {c.lo})")
    for j in range(1, n - c.lo + 1):
        deg = n - j
        rj = c.d(deg).rank(caps)
        rj1 = c.d(deg - 1).rank(caps)
        if c.rank(deg) != rj + rj1:
            return AcyclicityResult(False, {"position": j, "degree": deg, "clause": "rank",
                                            "rank_module": c.rank(deg),
                                            "rank_out": rj, "rank_in": rj1})
        if rj == 0:
            continue
        I = determinantal_ideal(c.d(deg), rj, caps)
        if not I.is_unit():
            I = I.saturate_torus()
        cd = I.dimension().codim
        if cd is not None and cd < j:
            return AcyclicityResult(False, {"position": j, "degree": deg, "clause": "codim",
                                            "codim": cd, "required": j})
    return AcyclicityResult(True)


# ---------------------------------------------------------------- Smith normal form

def smith_normal_form(A) -> list[int]:
    """Nonzero elementary divisors d1 | d2 | ... of an integer matrix."""
    M = [[int(x) for x in row] for row in A]
    if not M or not M[0]:
        return []
    nr, nc = len(M), len(M[0])
    out = []
    t = 0
    while t < min(nr, nc):
        nz = [(abs(M[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if M[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        M[t], M[pi] = M[pi], M[t]
        for row in M:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            for i in range(t + 1, nr):
                q = M[i][t] // M[t][t]
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    done = False
            for j in range(t + 1, nc):
                q = M[t][j] // M[t][t]
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    done = False
            if done:
                # the pivot must divide the rest of the matrix
                bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                            if M[i][j] % M[t][t]), None)
                if bad is None:
                    break
                M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
                continue
            nz = [(abs(M[i][t]), i, t) for i in range(t, nr) if M[i][t]]
            nz += [(abs(M[t][j]), t, j) for j in range(t, nc) if M[t][j]]
            _, pi, pj = min(nz)
            M[t], M[pi] = M[pi], M[t]
            for row in M:
                row[t], row[pj] = row[pj], row[t]
        out.append(abs(M[t][t]))
        t += 1
    return out


def suggest_primes(c: FreeComplex, bound: int = 100, points=None) -> list[int]:
    """Primes dividing an elementary divisor of some differential at a few integer points."""
    N = c.num_vars
    small = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    if points is None:
        points = [tuple(small[(k + s) % len(small)] for k in range(N)) for s in range(3)]
    zc = c if c.coeff.kind == "ZZ" else None
    if zc is None:
        return []
    found = set()
    for pt in points:
        for i in range(c.lo, c.hi):
            A = c.d(i)
            if not A.rows or not A.cols:
                continue
            for dv in smith_normal_form(A.evaluate(pt)):
                found.update(q for q in prime_factors(dv, bound) if q <= bound)
    return sorted(found)


# ---------------------------------------------------------------- abelian duality

@dataclass
class DualityVerdict:
    verdict: str                  # "AbelianDuality", "PartialAbelianDuality" or "No"
    n: int
    primes_tested: list
    reason: str | None = None
    witness: dict | None = None
    auto_primes: list = field(default_factory=list)
    cross_check: dict = field(default_factory=dict)
    caveat: str = CAVEAT

    @property
    def positive(self) -> bool:
        return self.verdict != "No"

    @property
    def label(self) -> str:
        return f"{self.verdict}({self.n})" if self.positive else "No"

    @property
    def cross_check_passed(self) -> bool:
        return all(v.get("passed", True) for v in self.cross_check.values())

    def to_dict(self):
        return {"verdict": self.label, "n": self.n, "primes_tested": list(self.primes_tested),
                "auto_added_primes": list(self.auto_primes), "reason": self.reason,
                "witness": self.witness, "caveat": self.caveat,
                "top_cohomology_check": self.cross_check}


def top_cohomology_check(c: FreeComplex, n: int, caps: Caps | None = None) -> dict:
    """Loci of the full complex against those of the top cohomology module H = coker d^{n-1}.

    Degree n: the full complex against its truncation F^{n-1} -> F^n (same H^n).
    Degrees n - i, i >= 1: the complex resolves H, so V^{n-i} must be V(I^{n-i}).
    """
    full = jump_loci(c, caps)
    trunc = jump_loci(c.truncate(n - 1, n), caps)
    degrees = {}
    for i in c.degrees:
        if i > n:
            continue
        if i == n:
            other = trunc.ideal(n)
        else:
            F = fitting_ideal(c, i, caps)
            other = F if F.is_unit() else F.saturate_torus()
        degrees[str(i)] = same_variety(full.ideal(i), other)
    return {"degrees": degrees, "passed": all(degrees.values())}


def duality_check(c: FreeComplex, n: int, primes=DEFAULT_PRIMES, full: bool = True,
                  auto_primes: bool = True, cross_check: bool = True,
                  caps: Caps | None = None) -> DualityVerdict:
    """Abelian duality in dimension n, certified over QQ and F_p for the listed primes."""
    if c.coeff.kind != "ZZ":
        raise DomainError("abelian duality is decided for complexes with integer coefficients")
    primes = sorted(set(int(p) for p in primes))
    if not primes:
        raise ValueError("at least one prime is needed")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    extra = [p for p in suggest_primes(c) if p not in primes] if auto_primes else []
    tested = sorted(primes + extra)
    fields_ = [QQ] + [Fp(p) for p in tested]
    label = "AbelianDuality" if full else "PartialAbelianDuality"
    for K in fields_:
        res = acyclic_off_top(c.with_coeff(K), n, caps)
        if not res:
            w = dict(res.witness)
            w["field"] = str(K)
            reason = (f"H^{w['degree']} is nonzero over {K}"
                      f" ({'rank additivity' if w['clause'] == 'rank' else 'fitting ideal codimension'}"
                      f" fails at position {w['position']})")
            return DualityVerdict("No", n, tested, reason, w, extra,
                                  {"not_applicable": {"reason": "verdict is negative"}})
    checks = {}
    if cross_check:
        for K in fields_:
            checks[str(K)] = top_cohomology_check(c.with_coeff(K), n, caps)
    return DualityVerdict(label, n, tested, None, None, extra, checks)


# ---------------------------------------------------------------- Betti bounds

def betti_bounds(l: JumpLocusSet, n: int, r: int = 0, mode: IndexingMode | None = None) -> dict:
    """b_i > 0 on [0, n - r], b_1 >= n - r, and (when r = 0) (-1)^n chi >= 0."""
    c = l.complex
    mode = mode or IndexingMode.space(n)
    fb = fiber_betti(c, (1,) * c.num_vars)
    shift = 0 if mode.kind == "space" else c.hi - n
    b = {i: fb[i + shift] for i in range(0, n + 1)}
    checks = {}
    low = [i for i in range(0, n - r + 1) if b.get(i, 0) <= 0]
    checks["positive"] = PropertyResult("fail" if low else "pass",
                                        {"range": [0, n - r], "zero_at": low})
    b1 = b.get(1, 0)
    checks["b1"] = PropertyResult("pass" if b1 >= n - r else "fail", {"b1": b1, "bound": n - r})
    chi = sum((-1) ** (i % 2) * fb[i + shift] for i in range(c.lo - shift, c.hi - shift + 1))
    if r == 0:
        signed = (-1) ** (n % 2) * chi
        checks["signed_euler"] = PropertyResult("pass" if signed >= 0 else "fail", signed)
    else:
        checks["signed_euler"] = PropertyResult.skipped("only asserted when r = 0")
    return {"betti": {str(i): v for i, v in b.items()}, "checks": checks,
            "passed": all(p.ok for p in checks.values())}


# ---------------------------------------------------------------- point sampling

QQ_PALETTE = (2, 3, 5, 7, -1, Fraction(1, 2))


def _qq_extra(rng):
    while True:
        a, b = rng.randint(-9, 9), rng.randint(1, 9)
        if a:
            x = Fraction(a, b)
            return int(x) if x.denominator == 1 else x


def _specialize(p: Polynomial, values: dict) -> Polynomial:
    K = p.ring.coeff
    out = {}
    for m, c in p.terms.items():
        v = c
        mm = list(m)
        for i, x in values.items():
            if m[i]:
                v = K.mul(v, K.convert(x) ** m[i] if K.kind != "Fp" else pow(K.convert(x), m[i], K.p))
                mm[i] = 0
        mm = tuple(mm)
        out[mm] = K.add(out.get(mm, 0), v)
    return Polynomial(p.ring, out)


def _divisors(n: int, limit: int = 10 ** 6):
    n = abs(n)
    if n > limit:
        return None
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out += [k, n // k]
        k += 1
    return sorted(set(out))


def _roots(g: Polynomial, v: int):
    """Nonzero roots in the coefficient field of a polynomial in the single variable v."""
    K = g.ring.coeff
    coeffs = {}
    for m, c in g.terms.items():
        coeffs[m[v]] = c
    low = min(coeffs)
    coeffs = {e - low: c for e, c in coeffs.items()}
    deg = max(coeffs)
    if deg == 0:
        return []
    if K.kind == "Fp":
        if K.p > 20000:
            return []
        return [x for x in range(1, K.p)
                if sum(c * pow(x, e, K.p) for e, c in coeffs.items()) % K.p == 0]
    den = 1
    for c in coeffs.values():
        den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    ints = {e: int(Fraction(c) * den) for e, c in coeffs.items()}
    num_d, lead_d = _divisors(ints.get(0, 0)), _divisors(ints[deg])
    if num_d is None or lead_d is None:
        return []
    out = []
    for a in num_d:
        for b in lead_d:
            for s in (1, -1):
                x = Fraction(s * a, b)
                if x not in out and sum(c * x ** e for e, c in ints.items()) == 0:
                    out.append(x)
    return [int(x) if x.denominator == 1 else x for x in sorted(out)]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _random_value(K: CoefficientDomain, rng):
    if K.kind == "Fp":
        return rng.randrange(1, K.p)
    return rng.choice(QQ_PALETTE)


def _solve(ring: LaurentRing, gens, values: dict, rng, depth=0):
    N = ring.num_vars
    spec = [g for g in (_specialize(g, values) for g in gens) if g]
    if any(g.is_constant() for g in spec):
        return None
    free = [v for v in range(N) if v not in values]
    if not free:
        return tuple(values[v] for v in range(N))
    if not spec:
        vals = dict(values)
        for v in free:
            vals[v] = _random_value(ring.coeff, rng)
        return tuple(vals[v] for v in range(N))
    I = Ideal(ring, spec)
    G = I.groebner_basis(LEX)
    if len(G) == 1 and G[0].is_constant():
        return None
    uni = [g for g in G if len(g.variables()) == 1]
    if not uni:
        v = rng.choice(free)
        return _solve(ring, G, {**values, v: _random_value(ring.coeff, rng)}, rng, depth + 1)
    g = uni[-1]
    v = next(iter(g.variables()))
    roots = _roots(g, v)
    rng.shuffle(roots)
    for x in roots[:4]:
        pt = _solve(ring, G, {**values, v: x}, rng, depth + 1)
        if pt is not None:
            return pt
    return None


def locus_points(I: Ideal, count: int, rng) -> list:
    """Points of V(I) inside the torus with coordinates in the coefficient field (best effort)."""
    if I.is_zero() or I.is_unit():
        return []
    ring = I.ring
    dim = I.dimension()
    gens = I.groebner_basis()
    out = []
    for _ in range(4 * count):
        vals = {v: _random_value(ring.coeff, rng) for v in dim.independent_set}
        pt = _solve(ring, gens, vals, rng)
        if pt is not None and all(pt) and pt not in out:
            if all(not evaluate(g, pt) for g in gens):
                out.append(pt)
        if len(out) >= count:
            break
    return out


def sample_points(ring: LaurentRing, count: int = 50, seed: int = 0, loci=None,
                  extensions: bool = True, per_locus: int = 3) -> list:
    """Deterministic character sample: the trivial character, points solved on each proper
    locus, then random points (palette values over QQ, F_{p^r} elements with r <= 4 over F_p)."""
    rng = random.Random(seed)
    K = ring.coeff
    N = ring.num_vars
    out = [(1,) * N]
    seen = {out[0]}

    def add(pt):
        if pt not in seen:
            seen.add(pt)
            out.append(pt)

    if loci is not None:
        done = set()
        for i in sorted(loci.records):
            I = loci.records[i].ideal
            key = tuple(map(str, I.generators))
            if key in done:
                continue
            done.add(key)
            for pt in locus_points(I, per_locus, rng):
                add(pt)
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        if K.kind == "Fp":
            r = rng.randint(1, 4) if extensions else 1
            F = GaloisField(K.p, r)
            pt = tuple(F.random_nonzero(rng) for _ in range(N))
            if r == 1:
                pt = tuple(x.coeffs[0] for x in pt)
        elif tries <= 10 * count:
            pt = tuple(rng.choice(QQ_PALETTE) for _ in range(N))
        else:
            pt = tuple(_qq_extra(rng) for _ in range(N))
        add(pt)
    while len(out) < count:   # tiny fields: repeat points rather than under-sample
        out.append(out[len(out) % max(1, len(seen))])
    return out


# ---------------------------------------------------------------- oracle

@dataclass
class OracleResult:
    rows: list
    mismatches: list
    euler_failures: list

    @property
    def points_tested(self) -> int:
        return len(self.rows)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.euler_failures

    def summary(self) -> dict:
        return {"points_tested": self.points_tested, "mismatches": len(self.mismatches),
                "euler_failures": len(self.euler_failures)}

    def to_dict(self) -> dict:
        out = self.summary()
        out["rows"] = self.rows
        out["mismatch_details"] = self.mismatches
        return out


def oracle_check(c: FreeComplex, loci: JumpLocusSet | None = None, points=None,
                 count: int = 50, seed: int = 0, extensions: bool = True,
                 caps: Caps | None = None) -> OracleResult:
    """Compare locus membership with fiber cohomology at sampled (or given) characters."""
    c = _field_complex(c, None)
    loci = loci or jump_loci(c, caps)
    if points is None:
        points = sample_points(c.ring, count, seed, loci, extensions)
    chi = euler_characteristic(c)
    rows, bad, euler_bad = [], [], []
    for pt in points:
        pt = tuple(pt)
        fb = fiber_betti(c, pt)
        member = {i: loci[i].contains_point(pt) for i in c.degrees}
        rows.append({"point": [format_value(x) for x in pt], "field": fb.field,
                     "betti": [fb[i] for i in c.degrees],
                     "member": [member[i] for i in c.degrees]})
        for i in c.degrees:
            if member[i] != (fb[i] != 0):
                bad.append({"point": format_point(pt), "degree": i,
                            "member": member[i], "betti": fb[i]})
        if fb.euler() != chi:
            euler_bad.append({"point": format_point(pt), "euler": fb.euler(), "expected": chi})
    return OracleResult(rows, bad, euler_bad)
