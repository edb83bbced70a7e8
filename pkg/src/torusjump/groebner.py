"""Buchberger's algorithm and the ideal-theoretic decision procedures built on it.

Radicals are never materialised: every statement about ``rad J`` is decided
by Rabinowitsch radical membership, and varieties are compared through
:func:`variety_containment`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .caps import Caps, check, default_caps
from .errors import DomainError, RingMismatchError
from .ring import DEGREVLEX, Elimination, LaurentRing, MonomialOrder, Polynomial


# ---------------------------------------------------------------- monomials

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------- core engine
# Polynomials are plain dicts {exponent tuple: coefficient} in this section.

class _Basis:
    """Monic polynomials with their leading monomials and tails."""

    def __init__(self, K, key):
        self.K = K
        self.key = key
        self.polys = []
        self.lms = []
        self.tails = []

    def add(self, f, lm):
        self.polys.append(f)
        self.lms.append(lm)
        self.tails.append([(m, c) for m, c in f.items() if m != lm])


def _monic(f, key, K):
    lm = max(f, key=key)
    lc = f[lm]
    if lc != 1:
        inv = K.inv(lc)
        f = {m: K.mul(c, inv) for m, c in f.items()}
    return f, lm


def _normal_form(f, basis, active=None, full=True):
    """Remainder of f on division by the (monic) basis elements."""
    K, key = basis.K, basis.key
    idx = range(len(basis.polys)) if active is None else active
    lms, tails = basis.lms, basis.tails
    p = dict(f)
    r = {}
    sub, mul = K.sub, K.mul
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for i in idx:
            lm = lms[i]
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gc in tails[i]:
                    mm = _mul(gm, q)
                    v = sub(p.get(mm, 0), mul(c, gc))
                    if v == 0:
                        p.pop(mm, None)
                    else:
                        p[mm] = v
                break
        else:
            r[m] = c
            if not full:
                r.update(p)
                return r
    return r


def _spoly(i, j, basis):
    K = basis.K
    f, g = basis.polys[i], basis.polys[j]
    L = _lcm(basis.lms[i], basis.lms[j])
    qf, qg = _sub(L, basis.lms[i]), _sub(L, basis.lms[j])
    out = {}
    for m, c in f.items():
        if m != basis.lms[i]:
            out[_mul(m, qf)] = c
    for m, c in g.items():
        if m != basis.lms[j]:
            mm = _mul(m, qg)
            v = K.sub(out.get(mm, 0), c)
            if v == 0:
                out.pop(mm, None)
            else:
                out[mm] = v
    return out


def _update(basis, pairs, active, new):
    """Gebauer-Moeller installation of basis element ``new``."""
    lms = basis.lms
    h = lms[new]
    # criterion B on old pairs: drop (i, j) when lm(new) | lcm(i, j) strictly inside
    kept = set()
    for (i, j) in pairs:
        L = _lcm(lms[i], lms[j])
        if not _divides(h, L) or L == _lcm(lms[i], h) or L == _lcm(lms[j], h):
            kept.add((i, j))
    # new pairs, minimalised by lcm (criterion M/F) and filtered by the product criterion
    by_lcm = {}
    for i in active:
        by_lcm.setdefault(_lcm(lms[i], h), []).append(i)
    key = basis.key
    minimal = []
    for L in sorted(by_lcm, key=key):
        if not any(_divides(L2, L) for L2 in minimal):
            minimal.append(L)
    for L in minimal:
        group = by_lcm[L]
        if any(L == _mul(lms[i], h) for i in group):
            continue
        kept.add((min(group), new))
    # drop basis elements whose leading monomial is now redundant
    still = [i for i in active if not _divides(h, lms[i])]
    still.append(new)
    return kept, still


def buchberger(gens, K, order: MonomialOrder, caps: Caps | None = None, stop_on_unit=False):
    """Reduced Groebner basis (list of monic dicts, descending leading monomials)."""
    caps = caps or default_caps()
    if not K.is_field:
        raise DomainError("Groebner bases need field coefficients: reduce coefficients first")
    key = order.key
    basis = _Basis(K, key)
    pairs = set()
    active = []
    for f in gens:
        if not f:
            continue
        f = _normal_form(f, basis, active)
        if not f:
            continue
        f, lm = _monic(f, key, K)
        if not any(lm):
            return [{lm: 1}]
        basis.add(f, lm)
        pairs, active = _update(basis, pairs, active, len(basis.polys) - 1)
    processed = 0
    while pairs:
        pair = min(pairs, key=lambda ij: (key(_lcm(basis.lms[ij[0]], basis.lms[ij[1]])), ij))
        pairs.discard(pair)
        processed += 1
        check(processed, caps.max_pairs, "critical pairs")
        s = _spoly(pair[0], pair[1], basis)
        if not s:
            continue
        r = _normal_form(s, basis, active)
        if not r:
            continue
        r, lm = _monic(r, key, K)
        if not any(lm):
            return [{lm: 1}]
        check(sum(lm), caps.max_degree, "degree of a basis element")
        basis.add(r, lm)
        check(len(active) + 1, caps.max_basis, "Groebner basis size")
        pairs, active = _update(basis, pairs, active, len(basis.polys) - 1)
    # active already holds a minimal basis; interreduce it
    lms = basis.lms
    minimal = sorted(active, key=lambda i: key(lms[i]))
    reduced = _Basis(K, key)
    for i in minimal:
        reduced.add(basis.polys[i], lms[i])
    out = []
    for k in range(len(minimal)):
        others = [j for j in range(len(minimal)) if j != k]
        tail = {m: c for m, c in reduced.polys[k].items() if m != reduced.lms[k]}
        tail = _normal_form(tail, reduced, others)
        tail[reduced.lms[k]] = 1
        out.append((reduced.lms[k], tail))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return [f for _, f in out]


# ---------------------------------------------------------------- Ideal

@dataclass(frozen=True)
class DimensionResult:
    """Krull dimension of V(I); ``dim == -1`` encodes the empty locus."""

    dim: int
    num_vars: int
    independent_set: tuple[int, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    @property
    def codim(self) -> int | None:
        """N - dim, or None for the empty locus (codimension +infinity)."""
        return None if self.dim < 0 else self.num_vars - self.dim

    def codim_at_least(self, k: int) -> bool:
        return self.dim < 0 or self.num_vars - self.dim >= k

    def to_dict(self):
        return {"dim": self.dim, "codim": self.codim}


class Ideal:
    """Finitely generated ideal of k[t1..tN] with a write-once Groebner cache per order."""

    def __init__(self, ring: LaurentRing, generators=(), caps: Caps | None = None):
        self.ring = ring
        seen = set()
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.parse(g) if isinstance(g, str) else ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self.caps = caps
        self._gb = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def __repr__(self):
        return f"Ideal<{', '.join(map(str, self.generators))}>"

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> tuple[Polynomial, ...]:
        gb = self._gb.get(order)
        if gb is None:
            K = self.ring.coeff
            dicts = buchberger([g.terms for g in self.generators], K, order, self.caps)
            gb = tuple(Polynomial._make(self.ring, f) for f in dicts)
            self._gb.setdefault(order, gb)
            gb = self._gb[order]
        return gb

    def _seed_gb(self, order, gb):
        self._gb.setdefault(order, tuple(gb))

    def reduce(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        """Normal form of f modulo the reduced Groebner basis."""
        if f.ring != self.ring:
            raise RingMismatchError(f"{f} is not in {self.ring}")
        gb = self.groebner_basis(order)
        basis = _Basis(self.ring.coeff, order.key)
        for g in gb:
            basis.add(g.terms, g.leading_monomial(order))
        return Polynomial._make(self.ring, _normal_form(f.terms, basis))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __contains__(self, f):
        return self.contains(f)

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, self.groebner_basis()))

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def radical_contains(self, f: Polynomial) -> bool:
        return radical_membership(f, self)

    def saturate(self, f: Polynomial) -> "Ideal":
        return saturate(self, f)

    def saturate_torus(self) -> "Ideal":
        return saturate(self, self.ring.torus_product())

    def dimension(self) -> DimensionResult:
        return dimension(self)


def _require_field(I: Ideal):
    if not I.ring.coeff.is_field:
        raise DomainError("ideal over ZZ: reduce coefficients first")


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX) -> tuple[Polynomial, ...]:
    _require_field(I)
    return I.groebner_basis(order)


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    _require_field(I)
    return I.contains(f)


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch: f in rad I iff 1 in I + <1 - y*f> over k[y, t]."""
    _require_field(I)
    if f.ring != I.ring:
        raise RingMismatchError(f"{f} is not in {I.ring}")
    if not f:
        return True
    big = I.ring.extend(1)
    gens = [g.change_ring(big, 1).terms for g in I.generators]
    yf = f.change_ring(big, 1).mul_monomial((1,) + (0,) * I.ring.num_vars)
    gens.append((big.one() - yf).terms)
    gb = buchberger(gens, I.ring.coeff, DEGREVLEX, I.caps)
    return len(gb) == 1 and len(gb[0]) == 1 and not any(next(iter(gb[0])))


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^oo = (I + <1 - y*f>) intersected with k[t], via an order eliminating y."""
    _require_field(I)
    if f.ring != I.ring:
        raise RingMismatchError(f"{f} is not in {I.ring}")
    if not f:
        raise ValueError("cannot saturate at the zero polynomial")
    ring = I.ring
    if not I.generators:
        return Ideal(ring, [], I.caps)
    big = ring.extend(1)
    gens = [g.change_ring(big, 1).terms for g in I.generators]
    yf = f.change_ring(big, 1).mul_monomial((1,) + (0,) * ring.num_vars)
    gens.append((big.one() - yf).terms)
    gb = buchberger(gens, ring.coeff, Elimination(1), I.caps)
    kept = [Polynomial._make(big, g).change_ring(ring, -1) for g in gb if all(m[0] == 0 for m in g)]
    out = Ideal(ring, kept, I.caps)
    # the y-free part of a reduced elimination basis is the reduced degrevlex basis
    out._seed_gb(DEGREVLEX, sorted(kept, key=lambda p: DEGREVLEX.key(p.leading_monomial()),
                                   reverse=True))
    return out


def dimension(I: Ideal) -> DimensionResult:
    """Largest set of variables containing the support of no leading monomial."""
    _require_field(I)
    N = I.ring.num_vars
    gb = I.groebner_basis(DEGREVLEX)
    if len(gb) == 1 and gb[0].is_constant():
        return DimensionResult(-1, N)
    supports = [frozenset(i for i, e in enumerate(g.leading_monomial()) if e) for g in gb]
    caps = I.caps or default_caps()
    check(1 << N, caps.max_subsets, "variable subsets for the dimension scan")
    for size in range(N, -1, -1):
        for S in combinations(range(N), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return DimensionResult(size, N, S)
    return DimensionResult(0, N)  # pragma: no cover - the empty set always qualifies


def variety_containment(J: Ideal, K: Ideal) -> bool:
    """V(J) subset of V(K), i.e. every generator of K lies in rad J."""
    if J.ring != K.ring:
        raise RingMismatchError("ideals live in different rings")
    if J.is_unit():
        return True
    return all(radical_membership(g, J) for g in K.generators)


def same_variety(J: Ideal, K: Ideal) -> bool:
    return variety_containment(J, K) and variety_containment(K, J)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    return Ideal(I.ring, I.generators + J.generators, I.caps or J.caps)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators], I.caps or J.caps)
