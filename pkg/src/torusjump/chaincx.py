"""Bounded cochain complexes of free modules over a Laurent ring, plus the standard generators."""

from __future__ import annotations

import json
from itertools import combinations
from math import comb
from pathlib import Path

from .errors import (ComplexConditionViolated, ParseError, RingMismatchError, SchemaError,
                     ShapeMismatch, UnsupportedPresentation)
from .polymat import PolyMatrix
from .ring import QQ, CoefficientDomain, LaurentRing, Polynomial


class FreeComplex:
    """F^lo -> ... -> F^hi, with d^i : F^i -> F^{i+1} a ranks[i+1] x ranks[i] matrix.

    Differentials act on column vectors. A differential that is not supplied is zero.
    """

    def __init__(self, ring: LaurentRing, lo: int, hi: int, ranks, differentials=None,
                 validate: bool = True):
        if lo > hi:
            raise ValueError(f"empty degree range [{lo}, {hi}]")
        self.ring = ring
        self.lo, self.hi = lo, hi
        ranks = {int(k): int(v) for k, v in dict(ranks).items()}
        for d, r in ranks.items():
            if not lo <= d <= hi:
                raise ShapeMismatch(d, f"rank given outside the degree range [{lo}, {hi}]")
            if r < 0:
                raise ShapeMismatch(d, "negative rank")
        self.ranks = {d: ranks.get(d, 0) for d in range(lo, hi + 1)}
        diffs = {}
        for i, m in dict(differentials or {}).items():
            i = int(i)
            if not lo <= i < hi:
                raise ShapeMismatch(i, f"differential outside [{lo}, {hi - 1}]")
            if not isinstance(m, PolyMatrix):
                m = PolyMatrix.from_rows(ring, m, self.rank(i))
            diffs[i] = m
        self._diffs = diffs
        if validate:
            self.validate()

    # -- basic accessors
    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def d(self, i: int) -> PolyMatrix:
        """d^i : F^i -> F^{i+1}; the empty or zero matrix where nothing was given."""
        m = self._diffs.get(i)
        if m is None:
            m = PolyMatrix.zeros(self.ring, self.rank(i + 1), self.rank(i))
        return m

    differential = d

    @property
    def degrees(self):
        return range(self.lo, self.hi + 1)

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    @property
    def coeff(self) -> CoefficientDomain:
        return self.ring.coeff

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def validate(self):
        validate(self)

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return (self.ring == other.ring and (self.lo, self.hi) == (other.lo, other.hi)
                and self.ranks == other.ranks
                and all(self.d(i) == other.d(i) for i in range(self.lo, self.hi)))

    def __hash__(self):
        return hash((self.ring, self.lo, self.hi, tuple(self.ranks.items())))

    def __repr__(self):
        rk = ", ".join(str(self.ranks[d]) for d in self.degrees)
        return f"FreeComplex({self.ring}, degrees {self.lo}..{self.hi}, ranks ({rk}))"

    def with_coeff(self, coeff: CoefficientDomain) -> "FreeComplex":
        """Base change along ZZ -> QQ, ZZ -> F_p or QQ -> F_p."""
        if coeff == self.coeff:
            return self
        ring = self.ring.with_coeff(coeff)
        diffs = {i: m.reduce_coefficients(coeff) for i, m in self._diffs.items()}
        return FreeComplex(ring, self.lo, self.hi, self.ranks, diffs, validate=False)

    def truncate(self, lo: int, hi: int) -> "FreeComplex":
        """The brutal truncation keeping degrees lo..hi (and the differentials between them)."""
        lo, hi = max(lo, self.lo), min(hi, self.hi)
        ranks = {d: self.ranks[d] for d in range(lo, hi + 1)}
        diffs = {i: m for i, m in self._diffs.items() if lo <= i < hi}
        return FreeComplex(self.ring, lo, hi, ranks, diffs, validate=False)

    # -- serialization
    def to_dict(self) -> dict:
        return to_dict(self)

    def dumps(self) -> str:
        return dumps(self)


def validate(c: FreeComplex):
    for i in range(c.lo, c.hi):
        m = c._diffs.get(i)
        if m is None:
            continue
        if m.ring != c.ring:
            raise RingMismatchError(f"differential {i} lives over {m.ring}, complex over {c.ring}")
        want = (c.rank(i + 1), c.rank(i))
        if m.shape != want:
            raise ShapeMismatch(i, f"expected {want[0]}x{want[1]}, got {m.rows}x{m.cols}")
    for i in range(c.lo, c.hi - 1):
        if i in c._diffs and i + 1 in c._diffs:
            prod = c._diffs[i + 1] @ c._diffs[i]
            if not prod.is_zero():
                bad = next((r, k) for r in range(prod.rows) for k in range(prod.cols) if prod[r, k])
                raise ComplexConditionViolated(i, f"entry {bad} is {prod[bad]}")


def euler_characteristic(c: FreeComplex) -> int:
    return sum((-1) ** (i % 2) * r for i, r in c.ranks.items())


# ---------------------------------------------------------------- generators

def point_complex(ring: LaurentRing) -> FreeComplex:
    """R in degree 0: the unit for tensor products."""
    return FreeComplex(ring, 0, 0, {0: 1})


def koszul_torus(N: int, coeff: CoefficientDomain = QQ) -> FreeComplex:
    """Koszul cochain complex on (t_1 - 1, ..., t_N - 1), degrees 0..N.

    Degree i has the i-subsets of {1..N} as basis (lexicographic); e_S maps to
    sum over j not in S of (-1)^{#(s in S, s < j)} (t_j - 1) e_{S + j}.
    """
    if N < 1:
        raise ValueError("the torus needs N >= 1")
    R = LaurentRing(N, coeff)
    one = R.one()
    x = [R.var(j) - one for j in range(N)]
    bases = [list(combinations(range(N), i)) for i in range(N + 1)]
    diffs = {}
    for i in range(N):
        src, tgt = bases[i], bases[i + 1]
        index = {S: k for k, S in enumerate(tgt)}
        rows = [[R.zero()] * len(src) for _ in tgt]
        for col, S in enumerate(src):
            for j in range(N):
                if j in S:
                    continue
                T = tuple(sorted(S + (j,)))
                sign = -1 if sum(1 for s in S if s < j) % 2 else 1
                rows[index[T]][col] = x[j] if sign > 0 else -x[j]
        diffs[i] = PolyMatrix(R, len(tgt), len(src), rows)
    return FreeComplex(R, 0, N, {i: comb(N, i) for i in range(N + 1)}, diffs)


def twist(c: FreeComplex, lam) -> FreeComplex:
    """Tensor with the rank-one local system of character lam: t_i -> lam_i * t_i."""
    lam = list(lam)
    if len(lam) != c.num_vars:
        raise ValueError(f"twist needs {c.num_vars} factors, got {len(lam)}")
    diffs = {i: m.map(lambda p: p.scale_variables(lam)) for i, m in c._diffs.items()}
    return FreeComplex(c.ring, c.lo, c.hi, c.ranks, diffs)


def shift(c: FreeComplex, k: int = 1) -> FreeComplex:
    """c[k]: degree i of the result is degree i + k of c, differentials times (-1)^k."""
    sign = -1 if k % 2 else 1
    diffs = {i - k: (m if sign > 0 else -m) for i, m in c._diffs.items()}
    ranks = {d - k: r for d, r in c.ranks.items()}
    return FreeComplex(c.ring, c.lo - k, c.hi - k, ranks, diffs, validate=False)


def tensor_product(a: FreeComplex, b: FreeComplex, mode: str = "same") -> FreeComplex:
    """Total complex of a (x) b with Koszul signs.

    mode "same": both over the same ring. mode "concat": the result lives over the ring
    whose variables are a's followed by b's (the product of the two tori).
    Basis in each total degree: blocks (i, j) by decreasing i, a-index major inside a block,
    so that koszul_torus(m) (x) koszul_torus(1) in concat mode is koszul_torus(m + 1) for m <= 2.
    """
    if mode == "same":
        if a.ring != b.ring:
            raise RingMismatchError(f"same-ring tensor product of {a.ring} and {b.ring}")
        R = a.ring
        da = {i: a.d(i) for i in range(a.lo, a.hi)}
        db = {j: b.d(j) for j in range(b.lo, b.hi)}
    elif mode == "concat":
        R = a.ring.concat(b.ring)
        da = {i: a.d(i).change_ring(R, 0) for i in range(a.lo, a.hi)}
        db = {j: b.d(j).change_ring(R, a.num_vars) for j in range(b.lo, b.hi)}
    else:
        raise ValueError(f"unknown tensor mode {mode!r} (use 'same' or 'concat')")
    lo, hi = a.lo + b.lo, a.hi + b.hi

    def blocks(k):
        out, off = {}, 0
        for i in range(a.hi, a.lo - 1, -1):
            j = k - i
            if b.lo <= j <= b.hi:
                out[(i, j)] = off
                off += a.rank(i) * b.rank(j)
        return out, off

    layout = {k: blocks(k) for k in range(lo, hi + 1)}
    ranks = {k: layout[k][1] for k in layout}
    diffs = {}
    for k in range(lo, hi):
        src, n_src = layout[k]
        tgt, n_tgt = layout[k + 1]
        rows = [[R.zero()] * n_src for _ in range(n_tgt)]
        for (i, j), s_off in src.items():
            ra, rb = a.rank(i), b.rank(j)
            if (i + 1, j) in tgt:
                t_off = tgt[(i + 1, j)]
                A = da[i]
                for p in range(A.rows):
                    for q in range(A.cols):
                        x = A[p, q]
                        if x:
                            for m in range(rb):
                                rows[t_off + p * rb + m][s_off + q * rb + m] = x
            if (i, j + 1) in tgt:
                t_off = tgt[(i, j + 1)]
                B = db[j]
                rb1 = b.rank(j + 1)
                for p in range(B.rows):
                    for q in range(B.cols):
                        x = B[p, q]
                        if x:
                            x = -x if i % 2 else x
                            for m in range(ra):
                                rows[t_off + m * rb1 + p][s_off + m * rb + q] = x
        diffs[k] = PolyMatrix(R, n_tgt, n_src, rows)
    return FreeComplex(R, lo, hi, ranks, diffs)


# ---------------------------------------------------------------- presentations

def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class GroupPresentation:
    """<x_1..x_g | relators>; a word is a sequence of +-(j+1) for x_{j+1}^{+-1}."""

    def __init__(self, num_generators: int, relators=()):
        if num_generators < 1:
            raise ValueError("a presentation needs at least one generator")
        self.num_generators = num_generators
        rels = []
        for w in relators:
            w = tuple(int(x) for x in w)
            for x in w:
                if x == 0 or abs(x) > num_generators:
                    raise ValueError(f"letter {x} out of range for {num_generators} generators")
            w = _free_reduce(w)
            if w:
                rels.append(w)
        self.relators = tuple(rels)

    @classmethod
    def from_strings(cls, generators: str, relators):
        """Letters name generators; an uppercase letter is the inverse (``"abAB"`` = [a, b])."""
        index = {ch: k + 1 for k, ch in enumerate(generators)}
        words = []
        for r in relators:
            w = []
            for ch in r:
                if ch.isspace() or ch == "*":
                    continue
                if ch in index:
                    w.append(index[ch])
                elif ch.lower() in index and ch.isupper():
                    w.append(-index[ch.lower()])
                else:
                    raise ParseError(f"unknown letter {ch!r} in relator {r!r}")
            words.append(w)
        return cls(len(generators), words)

    @classmethod
    def from_json(cls, obj):
        if "generators" in obj:
            gens = obj["generators"]
            if isinstance(gens, list):
                gens = "".join(gens)
            return cls.from_strings(gens, obj.get("relators", []))
        return cls(int(obj["num_generators"]), obj.get("relators", []))

    def exponent_sums(self):
        out = []
        for w in self.relators:
            v = [0] * self.num_generators
            for x in w:
                v[abs(x) - 1] += 1 if x > 0 else -1
            out.append(v)
        return out

    def __repr__(self):
        return f"GroupPresentation({self.num_generators}, {list(self.relators)})"


def _fox_row(word, g):
    """Abelianized Fox derivatives of one relator, as Laurent term dicts (exponents may be < 0)."""
    row = [dict() for _ in range(g)]
    prefix = [0] * g
    for x in word:
        j = abs(x) - 1
        if x > 0:
            m = tuple(prefix)
            row[j][m] = row[j].get(m, 0) + 1
            prefix[j] += 1
        else:
            prefix[j] -= 1
            m = tuple(prefix)
            row[j][m] = row[j].get(m, 0) - 1
    return [{m: c for m, c in d.items() if c} for d in row]


def fox_complex(p: GroupPresentation, coeff: CoefficientDomain = QQ) -> FreeComplex:
    """Equivariant cochains of the presentation 2-complex: R -> R^g -> R^r."""
    g = p.num_generators
    sums = p.exponent_sums()
    bad = [k for k, v in enumerate(sums) if any(v)]
    if bad:
        raise UnsupportedPresentation(
            f"relator {bad[0] + 1} has exponent sums {sums[bad[0]]}; the abelianization is not "
            f"free of rank {g} (torsion or a smaller rank), which is not supported")
    R = LaurentRing(g, coeff)
    one = R.one()
    d0 = PolyMatrix(R, g, 1, [[R.var(j) - one] for j in range(g)])
    if not p.relators:
        return FreeComplex(R, 0, 1, {0: 1, 1: g}, {0: d0})
    rows = []
    for w in p.relators:
        raw = _fox_row(w, g)
        low = [min([0] + [m[v] for d in raw for m in d]) for v in range(g)]
        rows.append([Polynomial(R, {tuple(e - l for e, l in zip(m, low)): c for m, c in d.items()})
                     for d in raw])
    d1 = PolyMatrix(R, len(rows), g, rows)
    return FreeComplex(R, 0, 2, {0: 1, 1: g, 2: len(rows)}, {0: d0, 1: d1})


def wedge(k: int, coeff: CoefficientDomain = QQ) -> FreeComplex:
    """Wedge of k circles (free group of rank k)."""
    return fox_complex(GroupPresentation(k, []), coeff)


def surface(g: int, coeff: CoefficientDomain = QQ) -> FreeComplex:
    """Closed orientable surface of genus g: one relator [a1, b1] ... [ag, bg]."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    w = []
    for k in range(g):
        a, b = 2 * k + 1, 2 * k + 2
        w += [a, b, -a, -b]
    return fox_complex(GroupPresentation(2 * g, [w]), coeff)


# ---------------------------------------------------------------- JSON

def to_dict(c: FreeComplex) -> dict:
    diffs = {}
    for i in range(c.lo, c.hi):
        m = c.d(i)
        if m.rows and m.cols:
            diffs[str(i)] = m.to_lists()
    return {
        "ring": {"num_vars": c.num_vars, "coeff": c.coeff.to_json()},
        "lo": c.lo,
        "hi": c.hi,
        "ranks": {str(d): c.ranks[d] for d in c.degrees},
        "differentials": diffs,
    }


def dumps(c: FreeComplex) -> str:
    return json.dumps(to_dict(c), sort_keys=True, indent=2) + "\n"


def _int_field(obj, key, ptr):
    if key not in obj:
        raise SchemaError(f"{ptr}/{key}", "missing field")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{ptr}/{key}", f"expected an integer, got {v!r}")
    return v


def from_dict(obj) -> FreeComplex:
    if not isinstance(obj, dict):
        raise SchemaError("", "top level must be an object")
    ring_obj = obj.get("ring")
    if not isinstance(ring_obj, dict):
        raise SchemaError("/ring", "missing or not an object")
    n = _int_field(ring_obj, "num_vars", "/ring")
    if n < 1:
        raise SchemaError("/ring/num_vars", "must be >= 1")
    try:
        K = CoefficientDomain.from_json(ring_obj.get("coeff"))
    except (ValueError, TypeError) as e:
        raise SchemaError("/ring/coeff", str(e)) from None
    R = LaurentRing(n, K)
    lo, hi = _int_field(obj, "lo", ""), _int_field(obj, "hi", "")
    if lo > hi:
        raise SchemaError("/hi", f"hi = {hi} is below lo = {lo}")
    ranks_obj = obj.get("ranks")
    if not isinstance(ranks_obj, dict):
        raise SchemaError("/ranks", "missing or not an object")
    ranks = {}
    for key, v in ranks_obj.items():
        try:
            d = int(key)
        except ValueError:
            raise SchemaError(f"/ranks/{key}", "degree keys must be integers") from None
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise SchemaError(f"/ranks/{key}", f"rank must be a non-negative integer, got {v!r}")
        if not lo <= d <= hi:
            raise ShapeMismatch(d, f"rank given outside the degree range [{lo}, {hi}]")
        ranks[d] = v
    diffs_obj = obj.get("differentials", {})
    if not isinstance(diffs_obj, dict):
        raise SchemaError("/differentials", "not an object")
    diffs = {}
    for key, rows in diffs_obj.items():
        ptr = f"/differentials/{key}"
        try:
            i = int(key)
        except ValueError:
            raise SchemaError(ptr, "degree keys must be integers") from None
        if not lo <= i < hi:
            raise ShapeMismatch(i, f"differential outside [{lo}, {hi - 1}]")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise SchemaError(ptr, "a differential is a list of rows")
        want_r, want_c = ranks.get(i + 1, 0), ranks.get(i, 0)
        if len(rows) != want_r or any(len(r) != want_c for r in rows):
            got_c = len(rows[0]) if rows else 0
            raise ShapeMismatch(i, f"expected {want_r}x{want_c}, got {len(rows)}x{got_c}")
        parsed = []
        for a, r in enumerate(rows):
            prow = []
            for b, s in enumerate(r):
                if not isinstance(s, str):
                    raise SchemaError(f"{ptr}/{a}/{b}", "entries are polynomial strings")
                try:
                    prow.append(R.parse(s))
                except ParseError as e:
                    raise SchemaError(f"{ptr}/{a}/{b}", str(e)) from None
            parsed.append(prow)
        diffs[i] = PolyMatrix(R, want_r, want_c, parsed)
    return FreeComplex(R, lo, hi, ranks, diffs)


def loads(text: str) -> FreeComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("", f"invalid JSON: {e}") from None
    return from_dict(obj)


def load(path) -> FreeComplex:
    return loads(Path(path).read_text())


def save(c: FreeComplex, path):
    Path(path).write_text(dumps(c))
