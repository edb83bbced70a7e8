"""Dense matrices of polynomials: fraction-free rank, minors, determinantal ideals."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .caps import Caps, check, default_caps
from .errors import RingMismatchError, ShapeMismatch
from .groebner import Ideal
from .ring import LaurentRing, Polynomial, evaluate, reduce_coefficients, QQ


class PolyMatrix:
    """rows x cols matrix over a LaurentRing; empty shapes (0 x k, k x 0) are allowed."""

    __slots__ = ("ring", "rows", "cols", "entries", "_rank")

    def __init__(self, ring: LaurentRing, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._rank = None
        if entries is None:
            zero = ring.zero()
            self.entries = tuple(tuple(zero for _ in range(cols)) for _ in range(rows))
            return
        rows_ = []
        for r in entries:
            row = []
            for x in r:
                if isinstance(x, str):
                    x = ring.parse(x)
                elif not isinstance(x, Polynomial):
                    x = ring.constant(x)
                elif x.ring != ring:
                    raise RingMismatchError(f"entry {x} is not in {ring}")
                row.append(x)
            if len(row) != cols:
                raise ValueError(f"row of length {len(row)} in a matrix with {cols} columns")
            rows_.append(tuple(row))
        if len(rows_) != rows:
            raise ValueError(f"{len(rows_)} rows given for a matrix with {rows} rows")
        self.entries = tuple(rows_)

    @classmethod
    def from_rows(cls, ring, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), cols, rows)

    @classmethod
    def zeros(cls, ring, rows, cols):
        return cls(ring, rows, cols)

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one(), ring.zero()
        return cls(ring, n, n, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"

    def to_lists(self):
        return [[str(x) for x in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def map(self, fn, ring=None) -> "PolyMatrix":
        ring = ring or self.ring
        return PolyMatrix(ring, self.rows, self.cols, [[fn(x) for x in row] for row in self.entries])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    T = property(transpose)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise ShapeMismatch(0, f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.ring, self.rows, self.cols,
                          [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, c) -> "PolyMatrix":
        if isinstance(c, Polynomial):
            return self.map(lambda x: x * c)
        return self.map(lambda x: x.scale(c))

    def _same(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected a PolyMatrix")
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other) -> "PolyMatrix":
        self._same(other)
        if self.cols != other.rows:
            raise ShapeMismatch(0, f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, self.rows, other.cols, out)

    def hstack(self, other) -> "PolyMatrix":
        self._same(other)
        if self.rows != other.rows:
            raise ShapeMismatch(0, f"cannot stack {self.shape} beside {other.shape}")
        return PolyMatrix(self.ring, self.rows, self.cols + other.cols,
                          [r1 + r2 for r1, r2 in zip(self.entries, other.entries)])

    def vstack(self, other) -> "PolyMatrix":
        self._same(other)
        if self.cols != other.cols:
            raise ShapeMismatch(0, f"cannot stack {self.shape} above {other.shape}")
        return PolyMatrix(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    def evaluate(self, point):
        return [[evaluate(x, point) for x in row] for row in self.entries]

    def reduce_coefficients(self, target) -> "PolyMatrix":
        ring = self.ring.with_coeff(target)
        return PolyMatrix(ring, self.rows, self.cols,
                          [[reduce_coefficients(x, target) for x in row] for row in self.entries])

    def change_ring(self, ring, offset=0) -> "PolyMatrix":
        return self.map(lambda x: x.change_ring(ring, offset), ring)

    def rank(self, caps: Caps | None = None) -> int:
        if self._rank is None:
            self._rank = rank(self, caps)
        return self._rank

    def minor(self, rows, cols) -> Polynomial:
        return _MinorCache(self).det(tuple(rows), tuple(cols))


def block_diagonal(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    """[[A, 0], [0, B]]."""
    if A.ring != B.ring:
        raise RingMismatchError(f"ring mismatch: {A.ring} vs {B.ring}")
    zero = A.ring.zero()
    rows = [list(r) + [zero] * B.cols for r in A.entries]
    rows += [[zero] * A.cols + list(r) for r in B.entries]
    return PolyMatrix(A.ring, A.rows + B.rows, A.cols + B.cols, rows)


def kronecker(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.ring != B.ring:
        raise RingMismatchError(f"ring mismatch: {A.ring} vs {B.ring}")
    rows = []
    for i in range(A.rows):
        for k in range(B.rows):
            rows.append([A.entries[i][j] * B.entries[k][l] for j in range(A.cols) for l in range(B.cols)])
    return PolyMatrix(A.ring, A.rows * B.rows, A.cols * B.cols, rows)


def rank(A: PolyMatrix, caps: Caps | None = None) -> int:
    """Rank over the fraction field by fraction-free (Bareiss) elimination with full pivoting."""
    caps = caps or default_caps()
    if not A.ring.coeff.is_field:
        A = A.reduce_coefficients(QQ)
    M = [list(row) for row in A.entries]
    nr, nc = A.rows, A.cols
    prev = A.ring.one()
    r = 0
    while r < nr and r < nc:
        best = None
        for i in range(r, nr):
            for j in range(r, nc):
                x = M[i][j]
                if x:
                    cost = (x.total_degree(), len(x.terms))
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
        if best is None:
            break
        _, pi, pj = best
        M[r], M[pi] = M[pi], M[r]
        if pj != r:
            for row in M:
                row[r], row[pj] = row[pj], row[r]
        piv = M[r][r]
        for i in range(r + 1, nr):
            a = M[i][r]
            for j in range(r + 1, nc):
                x = piv * M[i][j]
                if a and M[r][j]:
                    x = x - a * M[r][j]
                if x and r > 0:
                    x = x.exact_divide(prev)
                check(x.total_degree(), caps.max_degree, "entry degree during Bareiss elimination")
                M[i][j] = x
            M[i][r] = A.ring.zero()
        prev = piv
        r += 1
    return r


class _MinorCache:
    """Laplace expansion along the first row with memoised sub-minors."""

    def __init__(self, A):
        self.A = A
        self.memo = {}

    def det(self, rows, cols):
        k = len(rows)
        if k == 0:
            return self.A.ring.one()
        if k == 1:
            return self.A.entries[rows[0]][cols[0]]
        key = (rows, cols)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        r0 = rows[0]
        sub_rows = rows[1:]
        acc = self.A.ring.zero()
        for idx, c in enumerate(cols):
            a = self.A.entries[r0][c]
            if not a:
                continue
            sub = self.det(sub_rows, cols[:idx] + cols[idx + 1:])
            if sub:
                acc = acc + a * sub if idx % 2 == 0 else acc - a * sub
        self.memo[key] = acc
        return acc


def minors(A: PolyMatrix, k: int, caps: Caps | None = None):
    """All k x k minors, in lexicographic order of (row subset, column subset)."""
    caps = caps or default_caps()
    if k < 0:
        raise ValueError("minor size must be non-negative")
    if k == 0:
        return [A.ring.one()]
    if k > min(A.rows, A.cols):
        return []
    check(comb(A.rows, k) * comb(A.cols, k), caps.max_minors, f"number of {k}x{k} minors")
    cache = _MinorCache(A)
    return [cache.det(R, C) for R in combinations(range(A.rows), k)
            for C in combinations(range(A.cols), k)]


def determinantal_ideal(A: PolyMatrix, k: int, caps: Caps | None = None) -> Ideal:
    """I_k(A): the ideal of k x k minors; I_0 = <1>, and <0> when k > min(rows, cols)."""
    gens = []
    seen = set()
    for m in minors(A, k, caps):
        if not m:
            continue
        m = m.primitive() if A.ring.coeff.kind != "ZZ" else m
        if m not in seen:
            seen.add(m)
            gens.append(m)
    return Ideal(A.ring, gens, caps)
