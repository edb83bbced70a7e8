"""Fitting ideals, jumping ideals and the saturated jump loci V^i of a free complex."""

from __future__ import annotations

from dataclasses import dataclass, field

from .caps import Caps
from .chaincx import FreeComplex, euler_characteristic
from .groebner import DimensionResult, Ideal
from .polymat import determinantal_ideal
from .ring import QQ, evaluate

__all__ = ["LocusRecord", "JumpLocusSet", "fitting_ideal", "jumping_ideal", "jump_loci",
           "membership", "euler_characteristic"]


def _over_field(c: FreeComplex, notes=None) -> FreeComplex:
    if c.coeff.is_field:
        return c
    if notes is not None:
        notes.append("integer coefficients reduced to QQ")
    return c.with_coeff(QQ)


class _MinorIdeals:
    """Memoised I_k(d^i) for one complex; shared by neighbouring degrees."""

    def __init__(self, c: FreeComplex, caps: Caps | None):
        self.c = c
        self.caps = caps
        self._cache = {}

    def rank(self, i: int) -> int:
        return self.c.d(i).rank(self.caps)

    def get(self, i: int, k: int) -> Ideal:
        key = (i, k)
        if key not in self._cache:
            I = determinantal_ideal(self.c.d(i), k, self.caps)
            # saturating factors first keeps the later products small
            if not I.is_zero() and not I.is_unit():
                I = I.saturate_torus()
            self._cache[key] = I
        return self._cache[key]


def fitting_ideal(c: FreeComplex, i: int, caps: Caps | None = None) -> Ideal:
    """I^i = I_{rank d^i}(d^i), not saturated; <1> outside the degree range."""
    c = _over_field(c)
    A = c.d(i)
    return determinantal_ideal(A, A.rank(caps), caps)


def _jumping(m: _MinorIdeals, i: int) -> Ideal:
    c = m.c
    R = c.ring
    n = c.rank(i)
    if n == 0:
        return Ideal.unit(R)
    ra, rb = m.rank(i - 1), m.rank(i)
    if ra + rb < n:
        return Ideal.zero(R)
    # I_n(A (+) B) = sum over a + b = n of I_a(A) * I_b(B); terms with a > rank A or b > rank B vanish
    gens = []
    for a in range(max(0, n - rb), min(ra, n) + 1):
        Ia, Ib = m.get(i - 1, a), m.get(i, n - a)
        gens.extend(f * g for f in Ia.groebner_basis() for g in Ib.groebner_basis())
    J = Ideal(R, gens, m.caps)
    if J.is_zero():
        return J
    return J.saturate_torus()


def jumping_ideal(c: FreeComplex, i: int, caps: Caps | None = None) -> Ideal:
    """J^i = I_{rank F^i}(d^{i-1} (+) d^i), saturated at t1*...*tN."""
    return _jumping(_MinorIdeals(_over_field(c), caps), i)


@dataclass
class LocusRecord:
    degree: int
    ideal: Ideal
    rank_prev: int
    rank_next: int
    rank_module: int
    dim: DimensionResult

    @property
    def whole_torus(self) -> bool:
        return self.ideal.is_zero()

    @property
    def empty(self) -> bool:
        return self.dim.is_empty

    @property
    def generically_nonvanishing(self) -> bool:
        return self.rank_prev + self.rank_next < self.rank_module

    def generators(self):
        if self.ideal.is_zero():
            return ()
        return self.ideal.groebner_basis()

    def contains_point(self, point) -> bool:
        return all(not evaluate(g, point) for g in self.generators())

    def to_dict(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators()],
            "ranks": {"prev": self.rank_prev, "next": self.rank_next, "module": self.rank_module},
            "dim": self.dim.dim,
            "codim": self.dim.codim,
            "whole_torus": self.whole_torus,
            "empty": self.empty,
        }


@dataclass
class JumpLocusSet:
    complex: FreeComplex
    records: dict
    notes: list = field(default_factory=list)

    @property
    def ring(self):
        return self.complex.ring

    @property
    def lo(self):
        return self.complex.lo

    @property
    def hi(self):
        return self.complex.hi

    def __getitem__(self, i: int) -> LocusRecord | None:
        return self.records.get(i)

    def ideal(self, i: int) -> Ideal:
        rec = self.records.get(i)
        return rec.ideal if rec is not None else Ideal.unit(self.ring)

    def contains(self, i: int, point) -> bool:
        return membership(self, i, point)

    def euler_characteristic(self) -> int:
        return euler_characteristic(self.complex)

    def to_dict(self) -> dict:
        c = self.complex
        return {
            "ring": {"num_vars": c.num_vars, "coeff": c.coeff.to_json()},
            "lo": c.lo,
            "hi": c.hi,
            "euler_characteristic": euler_characteristic(c),
            "notes": list(self.notes),
            "degrees": {str(i): self.records[i].to_dict() for i in sorted(self.records)},
        }


def jump_loci(c: FreeComplex, caps: Caps | None = None) -> JumpLocusSet:
    notes = []
    c = _over_field(c, notes)
    m = _MinorIdeals(c, caps)
    records = {}
    for i in c.degrees:
        J = _jumping(m, i)
        rec = LocusRecord(i, J, m.rank(i - 1), m.rank(i), c.rank(i), J.dimension())
        if rec.generically_nonvanishing:
            notes.append(f"degree {i}: rank additivity fails, cohomology is generically nonzero")
        records[i] = rec
    return JumpLocusSet(c, records, notes)


def membership(locus: JumpLocusSet, i: int, point) -> bool:
    """Is the character in V^i? Degrees outside the complex have empty loci."""
    rec = locus.records.get(i)
    if rec is None:
        # still reject points that are not torus points
        evaluate(locus.ring.one(), point)
        return False
    return rec.contains_point(point)
