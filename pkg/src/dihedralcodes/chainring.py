"""Arithmetic in the chain rings F2[x]/<f^s> for f an irreducible factor of x^m0 - 1.

A ChainRingCtx fixes the factor f (of degree d), the tower height
2^lam, and 4m.  Because f^(2^lam) divides x^4m - 1, the class of x is a
unit with x^-1 = x^(4m-1) in every quotient level s <= 2^lam.  The ctx
precomputes, per level, the images of the monomials under x -> x^-1, so
inverse substitution is a fold of XORs (it is the hot inner call of the
W-set machinery).

Ring elements are level-tagged: moving s -> s' > s is the identity on
values, lowering reduces mod f^s'.  The tag exists because the
surrounding algebra constantly moves between quotients and silent
coercion is a bug source.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import gf2poly as gp

__all__ = ["ChainRingCtx", "RingElem", "make_ctx"]


@dataclass(frozen=True)
class RingElem:
    """An element of F2[x]/<f^level>, value reduced mod f^level."""

    value: int
    level: int


class ChainRingCtx:
    """F2[x]/<f^(2^lam)> and its quotient levels, with x^-1 data."""

    def __init__(self, f: int, lam: int, fourm: int):
        if lam < 2:
            raise ValueError("lam must be at least 2")
        d = gp.degree(f)
        if d < 1:
            raise ValueError("f must be non-constant")
        self.f = f
        self.d = d
        self.lam = lam
        self.nil = 1 << lam
        self.fourm = fourm
        # f^s for s = 0 .. 2^lam
        self.fpow = [1]
        for _ in range(self.nil):
            self.fpow.append(gp.mul(self.fpow[-1], f))
        if gp.mod((1 << fourm) | 1, self.fpow[self.nil]) != 0:
            raise ValueError("f^(2^lam) does not divide x^4m - 1")
        # per-level inverse-substitution tables: _inv[s][j] = x^(-j) mod f^s
        self._inv: dict[int, list[int]] = {}

    def _inv_table(self, s: int) -> list[int]:
        tab = self._inv.get(s)
        if tab is None:
            ms = self.fpow[s]
            xinv = gp.powmod(2, self.fourm - 1, ms)
            tab = [1]
            for _ in range(1, s * self.d):
                tab.append(gp.mod(gp.mul(tab[-1], xinv), ms))
            self._inv[s] = tab
        return tab

    # -- level bookkeeping

    def elem(self, value: int, level: int) -> RingElem:
        if not 1 <= level <= self.nil:
            raise ValueError(f"level {level} out of range 1..{self.nil}")
        return RingElem(gp.mod(value, self.fpow[level]), level)

    def at_level(self, a: RingElem, level: int) -> RingElem:
        """Move a to another level (lift is identity, lowering reduces)."""
        return self.elem(a.value, level)

    # -- ring operations

    def mul(self, a: RingElem, b: RingElem) -> RingElem:
        if a.level != b.level:
            raise ValueError(f"level mismatch: {a.level} != {b.level}")
        return RingElem(gp.mod(gp.mul(a.value, b.value), self.fpow[a.level]), a.level)

    def add(self, a: RingElem, b: RingElem) -> RingElem:
        if a.level != b.level:
            raise ValueError(f"level mismatch: {a.level} != {b.level}")
        return RingElem(a.value ^ b.value, a.level)

    def inv_substitute(self, a: RingElem) -> RingElem:
        """a(x^-1) in the same quotient, via the precomputed tables."""
        return RingElem(self.inv_substitute_int(a.value, a.level), a.level)

    def inv_substitute_int(self, v: int, s: int) -> int:
        tab = self._inv_table(s)
        r = 0
        j = 0
        while v:
            if v & 1:
                r ^= tab[j]
            v >>= 1
            j += 1
        return r

    def f_adic_expand(self, a: RingElem) -> list[int]:
        """Digits (a_0..a_{s-1}), each of degree < d, with a = sum a_j f^j."""
        digits = []
        v = a.value
        for _ in range(a.level):
            q, r = gp.divmod_(v, self.f)
            digits.append(r)
            v = q
        assert v == 0
        return digits

    def f_degree_int(self, v: int) -> int:
        """Least index of a nonzero f-adic digit (2^lam for zero)."""
        if v == 0:
            return self.nil
        t = 0
        while True:
            q, r = gp.divmod_(v, self.f)
            if r:
                return t
            t += 1
            v = q

    def f_degree(self, *elems: RingElem) -> int:
        """f-adic valuation; for several elements, the minimum."""
        if not elems:
            raise ValueError("need at least one element")
        return min(self.f_degree_int(e.value) for e in elems)

    def is_unit(self, a: RingElem) -> bool:
        return gp.mod(a.value, self.f) != 0

    def unit_inverse(self, a: RingElem) -> RingElem:
        if not self.is_unit(a):
            raise ZeroDivisionError("not a unit (divisible by f)")
        return RingElem(gp.invmod(a.value, self.fpow[a.level]), a.level)

    @cached_property
    def xinv_top(self) -> int:
        """x^(4m-1) reduced mod f^(2^lam)."""
        return gp.powmod(2, self.fourm - 1, self.fpow[self.nil])

    def __repr__(self) -> str:
        return f"ChainRingCtx(f={gp.to_terms(self.f)}, d={self.d}, lam={self.lam}, fourm={self.fourm})"


def make_ctx(f: int, lam: int, fourm: int) -> ChainRingCtx:
    return ChainRingCtx(f, lam, fourm)
