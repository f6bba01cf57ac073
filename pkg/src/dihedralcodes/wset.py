"""Solution sets W^(s) of w(x)*w(x^-1) = 1 in F2[x]/<f^s>.

These sets drive the whole enumeration: the self-dual component
templates draw their free unit parameters from them.  For f = x+1 the
levels are climbed with the parity-split lift; for self-reciprocal f of
even degree the base level is the norm-1 subgroup of the residue field
and each lift multiplies the set size by 2^(d/2) via trace preimages.

Sets are canonical: ascending bit-packed order, deduplicated.  They are
intrinsic to (f, s) - independent of which 4m the ambient ring came
from - which the tests check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2poly as gp
from .chainring import ChainRingCtx

__all__ = [
    "FieldCtx",
    "WSet",
    "wset_base",
    "trace_preimage",
    "wset_lift_selfrec",
    "wset_lift_zero",
    "wset_bruteforce",
    "wset_chain",
]

BRUTEFORCE_BOUND = 1 << 24


@dataclass(frozen=True)
class WSet:
    """Canonically sorted W^(s) for the ctx's factor at the given level."""

    ctx: ChainRingCtx
    level: int
    elems: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, v: int) -> bool:
        return v in set(self.elems)


class FieldCtx:
    """The residue field K = F2[x]/<f> of a self-reciprocal factor.

    Carries a primitive element, the index-2 subfield, and a full trace
    preimage table (exhaustive scan; fields are tiny at this scale).
    """

    def __init__(self, f: int):
        d = gp.degree(f)
        if d < 2 or d % 2:
            raise ValueError("residue field context needs even degree >= 2")
        if gp.reciprocal(f) != f:
            raise ValueError("factor is not self-reciprocal")
        self.f = f
        self.d = d
        self.half = d // 2
        self.zeta = self._find_primitive()
        self.subfield = frozenset(
            beta for beta in range(1 << d) if gp.powmod(beta, 1 << self.half, f) == beta
        )
        self._preimages: dict[int, tuple[int, ...]] = {}
        for beta in range(1 << d):
            gamma = gp.powmod(beta, 1 << self.half, f) ^ beta
            self._preimages.setdefault(gamma, ())
            self._preimages[gamma] += (beta,)

    def _find_primitive(self) -> int:
        order = (1 << self.d) - 1
        primes = gp._prime_factors(order)
        for z in range(2, 1 << self.d):
            if all(gp.powmod(z, order // p, self.f) != 1 for p in primes):
                return z
        raise AssertionError("no primitive element found")

    def trace(self, beta: int) -> int:
        return gp.powmod(beta, 1 << self.half, self.f) ^ beta


def trace_preimage(fctx: FieldCtx, gamma: int) -> tuple[int, ...]:
    """All beta in K with beta^(2^(d/2)) + beta = gamma; gamma must lie in the subfield."""
    if gamma not in fctx.subfield:
        raise ValueError("gamma is not in the subfield")
    return fctx._preimages[gamma]


def wset_base(ctx: ChainRingCtx) -> WSet:
    """W^(1): {1} for f = x+1, the norm-1 subgroup of K otherwise."""
    if ctx.f == 0b11:
        return WSet(ctx, 1, (1,))
    if gp.reciprocal(ctx.f) != ctx.f:
        raise ValueError("W-sets are only defined for self-reciprocal factors")
    fctx = FieldCtx(ctx.f)
    h = 1 << fctx.half
    elems = {gp.powmod(fctx.zeta, (h - 1) * l, ctx.f) for l in range(h + 1)}
    return WSet(ctx, 1, tuple(sorted(elems)))


def _lift_data(ctx: ChainRingCtx, a: int, s: int) -> int:
    """The digit b with a(x)*a(x^-1) = 1 + b*f^(s-1) mod f^s, reduced mod f."""
    ms = ctx.fpow[s]
    u = ctx.inv_substitute_int(a, s)
    p = gp.mod(gp.mul(a, u), ms)
    q, r = gp.divmod_(p ^ 1, ctx.fpow[s - 1])
    if r:
        raise ArithmeticError("element is not in W at the previous level")
    return gp.mod(q, ctx.f)


def wset_lift_selfrec(fctx: FieldCtx, ctx: ChainRingCtx, w: WSet) -> WSet:
    """Lift W^(s-1) -> W^(s) for a self-reciprocal factor (levels 2..2^lam)."""
    s = w.level + 1
    if not 2 <= s <= ctx.nil:
        raise ValueError(f"target level {s} out of range")
    f = ctx.f
    half = fctx.half
    fs1 = ctx.fpow[s - 1]
    xpow = gp.powmod(2, (s - 1) * half, f)
    # x^(4m - (s-1)d/2) mod f; 4m dominates the correction at this scale
    zscale = gp.powmod(2, ctx.fourm - (s - 1) * half, f)
    out = set()
    for a in w.elems:
        b = _lift_data(ctx, a, s)
        gamma = gp.mod(gp.mul(xpow, b), f)
        a1 = gp.mod(a, f)
        za = gp.mod(gp.mul(zscale, a1), f)
        for beta in trace_preimage(fctx, gamma):
            z = gp.mod(gp.mul(za, beta), f)
            out.add(a ^ gp.mul(z, fs1))
    return WSet(ctx, s, tuple(sorted(out)))


def wset_lift_zero(ctx: ChainRingCtx, w: WSet) -> WSet:
    """Lift W^(s-1) -> W^(s) for f = x+1: keep a iff its digit vanishes,
    and then both a and a + (x+1)^(s-1) belong to the next level."""
    s = w.level + 1
    if not 2 <= s <= ctx.nil:
        raise ValueError(f"target level {s} out of range")
    fs1 = ctx.fpow[s - 1]
    out = []
    for a in w.elems:
        if _lift_data(ctx, a, s) == 0:
            out.append(a)
            out.append(a ^ fs1)
    return WSet(ctx, s, tuple(sorted(set(out))))


def wset_chain(ctx: ChainRingCtx, smax: int | None = None) -> list[WSet]:
    """[W^(1), ..., W^(smax)] computed by the appropriate recursion."""
    if smax is None:
        smax = ctx.nil
    chain = [wset_base(ctx)]
    if ctx.f == 0b11:
        while chain[-1].level < smax:
            chain.append(wset_lift_zero(ctx, chain[-1]))
    else:
        fctx = FieldCtx(ctx.f)
        while chain[-1].level < smax:
            chain.append(wset_lift_selfrec(fctx, ctx, chain[-1]))
    return chain


def wset_bruteforce(ctx: ChainRingCtx, s: int, bound: int = BRUTEFORCE_BOUND) -> WSet:
    """Scan all of F2[x]/<f^s> for solutions; the oracle for the recursions."""
    bits = s * ctx.d
    if (1 << bits) > bound:
        raise ValueError(
            f"brute force would scan 2^{bits} elements; use the recursion instead"
        )
    ms = ctx.fpow[s]
    tab = ctx._inv_table(s)
    out = []
    for w in range(1 << bits):
        v, r, j = w, 0, 0
        while v:
            if v & 1:
                r ^= tab[j]
            v >>= 1
            j += 1
        if gp.mod(gp.mul(w, r), ms) == 1:
            out.append(w)
    return WSet(ctx, s, tuple(out))
