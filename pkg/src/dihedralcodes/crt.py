"""Primitive idempotents of F2[x]/<x^4m - 1> and concatenated assembly.

The ring F2[x]/<x^4m - 1> splits as a direct sum of ideals, one per
irreducible factor f_i of x^m0 - 1, each generated by an idempotent
eps_i built from a Bezout identity for (x^m0 - 1)/f_i and f_i evaluated
at x^(2^lam).  A length-2 code over the component ring embeds into
binary rows of length 8m by multiplying through eps_i: each generator
row (xi0, xi1) of f-degree t yields (2^lam - t)*d_i rows
(x^l*eps_i*xi0 || x^l*eps_i*xi1).

Binary row convention: an 8m-bit int with bit p (p < 4m) the x^p
coefficient of the first half and bit 4m+p that of the second half.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf2poly as gp
from .chainring import ChainRingCtx, RingElem
from .cyclofactor import FactorSystem, Params

__all__ = ["IdempotentSystem", "compute_idempotents", "mu", "concat_embed", "assemble_rows"]


@dataclass(frozen=True)
class IdempotentSystem:
    fourm: int
    eps: tuple[int, ...]


def compute_idempotents(params: Params, fs: FactorSystem) -> IdempotentSystem:
    """eps_i = u_i(x^2^lam) * F_i(x^2^lam) mod x^4m - 1 from Bezout data."""
    fourm = params.fourm
    ring = (1 << fourm) | 1
    m0poly = (1 << fs.m0) | 1
    eps = []
    for f in fs.factors:
        big_f, rem = gp.divmod_(m0poly, f)
        assert rem == 0
        g, u, _v = gp.xgcd(big_f, f)
        if g != 1:
            raise ArithmeticError("cyclotomic factors are not coprime")
        e = gp.mod(gp.mul(gp.inflate(u, params.nil), gp.inflate(big_f, params.nil)), ring)
        eps.append(e)
    return IdempotentSystem(fourm=fourm, eps=tuple(eps))


def mu(fs: FactorSystem, i: int) -> int:
    """Index permutation induced by x -> x^-1: identity on self-reciprocal
    factors, swap within reciprocal pairs."""
    return fs.partner(i)


def concat_embed(
    ids: IdempotentSystem,
    ctx: ChainRingCtx,
    i: int,
    rows: Sequence[tuple[RingElem, RingElem]],
    tdegs: Sequence[int] | None = None,
) -> list[int]:
    """Binary basis rows of the concatenation of component i's code.

    Each generator row contributes (2^lam - t)*d rows; zero rows
    (t = 2^lam) contribute nothing.
    """
    ring = (1 << ids.fourm) | 1
    eps = ids.eps[i]
    out = []
    for r, row in enumerate(rows):
        x0, x1 = row
        t = ctx.f_degree(x0, x1)
        if tdegs is not None and tdegs[r] != t:
            raise ValueError(f"row {r}: declared f-degree {tdegs[r]} but computed {t}")
        e0 = gp.mod(gp.mul(eps, x0.value), ring)
        e1 = gp.mod(gp.mul(eps, x1.value), ring)
        for l in range((ctx.nil - t) * ctx.d):
            left = gp.mod(e0 << l, ring)
            right = gp.mod(e1 << l, ring)
            out.append(left | (right << ids.fourm))
    return out


def assemble_rows(
    ids: IdempotentSystem,
    parts: Sequence[tuple[int, ChainRingCtx, Sequence[tuple[RingElem, RingElem]]]],
) -> list[int]:
    """Stack concat_embed outputs in factor-index order.

    parts: (factor index, its ring ctx, generator rows).  The caller
    checks the resulting rank; rank deficiency signals a malformed
    component.
    """
    if not parts:
        raise ValueError("no components to assemble")
    out = []
    for i, ctx, rows in sorted(parts, key=lambda p: p[0]):
        out.extend(concat_embed(ids, ctx, i, rows))
    return out
