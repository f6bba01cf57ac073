"""Factoring x^m0 - 1 over GF(2) by 2-cyclotomic cosets.

For odd m0, x^m0 - 1 is squarefree and its irreducible factors are the
minimal polynomials of the 2-cyclotomic cosets mod m0.  The factors get
a fixed canonical ordering: x+1 first, then the self-reciprocal factors
ascending by (degree, bit-packed value), then one representative per
reciprocal pair ascending the same way, with each pair's reciprocal
partner placed epsilon positions later.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2poly as gp

__all__ = ["Params", "FactorSystem", "derive_params", "factor_cyclotomic"]


@dataclass(frozen=True)
class Params:
    """Split m = 2^lambda0 * m0 with m0 odd; lam = lambda0 + 2."""

    m: int
    m0: int
    lambda0: int
    lam: int

    @property
    def fourm(self) -> int:
        return 4 * self.m

    @property
    def half(self) -> int:
        """2^(lam-1), the middle exponent of the chain."""
        return 1 << (self.lam - 1)

    @property
    def nil(self) -> int:
        """2^lam, the nilpotency index (top power of each factor)."""
        return 1 << self.lam


def derive_params(m: int) -> Params:
    if m < 1:
        raise ValueError("m must be a positive integer")
    m0, lambda0 = m, 0
    while m0 % 2 == 0:
        m0 //= 2
        lambda0 += 1
    return Params(m=m, m0=m0, lambda0=lambda0, lam=lambda0 + 2)


@dataclass(frozen=True)
class FactorSystem:
    """Ordered irreducible factorization of x^m0 - 1 with pairing data.

    factors[0] = x+1.  factors[1..rho] are self-reciprocal.  For
    1 <= j <= eps, factors[rho+j] and factors[rho+j+eps] are reciprocals
    of each other, sharing a degree.
    """

    m0: int
    factors: tuple[int, ...]
    degrees: tuple[int, ...]
    rho: int
    eps: int

    @property
    def r(self) -> int:
        return self.rho + 2 * self.eps

    def partner(self, i: int) -> int:
        """The index mu(i): fixed on [0, rho], swapped on pairs."""
        if not 0 <= i <= self.r:
            raise ValueError(f"factor index {i} out of range")
        if i <= self.rho:
            return i
        return i + self.eps if i <= self.rho + self.eps else i - self.eps

    def pair_indices(self) -> list[int]:
        """First members of reciprocal pairs: rho+1 .. rho+eps."""
        return list(range(self.rho + 1, self.rho + self.eps + 1))


def _cyclotomic_cosets(m0: int) -> list[list[int]]:
    seen = [False] * m0
    cosets = []
    for s in range(m0):
        if seen[s]:
            continue
        coset = []
        j = s
        while not seen[j]:
            seen[j] = True
            coset.append(j)
            j = (2 * j) % m0
        cosets.append(coset)
    return cosets


def _find_irreducible(degree: int) -> int:
    # smallest irreducible of given degree, ascending bit-packed scan
    for a in range(1 << degree, 1 << (degree + 1)):
        if gp.is_irreducible(a):
            return a
    raise AssertionError("no irreducible polynomial found")


def _element_of_order(m0: int, g: int, e: int) -> int:
    """Element of multiplicative order exactly m0 in F2[y]/<g>, |field| = 2^e."""
    cof = ((1 << e) - 1) // m0
    primes = gp._prime_factors(m0)
    for c in range(2, 1 << e):
        beta = gp.powmod(c, cof, g)
        if all(gp.powmod(beta, m0 // p, g) != 1 for p in primes):
            return beta
    raise AssertionError("no element of the required order")


def _coset_minpoly(coset: list[int], beta: int, g: int) -> int:
    # prod_{j in coset} (x - beta^j), coefficients in F2[y]/<g>, must land in GF(2)
    coeffs = [1]  # ascending, field elements
    for j in coset:
        root = gp.powmod(beta, j, g)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] ^= c
            nxt[k] ^= gp.mod(gp.mul(c, root), g)
        coeffs = nxt
    out = 0
    for k, c in enumerate(coeffs):
        if c not in (0, 1):
            raise AssertionError("coset minimal polynomial not binary")
        out |= c << k
    return out


def factor_cyclotomic(m0: int) -> FactorSystem:
    """Factor x^m0 - 1 into irreducibles with the canonical ordering."""
    if m0 < 1 or m0 % 2 == 0:
        raise ValueError("m0 must be an odd positive integer")
    if m0 == 1:
        return FactorSystem(m0=1, factors=(0b11,), degrees=(1,), rho=0, eps=0)

    # multiplicative order of 2 mod m0
    e = 1
    while pow(2, e, m0) != 1:
        e += 1
    g = _find_irreducible(e)
    beta = _element_of_order(m0, g, e) if m0 > 1 else 1

    polys = {}
    for coset in _cyclotomic_cosets(m0):
        f = _coset_minpoly(coset, beta, g)
        polys[f] = len(coset)

    assert sum(polys.values()) == m0
    f0 = 0b11
    assert f0 in polys

    selfrec = []
    pairs = []
    rest = set(polys) - {f0}
    while rest:
        f = min(rest)
        fstar = gp.reciprocal(f)
        if fstar == f:
            selfrec.append(f)
            rest.remove(f)
        else:
            assert fstar in rest
            pairs.append((min(f, fstar), max(f, fstar)))
            rest.remove(f)
            rest.remove(fstar)
    selfrec.sort(key=lambda f: (f.bit_length(), f))
    pairs.sort(key=lambda p: (p[0].bit_length(), p[0]))

    factors = [f0] + selfrec + [p[0] for p in pairs] + [p[1] for p in pairs]
    degrees = tuple(f.bit_length() - 1 for f in factors)
    return FactorSystem(
        m0=m0,
        factors=tuple(factors),
        degrees=degrees,
        rho=len(selfrec),
        eps=len(pairs),
    )
