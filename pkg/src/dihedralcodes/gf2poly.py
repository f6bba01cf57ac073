"""Dense polynomial arithmetic over GF(2).

Polynomials are plain nonnegative Python ints, bit-packed with bit j
holding the coefficient of x^j.  So ``0b111`` is 1 + x + x^2, addition
is ``^``, and the zero polynomial is ``0``.  Python ints are
arbitrary-precision, so there is no degree limit.

The textual form used for I/O everywhere in this package is the
ascending-coefficient bitstring: ``"1110"`` is 1 + x + x^2 (digit j is
the coefficient of x^j).
"""

from __future__ import annotations

__all__ = [
    "ZERO_DEGREE",
    "degree",
    "mul",
    "divmod_",
    "mod",
    "gcd",
    "xgcd",
    "powmod",
    "invmod",
    "reciprocal",
    "substitute",
    "inflate",
    "is_irreducible",
    "to_bits",
    "from_bits",
    "to_terms",
]

# Degree of the zero polynomial; a sentinel rather than -1 so that degree
# comparisons in division never underflow into "valid" values.
ZERO_DEGREE = -(1 << 30)


def degree(a: int) -> int:
    """Degree of a (ZERO_DEGREE sentinel for the zero polynomial)."""
    return a.bit_length() - 1 if a else ZERO_DEGREE


def mul(a: int, b: int) -> int:
    """Carryless (GF(2)) product of a and b."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b, b != 0."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def mod(a: int, b: int) -> int:
    """a reduced modulo b, b != 0."""
    return divmod_(a, b)[1]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g = gcd(a, b)."""
    if a == 0 and b == 0:
        raise ValueError("gcd of two zero polynomials")
    u, u1 = 1, 0
    v, v1 = 0, 1
    while b:
        q, r = divmod_(a, b)
        a, b = b, r
        u, u1 = u1, u ^ mul(q, u1)
        v, v1 = v1, v ^ mul(q, v1)
    return a, u, v


def powmod(a: int, n: int, m: int) -> int:
    """a**n mod m for n >= 0, m != 0."""
    if m == 0:
        raise ZeroDivisionError("zero modulus")
    r = 1 if m.bit_length() > 1 else 0
    a = mod(a, m)
    while n:
        if n & 1:
            r = mod(mul(r, a), m)
        a = mod(mul(a, a), m)
        n >>= 1
    return r


def invmod(a: int, m: int) -> int:
    """Inverse of a modulo m; raises if gcd(a, m) != 1."""
    g, u, _ = xgcd(a, m)
    if g != 1:
        raise ZeroDivisionError("inverse does not exist")
    return mod(u, m)


def reciprocal(g: int) -> int:
    """Coefficient reversal x^deg(g) * g(1/x); g != 0."""
    if g == 0:
        raise ValueError("reciprocal of zero polynomial")
    r = 0
    d = g.bit_length() - 1
    for i in range(d + 1):
        if (g >> i) & 1:
            r |= 1 << (d - i)
    return r


def substitute(a: int, g: int, m: int) -> int:
    """a(g) mod m by Horner evaluation, m != 0."""
    if m == 0:
        raise ZeroDivisionError("zero modulus")
    r = 0
    for i in range(a.bit_length() - 1, -1, -1):
        r = mod(mul(r, g), m)
        if (a >> i) & 1:
            r ^= 1
    return mod(r, m)


def inflate(a: int, k: int) -> int:
    """a(x^k): spread the coefficient bits k positions apart."""
    if k < 1:
        raise ValueError("k must be positive")
    r = 0
    j = 0
    while a:
        if a & 1:
            r |= 1 << (j * k)
        a >>= 1
        j += 1
    return r


def is_irreducible(a: int) -> bool:
    """Rabin-style irreducibility test over GF(2)."""
    d = a.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    # x^(2^d) == x mod a, and x^(2^(d/p)) - x coprime to a for prime p | d
    b = powmod(2, 1 << d, a)
    if b != 2:
        return False
    for p in _prime_factors(d):
        b = powmod(2, 1 << (d // p), a)
        if gcd(b ^ 2, a) != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def to_bits(a: int, width: int | None = None) -> str:
    """Ascending-coefficient bitstring ("1110" = 1 + x + x^2)."""
    if width is None:
        width = max(a.bit_length(), 1)
    if a >> width:
        raise ValueError(f"polynomial does not fit in width {width}")
    return "".join("1" if (a >> j) & 1 else "0" for j in range(width))


def from_bits(s: str) -> int:
    """Parse an ascending-coefficient bitstring."""
    s = s.strip()
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a bitstring: {s!r}")
    return int(s[::-1], 2)


def to_terms(a: int) -> str:
    """Human-readable sum of powers, e.g. '1+x+x^2'."""
    if a == 0:
        return "0"
    parts = []
    for j in range(a.bit_length()):
        if (a >> j) & 1:
            parts.append("1" if j == 0 else ("x" if j == 1 else f"x^{j}"))
    return "+".join(parts)
