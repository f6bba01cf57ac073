"""Binary linear code analytics: rank, duality, weights, distance.

Rows are bit-packed ints (bit j = coordinate j).  Rank / RREF /
nullspace work directly on ints; the exhaustive codeword sweeps pack
rows into uint64 words and walk the message space in Gray-code order in
numpy blocks, so each codeword costs one vectorized XOR plus popcount.
Distance work is capped at dimension 30: 2^30 visits is the intended
exhaustive ceiling, larger codes are rejected rather than approximated.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BinaryCode",
    "WeightEnumerator",
    "rank_f2",
    "rref_f2",
    "nullspace_f2",
    "is_self_dual",
    "is_self_orthogonal",
    "is_doubly_even",
    "weight_enumerator",
    "min_distance",
    "MAX_SWEEP_DIM",
]

MAX_SWEEP_DIM = 30
_BLOCK_BITS = 20


@dataclass(frozen=True)
class BinaryCode:
    """A binary [n, k] code given by k independent generator rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if any(r >> self.n for r in self.rows):
            raise ValueError("row exceeds code length")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, n: int, rows) -> "BinaryCode":
        rows = tuple(rows)
        code = cls(n, rows)
        if rank_f2(rows) != len(rows):
            raise ValueError("generator rows are not linearly independent")
        return code


@dataclass(frozen=True)
class WeightEnumerator:
    """counts[w] = number of codewords of Hamming weight w."""

    counts: tuple[int, ...]

    def distance(self) -> int:
        for w, c in enumerate(self.counts):
            if w and c:
                return w
        raise ValueError("zero code has no minimum distance")

    def total(self) -> int:
        return sum(self.counts)


def rank_f2(rows) -> int:
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def rref_f2(rows) -> tuple[int, ...]:
    """Reduced row echelon form, rows sorted by leading bit descending."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r ^ b < r:
                r ^= b
        if r:
            # back-substitute to clear the new pivot from earlier rows
            basis = [b ^ r if (b ^ r) < b else b for b in basis]
            basis.append(r)
            basis.sort(reverse=True)
    return tuple(basis)


def nullspace_f2(rows, n: int) -> tuple[int, ...]:
    """Basis of the dual space {v : v . r = 0 for all rows r}."""
    basis = rref_f2(rows)
    pivots = [b.bit_length() - 1 for b in basis]
    pivot_set = set(pivots)
    out = []
    for c in range(n):
        if c in pivot_set:
            continue
        v = 1 << c
        for b, p in zip(basis, pivots):
            if (b >> c) & 1:
                v |= 1 << p
        out.append(v)
    return tuple(out)


def is_self_orthogonal(code: BinaryCode) -> bool:
    rows = code.rows
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_self_dual(code: BinaryCode) -> bool:
    return code.n == 2 * code.k and is_self_orthogonal(code)


def is_doubly_even(code: BinaryCode) -> bool:
    """All codeword weights divisible by 4.

    For a self-orthogonal binary code this holds iff every generator row
    has weight divisible by 4; both the row weights and the pairwise
    even-intersection condition are checked explicitly.
    """
    rows = code.rows
    if any(r.bit_count() % 4 for r in rows):
        return False
    return is_self_orthogonal(code)


def _pack(code: BinaryCode) -> np.ndarray:
    words = (code.n + 63) // 64
    mat = np.zeros((code.k, words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(code.rows):
        for w in range(words):
            mat[i, w] = (r >> (64 * w)) & mask
    return mat


def _sweep_worker(base, prefix_rows, start, stop, n, hist, abort_below):
    """Sweep prefix values [start, stop) in Gray order over a fixed base block.

    Returns (histogram or None, min nonzero weight seen, abort witness weight or None).
    """
    words = base.shape[1]
    counts = np.zeros(n + 1, dtype=np.int64) if hist else None
    offset = np.zeros(words, dtype=np.uint64)
    g = start ^ (start >> 1)  # Gray code of the first prefix
    for i, row in enumerate(prefix_rows):
        if (g >> i) & 1:
            offset ^= row
    tmp = np.empty_like(base)
    wt8 = np.empty(base.shape[0], dtype=np.uint8)
    best = n + 1
    includes_zero_word = start == 0
    for step in range(start, stop):
        if step != start:
            flip = ((step - 1) ^ step).bit_length() - 1  # bit changing at this Gray step
            offset ^= prefix_rows[flip]
        np.bitwise_xor(base, offset[np.newaxis, :], out=tmp)
        if words == 1:
            np.bitwise_count(tmp[:, 0], out=wt8)
            wt = wt8
        else:
            wt = np.bitwise_count(tmp).sum(axis=1, dtype=np.int64)
        if hist:
            counts += np.bincount(wt, minlength=n + 1)
        m = int(wt.min())
        if m == 0:
            # exactly one zero codeword exists in the whole sweep
            nz = wt[wt > 0]
            m = int(nz.min()) if nz.size else n + 1
        if m < best:
            best = m
        if abort_below is not None and best < abort_below:
            return counts, best, best
    return counts, best, None


def _sweep(code: BinaryCode, *, hist: bool, abort_below: int | None, workers: int = 1):
    if code.k > MAX_SWEEP_DIM:
        raise ValueError(f"dimension {code.k} exceeds exhaustive sweep ceiling {MAX_SWEEP_DIM}")
    if code.k == 0:
        counts = np.zeros(code.n + 1, dtype=np.int64)
        counts[0] = 1
        return (counts if hist else None), code.n + 1, None
    mat = _pack(code)
    t = min(code.k, _BLOCK_BITS)
    base = np.zeros((1 << t, mat.shape[1]), dtype=np.uint64)
    size = 1
    for i in range(t):
        base[size : 2 * size] = base[:size] ^ mat[i]
        size *= 2
    prefix_rows = [mat[i] for i in range(t, code.k)]
    nprefix = 1 << (code.k - t)
    if workers <= 1 or nprefix == 1:
        shards = [(0, nprefix)]
    else:
        workers = min(workers, nprefix)
        per = (nprefix + workers - 1) // workers
        shards = [(a, min(a + per, nprefix)) for a in range(0, nprefix, per)]
    if len(shards) == 1:
        results = [_sweep_worker(base, prefix_rows, 0, nprefix, code.n, hist, abort_below)]
    else:
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            futs = [
                pool.submit(_sweep_worker, base.copy(), prefix_rows, a, b, code.n, hist, abort_below)
                for a, b in shards
            ]
            results = [f.result() for f in futs]
    counts = None
    best = code.n + 1
    witness = None
    for c, m, w in results:
        if hist:
            counts = c if counts is None else counts + c
        best = min(best, m)
        if w is not None:
            witness = w if witness is None else min(witness, w)
    return counts, best, witness


def weight_enumerator(code: BinaryCode, workers: int = 1) -> WeightEnumerator:
    """Full weight histogram by exhaustive Gray sweep (k <= 30)."""
    counts, _best, _ = _sweep(code, hist=True, abort_below=None, workers=workers)
    return WeightEnumerator(counts=tuple(int(c) for c in counts))


def min_distance(code: BinaryCode, early_abort_below: int | None = None, workers: int = 1) -> int:
    """Exact minimum distance by exhaustive Gray sweep (k <= 30).

    With early_abort_below=B the sweep stops at the first codeword of
    weight < B; the returned value is then some witness weight < B
    rather than the exact minimum.  A return value >= B is always the
    exact minimum distance.
    """
    if code.k == 0:
        raise ValueError("zero code has no minimum distance")
    _counts, best, witness = _sweep(
        code, hist=False, abort_below=early_abort_below, workers=workers
    )
    return witness if witness is not None else best
