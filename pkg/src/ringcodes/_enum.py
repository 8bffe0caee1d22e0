"""Codeword enumeration kernels.

A Z4-linear code in standard form is the bijective image of
``Z4^k1 x Z2^k2`` under ``(m, t) -> sum m_i g_i + sum t_j h_j``, so listing
codewords never needs deduplication.

For lengths up to 64 a vector is packed into two bit masks (``lo``, ``hi``)
holding the low and high bit of each symbol; addition mod 4 is then a few
bitwise operations and Lee/Hamming weights are popcounts.  Minimum weights
use a meet-in-the-middle split: the generator list is cut into two halves,
each half's span is tabulated, and every pair sum is scanned in blocks.
"""

from __future__ import annotations

import numpy as np

_MAX_PACKED = 64
_BLOCK = 1 << 20  # pair sums evaluated per numpy call


def span_array(gens):
    """All codewords as a ``(M, n)`` uint8 array.

    ``gens`` is a sequence of ``(row, order)`` with order 4 or 2; rows of
    order 2 are taken with coefficient 0 or 1.
    """
    n = len(gens[0][0]) if gens else 0
    table = np.zeros((1, n), dtype=np.uint8)
    for row, order in gens:
        row = np.asarray(row, dtype=np.uint8)
        mults = np.arange(order, dtype=np.uint8)[:, None, None]
        table = ((table[None, :, :] + mults * row[None, None, :]) % 4).reshape(-1, n)
    return table


def pack(rows):
    """Pack a ``(k, n)`` array over Z4 into ``(lo, hi)`` uint64 masks."""
    rows = np.asarray(rows, dtype=np.uint64) % 4
    if rows.shape[-1] > _MAX_PACKED:
        raise ValueError("packed representation holds at most 64 symbols")
    weights = np.uint64(1) << np.arange(rows.shape[-1], dtype=np.uint64)
    lo = ((rows & np.uint64(1)) * weights).sum(axis=-1, dtype=np.uint64)
    hi = (((rows >> np.uint64(1)) & np.uint64(1)) * weights).sum(axis=-1, dtype=np.uint64)
    return lo, hi


def unpack(lo, hi, n):
    bits = np.arange(n, dtype=np.uint64)
    lo_bits = (np.uint64(lo) >> bits) & np.uint64(1)
    hi_bits = (np.uint64(hi) >> bits) & np.uint64(1)
    return tuple(int(x) for x in (lo_bits + 2 * hi_bits))


def add_packed(alo, ahi, blo, bhi):
    return alo ^ blo, ahi ^ bhi ^ (alo & blo)


def lee_packed(lo, hi):
    return np.bitwise_count(lo).astype(np.int64) + 2 * np.bitwise_count(hi & ~lo).astype(np.int64)


def hamming_packed(lo, hi):
    return np.bitwise_count(lo | hi).astype(np.int64)


def _span_packed(gens):
    lo = np.zeros(1, dtype=np.uint64)
    hi = np.zeros(1, dtype=np.uint64)
    for row, order in gens:
        glo, ghi = pack([row])
        glo, ghi = glo[0], ghi[0]
        parts_lo, parts_hi = [lo], [hi]
        mlo, mhi = glo, ghi
        for _ in range(order - 1):
            plo, phi = add_packed(lo, hi, mlo, mhi)
            parts_lo.append(plo)
            parts_hi.append(phi)
            mlo, mhi = add_packed(mlo, mhi, glo, ghi)
        lo = np.concatenate(parts_lo)
        hi = np.concatenate(parts_hi)
    return lo, hi


def _split(gens):
    total = 1
    for _, order in gens:
        total *= order
    left, acc = [], 1
    for g in gens:
        if acc * acc >= total:
            break
        left.append(g)
        acc *= g[1]
    return left, gens[len(left):]


def min_weights(gens, n):
    """Minimum nonzero Lee and Hamming weights of the span, with witnesses.

    Returns ``(lee, lee_witness, hamming, hamming_witness)`` or ``None`` when
    the span is the zero code.
    """
    if not gens:
        return None
    if n > _MAX_PACKED:
        words = span_array(gens)[1:]
        if not len(words):
            return None
        lee_table = np.array([0, 1, 2, 1])[words].sum(axis=1)
        ham = (words != 0).sum(axis=1)
        i, j = int(lee_table.argmin()), int(ham.argmin())
        return (int(lee_table[i]), tuple(int(x) for x in words[i]),
                int(ham[j]), tuple(int(x) for x in words[j]))
    left, right = _split(gens)
    alo, ahi = _span_packed(left)
    blo, bhi = _span_packed(right)
    best_lee = best_ham = None
    lee_at = ham_at = None
    step = max(1, _BLOCK // len(blo))
    for start in range(0, len(alo), step):
        slo = alo[start:start + step, None]
        shi = ahi[start:start + step, None]
        lo, hi = add_packed(slo, shi, blo[None, :], bhi[None, :])
        lee = lee_packed(lo, hi)
        ham = hamming_packed(lo, hi)
        if start == 0:
            # (0, 0) pair is the zero codeword
            lee[0, 0] = ham[0, 0] = np.iinfo(np.int64).max
        i = int(lee.argmin())
        if best_lee is None or lee.flat[i] < best_lee:
            best_lee = int(lee.flat[i])
            lee_at = (int(lo.flat[i]), int(hi.flat[i]))
        j = int(ham.argmin())
        if best_ham is None or ham.flat[j] < best_ham:
            best_ham = int(ham.flat[j])
            ham_at = (int(lo.flat[j]), int(hi.flat[j]))
    if best_lee == np.iinfo(np.int64).max:
        return None
    return (best_lee, unpack(*lee_at, n), best_ham, unpack(*ham_at, n))


def weight_histograms(gens, n):
    """Lee and Hamming weight distributions of the span as integer arrays."""
    lee_hist = np.zeros(2 * n + 1, dtype=np.int64)
    ham_hist = np.zeros(n + 1, dtype=np.int64)
    if n > _MAX_PACKED:
        words = span_array(gens)
        lee_hist += np.bincount(np.array([0, 1, 2, 1])[words].sum(axis=1), minlength=2 * n + 1)
        ham_hist += np.bincount((words != 0).sum(axis=1), minlength=n + 1)
        return lee_hist, ham_hist
    left, right = _split(gens)
    alo, ahi = _span_packed(left)
    blo, bhi = _span_packed(right)
    step = max(1, _BLOCK // len(blo))
    for start in range(0, len(alo), step):
        lo, hi = add_packed(alo[start:start + step, None], ahi[start:start + step, None],
                            blo[None, :], bhi[None, :])
        lee_hist += np.bincount(lee_packed(lo, hi).ravel(), minlength=2 * n + 1)
        ham_hist += np.bincount(hamming_packed(lo, hi).ravel(), minlength=n + 1)
    return lee_hist, ham_hist
