"""Vectorized codeword sweeps.

Packs codewords into numpy uint64 limbs (32 two-bit Z4 lanes or 64 binary
lanes per limb) and walks the full mixed-radix enumeration in blocks.  The
block order matches linalg.enumerate_codewords exactly: the word at sweep
index t is the t-th enumerated codeword.  Min-weight and weight-histogram
reductions are associative, so results are identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

U64 = np.uint64
LANES_PER_LIMB = 32  # Z4 lanes
_LO = U64(0x5555555555555555)
_ONE = U64(1)

DEFAULT_BLOCK_LOG2 = 18


def pack_z4_rows(rows, n):
    """(k, limbs) uint64 array; lane i of a row sits in limb i//32, bits 2(i%32)+0,1."""
    limbs = max(1, -(-n // LANES_PER_LIMB))
    out = np.zeros((len(rows), limbs), dtype=U64)
    for r, w in enumerate(rows):
        p = w._packed
        for l in range(limbs):
            out[r, l] = (p >> (64 * l)) & 0xFFFFFFFFFFFFFFFF
    return out


def pack_bit_rows(rows, n):
    """(k, limbs) uint64 array; bit i of a row sits in limb i//64, bit i%64."""
    limbs = max(1, -(-n // 64))
    out = np.zeros((len(rows), limbs), dtype=U64)
    for r, w in enumerate(rows):
        p = w._packed
        for l in range(limbs):
            out[r, l] = (p >> (64 * l)) & 0xFFFFFFFFFFFFFFFF
    return out


def z4_add(a, b):
    """Lane-parallel addition mod 4 (carries never leave their lane)."""
    return (a ^ b) ^ (((a & b) & _LO) << _ONE)


def z4_double(a):
    return (a & _LO) << _ONE


def lee_weights(words):
    """(N,) Lee weights of an (N, limbs) packed Z4 array."""
    hi = (words >> _ONE) & _LO
    w = np.bitwise_count(hi) + np.bitwise_count(hi ^ (words & _LO))
    return w.sum(axis=1, dtype=np.int64)


def xor_add(a, b):
    return a ^ b


def bit_weights(words):
    return np.bitwise_count(words).sum(axis=1, dtype=np.int64)


class Sweep:
    """Full enumeration of 2^k coefficient combinations of basis words."""

    def __init__(self, basis, k, combine, block_log2=DEFAULT_BLOCK_LOG2):
        self.k = k
        self.combine = combine
        self.low_bits = min(k, block_log2)
        self.block_count = 1 << (k - self.low_bits)
        limbs = basis.shape[1] if len(basis) else 1
        table = np.zeros((1 << self.low_bits, limbs), dtype=U64)
        for j in range(self.low_bits):
            half = 1 << j
            table[half : 2 * half] = combine(table[:half], basis[j][None, :])
        self._low_table = table
        self._high_basis = basis[self.low_bits :]

    def block_size(self) -> int:
        return 1 << self.low_bits

    def block(self, h):
        """Packed words for sweep indices [h * block_size, (h+1) * block_size)."""
        if not len(self._high_basis):
            return self._low_table
        offset = np.zeros((1, self._low_table.shape[1]), dtype=U64)
        j = 0
        while h:
            if h & 1:
                offset = self.combine(offset, self._high_basis[j][None, :])
            h >>= 1
            j += 1
        return self.combine(self._low_table, offset)


def _run_blocks(sweep, job, workers, stop_check=None):
    """Apply job(h, words) to every block, committing results in block order.

    Returns the list of per-block results (prefix only, if stop_check cuts
    the sweep short).  Worker count never changes the committed sequence.
    """
    results = []
    if workers <= 1 or sweep.block_count == 1:
        for h in range(sweep.block_count):
            r = job(h, sweep.block(h))
            results.append(r)
            if stop_check is not None and stop_check(r):
                break
        return results
    window = 4 * workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        stopped = False
        for start in range(0, sweep.block_count, window):
            hs = range(start, min(start + window, sweep.block_count))
            futures = [pool.submit(lambda h=h: job(h, sweep.block(h))) for h in hs]
            for f in futures:
                r = f.result()
                if stopped:
                    continue
                results.append(r)
                if stop_check is not None and stop_check(r):
                    stopped = True
            if stopped:
                break
    return results


def min_weight_sweep(
    basis,
    k,
    combine,
    weights,
    workers=1,
    skip_zero=True,
    stop_at=None,
    block_log2=DEFAULT_BLOCK_LOG2,
):
    """(min weight, first sweep index achieving it) over all 2^k words.

    skip_zero ignores index 0 (the zero word).  stop_at ends the sweep at
    the first block whose committed running minimum is <= stop_at.
    """
    sweep = Sweep(basis, k, combine, block_log2)
    size = sweep.block_size()

    def job(h, words):
        w = weights(words)
        if h == 0 and skip_zero:
            if len(w) == 1:
                return None
            w = w[1:]
            i = int(np.argmin(w))
            return int(w[i]), i + 1
        i = int(np.argmin(w))
        return int(w[i]), h * size + i

    best = None

    def stop_check(r):
        nonlocal best
        if r is not None and (best is None or r < best):
            best = r
        return stop_at is not None and best is not None and best[0] <= stop_at

    _run_blocks(sweep, job, workers, stop_check)
    return best


def weight_histogram(
    basis, k, combine, weights, max_weight, workers=1, block_log2=DEFAULT_BLOCK_LOG2
):
    """Exact counts of words by weight, as an int64 array of length max_weight+1."""
    sweep = Sweep(basis, k, combine, block_log2)

    def job(h, words):
        return np.bincount(weights(words), minlength=max_weight + 1)

    total = np.zeros(max_weight + 1, dtype=np.int64)
    for counts in _run_blocks(sweep, job, workers):
        total += counts
    return total


def collect_words(basis, k, combine, block_log2=DEFAULT_BLOCK_LOG2):
    """All 2^k packed words as one (N, limbs) array, in sweep order."""
    sweep = Sweep(basis, k, combine, block_log2)
    return np.concatenate([sweep.block(h) for h in range(sweep.block_count)], axis=0)


def z4_basis_from_standard_form(sf):
    """Packed per-index-bit contributions matching linalg's enumeration order."""
    rows = pack_z4_rows(sf.rows, sf.n)
    basis = np.zeros((sf.log2_size, rows.shape[1]), dtype=U64)
    p = 0
    for j in range(sf.k2 - 1, -1, -1):
        basis[p] = rows[sf.k1 + j]
        p += 1
    for i in range(sf.k1 - 1, -1, -1):
        basis[p] = rows[i]
        basis[p + 1] = z4_double(rows[i])
        p += 2
    return basis


def xor_basis_from_rows(rows, n):
    """Packed basis for a binary code sweep: index bit j toggles rows[-1-j]."""
    packed = pack_bit_rows(rows, n)
    return packed[::-1].copy()


_GATHER_MASKS = [
    (U64(1), U64(0x3333333333333333)),
    (U64(2), U64(0x0F0F0F0F0F0F0F0F)),
    (U64(4), U64(0x00FF00FF00FF00FF)),
    (U64(8), U64(0x0000FFFF0000FFFF)),
    (U64(16), U64(0x00000000FFFFFFFF)),
]


def _gather_even_bits_u64(x):
    x = x & _LO
    for shift, mask in _GATHER_MASKS:
        x = (x | (x >> shift)) & mask
    return x


def gray_images(words, n):
    """Gray images of packed Z4 words (single limb, n <= 32) as uint64 bit masks."""
    if words.shape[1] != 1:
        raise ValueError("bulk Gray mapping supports quaternary length <= 32 only")
    w = words[:, 0]
    b = _gather_even_bits_u64(w >> _ONE)
    g = _gather_even_bits_u64(w ^ (w >> _ONE))
    return b | (g << U64(n))
