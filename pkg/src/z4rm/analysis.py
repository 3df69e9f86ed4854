"""Verification engine: minimum Lee distance, weight distributions, Gray
image linearity, parameter reports, and the size-based nonequivalence
comparison against the QRM family.

Heavy sweeps run on the vectorized engine; every result is independent of
the worker count because per-block reductions are merged in block order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, NamedTuple

import numpy as np

from . import _engine
from .codes import CodeParams, RMOrder, Z4Code, check_order, lrm, qrm_log2_size, theorem1_params
from .errors import CapacityError, ZeroCodeError
from .linalg import DEFAULT_BUDGET, GeneratorMatrix, _mixed_radix_basis
from .z4core import Z4Word, add, alpha, gray, _spread_bits

__all__ = [
    "WeightDistribution",
    "VerificationReport",
    "NonequivalenceRecord",
    "min_lee_weight",
    "lee_weight_distribution",
    "image_is_linear",
    "image_is_linear_bruteforce",
    "verify_theorem1",
    "nonequivalence_report",
    "search_nonlinear_base",
    "gray_image_params",
    "binary_code_params",
    "binary_log2_size",
]

# materializing sweeps (image collection, pairwise distance) stay below this
MATERIALIZE_BUDGET = 20
BRUTE_ORACLE_BUDGET = 14


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by Lee weight, indexed 0..2n."""

    counts: tuple

    def __post_init__(self):
        if not self.counts or self.counts[0] < 1:
            raise ValueError("a linear code always contains the zero word")

    def total(self) -> int:
        return sum(self.counts)

    def min_nonzero_weight(self) -> int:
        for w, c in enumerate(self.counts):
            if w and c:
                return w
        raise ZeroCodeError("no nonzero codeword")


class NonequivalenceRecord(NamedTuple):
    order: RMOrder
    lrm_k: int
    qrm_k: int
    distinct: bool


@dataclass(frozen=True)
class VerificationReport:
    """Claimed vs computed parameters for one LRM(r,m) instance.

    computed_d / witness_hamming are None when the code exceeds the
    enumeration budget; passed is strict and treats a skip as not passing.
    """

    order: RMOrder
    label: str
    claimed: CodeParams
    computed_n: int
    computed_k: int
    computed_d: int | None
    witness_hamming: int | None
    image_linear: bool
    budget: int
    fast: bool

    @property
    def skipped(self) -> bool:
        return self.computed_d is None

    @property
    def failures(self) -> list:
        """(claim, expected, got) for every computed field that disagrees."""
        out = []
        if self.computed_n != self.claimed.n:
            out.append(("length", self.claimed.n, self.computed_n))
        if self.computed_k != self.claimed.k:
            out.append(("log2_size", self.claimed.k, self.computed_k))
        if self.computed_d is not None:
            if self.computed_d != self.claimed.d:
                out.append(("min_lee_distance", self.claimed.d, self.computed_d))
            if self.witness_hamming != self.computed_d:
                out.append(("witness_isometry", self.computed_d, self.witness_hamming))
        return out

    @property
    def passed(self) -> bool:
        return not self.failures and not self.skipped


def _sweep_setup(c: Z4Code, budget: int):
    sf = c.standard_form
    k = sf.log2_size
    if k > budget:
        raise CapacityError(
            f"code has 2^{k} words but the budget allows 2^{budget}",
            required=k,
            configured=budget,
        )
    return sf, k, _engine.z4_basis_from_standard_form(sf)


def _word_at_index(sf, t: int) -> Z4Word:
    basis = _mixed_radix_basis(sf)
    w = Z4Word.zero(sf.n)
    b = 0
    while t:
        if t & 1:
            w = add(w, basis[b])
        t >>= 1
        b += 1
    return w


def min_lee_weight_witness(
    c: Z4Code,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    stop_at: int | None = None,
):
    """(minimum nonzero Lee weight, witness codeword achieving it).

    stop_at takes a trusted lower bound: the sweep ends at the first block
    whose running minimum reaches it.  Without stop_at the sweep is
    exhaustive.
    """
    sf, k, basis = _sweep_setup(c, budget)
    if k == 0:
        raise ZeroCodeError("the zero code has no nonzero codeword")
    best = _engine.min_weight_sweep(
        basis,
        k,
        _engine.z4_add,
        _engine.lee_weights,
        workers=workers,
        skip_zero=True,
        stop_at=stop_at,
    )
    return best[0], _word_at_index(sf, best[1])


def min_lee_weight(c: Z4Code, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Minimum Lee weight over all nonzero codewords (exhaustive)."""
    return min_lee_weight_witness(c, budget=budget, workers=workers)[0]


def lee_weight_distribution(
    c: Z4Code, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> WeightDistribution:
    """Exact codeword counts by Lee weight."""
    sf, k, basis = _sweep_setup(c, budget)
    hist = _engine.weight_histogram(
        basis, k, _engine.z4_add, _engine.lee_weights, max_weight=2 * c.n, workers=workers
    )
    return WeightDistribution(tuple(int(x) for x in hist))


def _even_product_word(u: Z4Word, v: Z4Word) -> Z4Word:
    # 2 * (alpha(u) . alpha(v)) coordinatewise: symbol 2 where both are odd
    au = alpha(u)._packed & alpha(v)._packed
    return Z4Word._raw(u.n, _spread_bits(au, u.n) << 1)


def image_is_linear(c: Z4Code) -> bool:
    """Whether the Gray image is closed under XOR, decided from generators.

    Uses the identity gray(u) ^ gray(v) = gray(u + v + 2*alpha(u)*alpha(v)):
    the image is linear iff every generator pair's correction word lies in
    the code.  The identity is validated against the brute-force oracle in
    the test suite.
    """
    rows = c.standard_form.rows
    return all(
        c.contains(_even_product_word(u, v))
        for u, v in itertools.product(rows, repeat=2)
    )


def _collect_images(c: Z4Code, budget: int):
    sf, k, basis = _sweep_setup(c, min(budget, MATERIALIZE_BUDGET))
    if c.n > 32:
        raise CapacityError(
            f"bulk Gray mapping supports length <= 32, code has {c.n}",
            required=c.n,
            configured=32,
        )
    words = _engine.collect_words(basis, k, _engine.z4_add)
    return _engine.gray_images(words, c.n)


def image_is_linear_bruteforce(c: Z4Code, budget: int = BRUTE_ORACLE_BUDGET) -> bool:
    """Oracle: enumerate all Gray images and test XOR closure pair by pair."""
    if c.log2_size > budget:
        raise CapacityError(
            f"oracle needs 2^{c.log2_size} images but the budget allows 2^{budget}",
            required=c.log2_size,
            configured=budget,
        )
    images = _collect_images(c, budget)
    table = np.sort(images)
    last = len(table) - 1
    for i in range(len(images)):
        xors = images ^ images[i]
        pos = np.minimum(np.searchsorted(table, xors), last)
        if not np.array_equal(table[pos], xors):
            return False
    return True


def verify_theorem1(
    r: int,
    m: int,
    overrides: Mapping[tuple, Z4Code] | None = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    fast: bool = False,
) -> VerificationReport:
    """Build LRM(r,m) and compare its computed parameters with the claim.

    The minimum-distance sweep is exhaustive unless fast=True, which stops
    once the claimed distance is reached (using the claim as a bound).  On
    the minimum-weight witness the Gray image weight must reproduce the Lee
    weight (isometry cross-check).
    """
    order = check_order(r, m)
    claimed = theorem1_params(r, m)
    code = lrm(r, m, overrides, budget)
    computed_k = code.log2_size
    computed_d = None
    witness_hamming = None
    if computed_k <= budget:
        stop_at = claimed.d if fast else None
        computed_d, witness = min_lee_weight_witness(
            code, budget=budget, workers=workers, stop_at=stop_at
        )
        witness_hamming = gray(witness).weight()
    return VerificationReport(
        order=order,
        label=code.label,
        claimed=claimed,
        computed_n=code.n,
        computed_k=computed_k,
        computed_d=computed_d,
        witness_hamming=witness_hamming,
        image_linear=image_is_linear(code),
        budget=budget,
        fast=fast,
    )


def nonequivalence_report(r: int, m: int) -> NonequivalenceRecord:
    """Size comparison against the equal-length QRM code: different log2
    sizes mean the codes cannot be equivalent."""
    order = check_order(r, m)
    lrm_k = theorem1_params(r, m).k
    qrm_k = qrm_log2_size(r, m)
    return NonequivalenceRecord(order, lrm_k, qrm_k, lrm_k != qrm_k)


def gray_image_params(c: Z4Code, budget: int = MATERIALIZE_BUDGET) -> CodeParams:
    """Computed (length, log2 size, minimum Hamming distance) of the Gray image.

    The image size is counted from the materialized image set; the distance
    uses weights when the image is XOR-closed and falls back to the full
    pairwise sweep otherwise.
    """
    images = _collect_images(c, budget)
    distinct = np.unique(images)
    size = len(distinct)
    if size != 1 << c.log2_size:
        raise AssertionError("Gray map failed to be injective")  # pragma: no cover
    if size == 1:
        raise ZeroCodeError("the zero code's image has no distance")
    if image_is_linear(c):
        weights = np.bitwise_count(images)
        d = int(np.min(weights[weights > 0]))
    else:
        if size > 4096:
            raise CapacityError(
                "pairwise distance sweep of a nonlinear image supports at most "
                f"2^12 words, image has {size}",
                required=size.bit_length() - 1,
                configured=12,
            )
        d = None
        for i in range(size):
            dist = np.bitwise_count(distinct ^ distinct[i])
            dist[i] = np.iinfo(dist.dtype).max
            row_min = int(dist.min())
            if d is None or row_min < d:
                d = row_min
    return CodeParams(n=2 * c.n, k=c.log2_size, d=d, binary=True)


def _gf2_row_basis(rows):
    """Independent packed rows after GF(2) elimination, leading bit descending."""
    lead = {}
    for w in rows:
        r = w._packed
        while r:
            top = r.bit_length()
            if top not in lead:
                lead[top] = r
                break
            r ^= lead[top]
    return [lead[top] for top in sorted(lead, reverse=True)]


def binary_log2_size(rows) -> int:
    """GF(2) rank of the generator rows (log2 of the binary code size)."""
    return len(_gf2_row_basis(rows))


def binary_code_params(
    rows, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> CodeParams:
    """(length, log2 size, minimum Hamming distance) of a binary linear code
    given by generator rows (BitWords)."""
    rows = list(rows)
    if not rows:
        raise ZeroCodeError("no generator rows")
    n = rows[0].n
    basis_ints = _gf2_row_basis(rows)
    k = len(basis_ints)
    if k == 0:
        raise ZeroCodeError("the zero code has no nonzero codeword")
    if k > budget:
        raise CapacityError(
            f"code has 2^{k} words but the budget allows 2^{budget}",
            required=k,
            configured=budget,
        )
    from .z4core import BitWord

    bit_rows = [BitWord._raw(n, p) for p in basis_ints]
    basis = _engine.xor_basis_from_rows(bit_rows, n)
    best = _engine.min_weight_sweep(
        basis, k, _engine.xor_add, _engine.bit_weights, workers=workers, skip_zero=True
    )
    return CodeParams(n=n, k=k, d=best[0], binary=True)


def _lee_weights_1d(arr):
    hi = (arr >> _engine._ONE) & _engine._LO
    return np.bitwise_count(hi) + np.bitwise_count(hi ^ (arr & _engine._LO))


def _scale_1d(arr, c):
    if c == 1:
        return arr
    if c == 2:
        return _engine.z4_double(arr)
    return _engine.z4_add(arr, _engine.z4_double(arr))


def search_nonlinear_base(
    target: CodeParams, length_limit: int = 8, stop_after: int | None = None
):
    """Exhaustive search for quaternary linear codes with the target
    parameters whose Gray image is nonlinear.

    Candidates are generator matrices already in standard form with pivots
    at the leftmost columns, one shape per admissible (k1, k2) split; every
    matrix in that shape is visited (subject only to pruning by partial-span
    minimum weight, which cannot discard a valid code).  Codes that are
    column permutations of a found code are not searched separately.  Cost
    grows as 4^(free columns) per row, so lengths much beyond the default
    limit are impractical.
    """
    if target.binary:
        raise ValueError("search targets are quaternary parameter triples")
    n, k, d = target.n, target.k, target.d
    if n > length_limit:
        raise CapacityError(
            f"target length {n} exceeds the search limit {length_limit}",
            required=n,
            configured=length_limit,
        )
    if n > 32 or k > BRUTE_ORACLE_BUDGET:
        raise CapacityError(
            f"search supports length <= 32 and log2 size <= {BRUTE_ORACLE_BUDGET}",
            required=k,
            configured=BRUTE_ORACLE_BUDGET,
        )
    results = []
    if k == 0:
        return results
    for k1 in range(k // 2, -1, -1):
        k2 = k - 2 * k1
        if k1 + k2 > n:
            continue
        _search_shape(n, k1, k2, d, results, stop_after)
        if stop_after is not None and len(results) >= stop_after:
            break
    return results


def _row_candidates(n, k1, k2, pos, is_top):
    """Packed candidate rows for one pivot position, in frozen order."""
    free = range(k1 + k2, n)
    out = []
    if is_top:
        pivot = 1 << (2 * pos)
        for two_part in itertools.product((0, 1), repeat=k2):
            base = pivot
            for j, s in enumerate(two_part):
                base |= s << (2 * (k1 + j))
            for free_part in itertools.product(range(4), repeat=len(free)):
                p = base
                for col, s in zip(free, free_part):
                    p |= s << (2 * col)
                out.append(p)
    else:
        pivot = 2 << (2 * (k1 + pos))
        for free_part in itertools.product((0, 2), repeat=len(free)):
            p = pivot
            for col, s in zip(free, free_part):
                p |= s << (2 * col)
            out.append(p)
    return np.array(out, dtype=np.uint64)


def _search_shape(n, k1, k2, d, results, stop_after):
    # depth-first over rows: the order-2 rows first (fewest choices), then
    # the order-4 rows; the partial span's minimum weight prunes subtrees
    plan = [("two", j) for j in range(k2)] + [("top", i) for i in range(k1)]
    cand = [
        _row_candidates(n, k1, k2, pos, kind == "top") for kind, pos in plan
    ]
    span0 = np.zeros(1, dtype=np.uint64)

    def extend(span, row, order):
        parts = [span]
        for c in range(1, order):
            parts.append(_engine.z4_add(_scale_1d(np.full_like(span, row), c), span))
        return np.concatenate(parts)

    def dfs(depth, span, chosen):
        if stop_after is not None and len(results) >= stop_after:
            return
        if depth == len(plan):
            w = _lee_weights_1d(span[1:])
            if int(w.min()) != d:
                return
            rows = [Z4Word._raw(n, int(p)) for _, p in sorted(chosen)]
            code = Z4Code(
                GeneratorMatrix(rows, n=n),
                label=f"search[n={n},k={2 * k1 + k2},d={d},type=({k1},{k2})]",
            )
            if not image_is_linear_bruteforce(code):
                results.append(code)
            return
        kind, pos = plan[depth]
        order = 4 if kind == "top" else 2
        rows = cand[depth]
        ok = np.ones(len(rows), dtype=bool)
        for c in range(1, order):
            scaled = _scale_1d(rows, c)
            for w in span:
                ok &= _lee_weights_1d(_engine.z4_add(scaled, w)) >= d
        for row in rows[ok]:
            key = (0, pos) if kind == "top" else (1, pos)
            dfs(depth + 1, extend(span, row, order), chosen + [(key, int(row))])

    dfs(0, span0, [])
