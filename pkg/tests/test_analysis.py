import itertools
import random
from collections import Counter

import pytest

from z4rm.analysis import (
    gray_image_params,
    binary_code_params,
    image_is_linear,
    image_is_linear_bruteforce,
    lee_weight_distribution,
    min_lee_weight,
    min_lee_weight_witness,
    nonequivalence_report,
    search_nonlinear_base,
    verify_theorem1,
)
from z4rm.codes import CodeParams, Z4Code, lrm, rm_binary, shipped_nonlinear_base, theorem1_params
from z4rm.errors import CapacityError, ZeroCodeError
from z4rm.linalg import GeneratorMatrix, enumerate_codewords
from z4rm.z4core import Z4Word, gray, hamming_distance, lee_distance, lee_weight

WITNESS = Z4Code(GeneratorMatrix.from_strings(["1013", "0112"]))


def random_code(rng, max_n=4, max_rows=3):
    n = rng.randrange(1, max_n + 1)
    rows = [
        Z4Word([rng.randrange(4) for _ in range(n)])
        for _ in range(rng.randrange(1, max_rows + 1))
    ]
    return Z4Code(GeneratorMatrix(rows, n=n))


def corpus():
    codes = [lrm(r, m) for m in range(1, 4) for r in range(m + 1)]
    codes.append(WITNESS)
    codes.append(shipped_nonlinear_base())
    codes.append(Z4Code(GeneratorMatrix.from_strings(["13"])))
    rng = random.Random(20240817)
    codes.extend(random_code(rng) for _ in range(30))
    return [c for c in codes if c.log2_size <= 12]


def test_min_lee_weight_examples():
    assert min_lee_weight(lrm(0, 2)) == 4
    assert min_lee_weight(lrm(1, 2)) == 2


def test_min_lee_weight_zero_code_and_budget():
    with pytest.raises(ZeroCodeError):
        min_lee_weight(Z4Code(GeneratorMatrix([], n=2)))
    with pytest.raises(CapacityError) as e:
        min_lee_weight(lrm(2, 2), budget=3)
    assert e.value.required == 4


def test_min_lee_weight_witness_is_minimal_member():
    for c in (lrm(1, 2), lrm(2, 3), WITNESS):
        d, w = min_lee_weight_witness(c)
        assert lee_weight(w) == d
        assert c.contains(w)


def test_weight_distribution_examples():
    counts = lee_weight_distribution(lrm(0, 2)).counts
    assert counts[0] == 1 and counts[4] == 1 and sum(counts) == 2
    assert lee_weight_distribution(lrm(1, 1)).counts == (1, 2, 1)
    assert lee_weight_distribution(lrm(1, 2)).counts == (1, 0, 6, 0, 1)


def test_weight_distribution_invariants():
    for c in corpus():
        dist = lee_weight_distribution(c)
        assert len(dist.counts) == 2 * c.n + 1
        assert dist.counts[0] == 1
        assert dist.total() == 1 << c.log2_size


def test_image_is_linear_examples():
    assert image_is_linear(lrm(1, 2)) is True
    for m in range(1, 5):
        assert image_is_linear(lrm(m, m)) is True
    assert image_is_linear(WITNESS) is False
    # the failing correction word for the witness pair
    u, v = WITNESS.generators.rows
    from z4rm.z4core import alpha

    prod = Z4Word([2 * (a & b) for a, b in zip(alpha(u), alpha(v))])
    assert prod.digits() == "0020"
    assert not WITNESS.contains(prod)


def test_image_is_linear_bruteforce_examples():
    assert image_is_linear_bruteforce(lrm(0, 2)) is True
    one_three = Z4Code(GeneratorMatrix.from_strings(["13"]))
    images = {gray(w).digits() for w in enumerate_codewords(one_three.standard_form)}
    assert images == {"0000", "0110", "1111", "1001"}
    assert image_is_linear_bruteforce(one_three) is True
    assert image_is_linear_bruteforce(WITNESS) is False
    with pytest.raises(CapacityError):
        image_is_linear_bruteforce(lrm(4, 4))  # 2^16 exceeds the oracle budget


def test_oracle_agreement_on_corpus():
    for c in corpus():
        assert image_is_linear(c) == image_is_linear_bruteforce(c), c


def test_gray_xor_identity_validates_criterion():
    # gray(u) ^ gray(v) == gray(u + v + 2*alpha(u)*alpha(v)) on random words
    from z4rm.z4core import add, alpha

    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(1, 20)
        u = Z4Word([rng.randrange(4) for _ in range(n)])
        v = Z4Word([rng.randrange(4) for _ in range(n)])
        corr = Z4Word([2 * (a & b) for a, b in zip(alpha(u), alpha(v))])
        assert gray(u) ^ gray(v) == gray(add(add(u, v), corr))


def test_verify_examples():
    rep = verify_theorem1(1, 2)
    assert rep.passed
    assert (rep.computed_n, rep.computed_k, rep.computed_d) == (2, 3, 2)
    assert rep.image_linear is True

    rep = verify_theorem1(2, 2)
    assert rep.passed
    assert (rep.computed_n, rep.computed_k, rep.computed_d) == (2, 4, 1)
    assert rep.image_linear is True


def test_verify_budget_skip():
    rep = verify_theorem1(2, 3, budget=5)  # 2^7 codewords > 2^5
    assert rep.skipped
    assert rep.computed_d is None
    assert not rep.passed
    assert rep.failures == []


def test_verify_fast_mode_matches_audit():
    for r, m in [(1, 3), (2, 3), (1, 4), (2, 4)]:
        audit = verify_theorem1(r, m)
        fast = verify_theorem1(r, m, fast=True)
        assert audit.passed and fast.passed
        assert audit.computed_d == fast.computed_d


def test_nonequivalence_examples():
    rec = nonequivalence_report(3, 5)
    assert (rec.lrm_k, rec.qrm_k, rec.distinct) == (26, 30, True)
    rec = nonequivalence_report(1, 2)
    assert (rec.lrm_k, rec.qrm_k, rec.distinct) == (3, 4, True)
    for m in range(1, 8):
        assert nonequivalence_report(m, m).distinct is False


def test_search_small_targets():
    assert search_nonlinear_base(theorem1_params(1, 2), length_limit=2) == []

    found = search_nonlinear_base(CodeParams(4, 4, 3), length_limit=4)
    assert found
    for c in found:
        assert c.n == 4 and c.log2_size == 4
        assert min_lee_weight(c) == 3
        assert not image_is_linear_bruteforce(c)
    # the witness parameters are realized
    assert any(c.type_counts == (2, 0) for c in found)


def test_search_limit_exceeded():
    with pytest.raises(CapacityError):
        search_nonlinear_base(CodeParams(9, 2, 2), length_limit=8)


def test_search_stop_after():
    full = search_nonlinear_base(CodeParams(4, 4, 3), length_limit=4)
    first = search_nonlinear_base(CodeParams(4, 4, 3), length_limit=4, stop_after=1)
    assert len(first) == 1
    assert [w.digits() for w in first[0].generators] == [
        w.digits() for w in full[0].generators
    ]


def test_shipped_nonlinear_base_properties():
    c = shipped_nonlinear_base()
    want = theorem1_params(2, 4)
    assert c.n == want.n
    assert c.log2_size == want.k
    assert min_lee_weight(c) == want.d
    assert image_is_linear(c) is False
    assert image_is_linear_bruteforce(c) is False
    rep = verify_theorem1(2, 4, overrides={(2, 4): c})
    assert rep.passed and rep.image_linear is False


def test_distance_invariance_of_gray_images():
    for c in corpus():
        if c.log2_size > 10:
            continue
        cw = list(enumerate_codewords(c.standard_form))
        images = [gray(w) for w in cw]
        dist = lee_weight_distribution(c)
        want = Counter({w: n for w, n in enumerate(dist.counts) if n})
        for img0 in images:
            got = Counter(hamming_distance(img0, img) for img in images)
            assert got == want


def test_distance_weight_duality():
    for c in corpus():
        if not 1 <= c.log2_size <= 8:
            continue
        cw = list(enumerate_codewords(c.standard_form))
        pair_min = min(
            lee_distance(x, y) for x, y in itertools.combinations(cw, 2)
        )
        assert pair_min == min_lee_weight(c)


def test_parallel_determinism():
    c = lrm(2, 4)
    results = [
        (
            min_lee_weight_witness(c, workers=w),
            lee_weight_distribution(c, workers=w).counts,
        )
        for w in (1, 3, 8)
    ]
    assert results[0] == results[1] == results[2]


def test_gray_image_params_match_rm_reference():
    for m in range(1, 4):
        for r in range(m + 1):
            img = gray_image_params(lrm(r, m))
            ref = binary_code_params(rm_binary(r, m))
            assert (img.n, img.k, img.d) == (ref.n, ref.k, ref.d)


def test_gray_image_params_nonlinear_path():
    img = gray_image_params(WITNESS)
    # nonlinear image: distance from the full pairwise sweep
    cw = list(enumerate_codewords(WITNESS.standard_form))
    images = [gray(w) for w in cw]
    want = min(
        hamming_distance(a, b) for a, b in itertools.combinations(images, 2)
    )
    assert img == CodeParams(8, 4, want, binary=True)


def test_binary_code_params_reference_values():
    p = binary_code_params(rm_binary(1, 3))
    assert (p.n, p.k, p.d) == (8, 4, 4)
    p = binary_code_params(rm_binary(2, 5))
    assert (p.n, p.k, p.d) == (32, 16, 8)
    with pytest.raises(CapacityError):
        binary_code_params(rm_binary(2, 5), budget=10)
