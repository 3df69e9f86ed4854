import itertools
import random

import pytest

from z4rm.errors import DimensionError
from z4rm.z4core import (
    BitWord,
    Z4Word,
    add,
    alpha,
    beta,
    gamma,
    gray,
    gray_inverse,
    hamming_distance,
    lee_distance,
    lee_weight,
    negate,
)

W = Z4Word
B = BitWord

LEE = {0: 0, 1: 1, 2: 2, 3: 1}
ALPHA = {0: 0, 1: 1, 2: 0, 3: 1}
BETA = {0: 0, 1: 0, 2: 1, 3: 1}
GAMMA = {0: 0, 1: 1, 2: 1, 3: 0}


def all_words(n):
    return [W(t) for t in itertools.product(range(4), repeat=n)]


def test_add_examples():
    assert add(W([1, 3]), W([3, 1])) == W([0, 0])
    assert add(W([1, 1]), W([0, 2])) == W([1, 3])
    assert add(W([2, 2]), W([2, 2])) == W([0, 0])


def test_add_matches_symbolwise_reference():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 40)
        xs = [rng.randrange(4) for _ in range(n)]
        ys = [rng.randrange(4) for _ in range(n)]
        assert add(W(xs), W(ys)) == W([(a + b) % 4 for a, b in zip(xs, ys)])


def test_add_length_mismatch():
    with pytest.raises(DimensionError):
        add(W([1]), W([1, 2]))


def test_negate_examples():
    assert negate(W([0])) == W([0])
    assert negate(W([1, 2, 3])) == W([3, 2, 1])
    for x in all_words(2):
        assert negate(negate(x)) == x
        assert add(x, negate(x)) == W.zero(2)


def test_lee_weight_examples():
    assert lee_weight(W([0, 0])) == 0
    assert lee_weight(W([2, 2])) == 4
    assert lee_weight(W([1, 2, 3])) == 4


def test_lee_weight_matches_table():
    rng = random.Random(11)
    for _ in range(200):
        xs = [rng.randrange(4) for _ in range(rng.randrange(1, 50))]
        assert lee_weight(W(xs)) == sum(LEE[s] for s in xs)


def test_lee_distance_examples():
    assert lee_distance(W([1]), W([3])) == 2
    assert lee_distance(W([1, 1]), W([0, 2])) == 2
    for x in all_words(2):
        assert lee_distance(x, x) == 0


def test_lee_distance_metric_axioms_exhaustive():
    for n in (1, 2):
        words = all_words(n)
        for x in words:
            for y in words:
                d = lee_distance(x, y)
                assert d == lee_distance(y, x)
                assert (d == 0) == (x == y)
        for x, y, z in itertools.product(words, repeat=3):
            assert lee_distance(x, z) <= lee_distance(x, y) + lee_distance(y, z)


def test_component_maps_examples():
    assert alpha(W([1, 2, 3])) == B([1, 0, 1])
    assert beta(W([0, 2])) == B([0, 1])
    assert gamma(W([3, 3])) == B([0, 0])


def test_component_maps_match_table():
    for xs in itertools.product(range(4), repeat=3):
        x = W(xs)
        assert alpha(x) == B([ALPHA[s] for s in xs])
        assert beta(x) == B([BETA[s] for s in xs])
        assert gamma(x) == B([GAMMA[s] for s in xs])


def test_gray_examples():
    assert gray(W([2, 2])) == B([1, 1, 1, 1])
    assert gray(W([0, 0])) == B([0, 0, 0, 0])
    assert gray(W([1, 3])) == B([0, 1, 1, 0])


def test_gray_is_beta_block_then_gamma_block():
    rng = random.Random(3)
    for _ in range(100):
        xs = [rng.randrange(4) for _ in range(rng.randrange(1, 33))]
        x = W(xs)
        assert gray(x) == B([BETA[s] for s in xs] + [GAMMA[s] for s in xs])


def test_gray_inverse_examples():
    assert gray_inverse(B([0, 0, 1, 1])) == W([1, 1])
    assert gray_inverse(B([1, 1, 1, 1])) == W([2, 2])
    assert gray_inverse(B([0, 1, 1, 0])) == W([1, 3])
    with pytest.raises(DimensionError):
        gray_inverse(B([0, 1, 0]))


def test_gray_bijection():
    for xs in itertools.product(range(4), repeat=3):
        x = W(xs)
        assert gray_inverse(gray(x)) == x
    for bits in itertools.product(range(2), repeat=4):
        b = B(bits)
        assert gray(gray_inverse(b)) == b


def test_hamming_distance_examples():
    assert hamming_distance(B([0, 0, 0, 0]), B([1, 1, 1, 1])) == 4
    assert hamming_distance(B([0, 1, 1, 0]), B([0, 1, 1, 0])) == 0
    assert hamming_distance(B([0, 1, 1, 0]), B([0, 0, 1, 1])) == 2
    with pytest.raises(DimensionError):
        hamming_distance(B([0]), B([0, 1]))


def test_isometry_exhaustive_n1():
    for x in all_words(1):
        for y in all_words(1):
            assert lee_distance(x, y) == hamming_distance(gray(x), gray(y))


def test_table_consistency_per_symbol():
    for s in range(4):
        x = W([s])
        assert gray(x) == B([BETA[s], GAMMA[s]])
        assert lee_weight(x) == gray(x).weight()


def test_word_validation_and_immutability():
    with pytest.raises(ValueError):
        W([4])
    with pytest.raises(ValueError):
        W([])
    with pytest.raises(ValueError):
        B([2])
    x = W([1, 2])
    with pytest.raises(AttributeError):
        x.n = 5
    assert W.from_string("1023").digits() == "1023"
    assert B.from_string("0110").digits() == "0110"
    with pytest.raises(ValueError):
        W.from_string("104")
    with pytest.raises(ValueError):
        B.from_string("012")


def test_indexing_and_iteration():
    x = W([1, 0, 2, 3])
    assert list(x) == [1, 0, 2, 3]
    assert x[2] == 2
    assert len(x) == 4
    b = B([1, 0, 1])
    assert list(b) == [1, 0, 1]
    assert b[0] == 1 and b.weight() == 2
    assert (b ^ B([1, 1, 1])) == B([0, 1, 0])
