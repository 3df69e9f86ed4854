import itertools
import math

import pytest

from z4rm.codes import (
    CodeParams,
    Z4Code,
    lrm,
    plotkin,
    qrm_log2_size,
    rm_binary,
    shipped_nonlinear_base,
    theorem1_params,
)
from z4rm.errors import DimensionError, OverrideError
from z4rm.linalg import GeneratorMatrix, enumerate_codewords
from z4rm.z4core import BitWord, Z4Word, add, gray


def codewords(c):
    return set(enumerate_codewords(c.standard_form))


def digit_set(c):
    return {w.digits() for w in codewords(c)}


def bit_span(rows):
    out = set()
    for take in itertools.product((0, 1), repeat=len(rows)):
        w = BitWord.zero(rows[0].n)
        for t, row in zip(take, rows):
            if t:
                w = w ^ row
        out.add(w.digits())
    return out


def test_base_case_listings():
    assert digit_set(lrm(0, 1)) == {"0", "2"}
    assert digit_set(lrm(1, 1)) == {"0", "1", "2", "3"}
    assert digit_set(lrm(0, 2)) == {"00", "22"}
    assert digit_set(lrm(1, 2)) == {"00", "11", "22", "33", "13", "31", "02", "20"}
    assert digit_set(lrm(2, 2)) == {
        "".join(t) for t in itertools.product("0123", repeat=2)
    }


def test_base_case_gray_images():
    assert {gray(w).digits() for w in codewords(lrm(0, 1))} == {"00", "11"}
    assert {gray(w).digits() for w in codewords(lrm(1, 1))} == {"00", "01", "11", "10"}
    assert {gray(w).digits() for w in codewords(lrm(0, 2))} == {"0000", "1111"}
    even = {
        "".join(map(str, bits))
        for bits in itertools.product((0, 1), repeat=4)
        if sum(bits) % 2 == 0
    }
    assert {gray(w).digits() for w in codewords(lrm(1, 2))} == even
    assert len({gray(w).digits() for w in codewords(lrm(2, 2))}) == 16


def test_plotkin_examples():
    got = plotkin(lrm(1, 1), lrm(0, 1))
    assert digit_set(got) == {"00", "11", "22", "33", "13", "31", "02", "20"}

    zero = Z4Code(GeneratorMatrix([], n=2))
    doubled = plotkin(zero, zero)
    assert doubled.n == 4
    assert digit_set(doubled) == {"0000"}

    rep = lrm(0, 1)
    got = plotkin(rep, rep)
    assert digit_set(got) == {"00", "02", "22", "20"}


def test_plotkin_is_the_pair_construction():
    c1, c2 = lrm(1, 2), lrm(0, 2)
    got = digit_set(plotkin(c1, c2))
    want = set()
    for x in codewords(c1):
        for y in codewords(c2):
            want.add(x.digits() + add(x, y).digits())
    assert got == want


def test_plotkin_length_mismatch():
    with pytest.raises(DimensionError):
        plotkin(lrm(0, 1), lrm(0, 2))


def test_lrm_label_traces_recursion():
    c = lrm(1, 2)
    assert c.label == "LRM(1,2):plotkin[LRM(1,1):full;LRM(0,1):rep]"
    assert lrm(0, 3).label == "LRM(0,3):rep"
    assert lrm(3, 3).label == "LRM(3,3):full"


def test_lrm_invalid_order():
    for r, m in [(-1, 2), (3, 2), (0, 0)]:
        with pytest.raises(ValueError):
            lrm(r, m)
        with pytest.raises(ValueError):
            theorem1_params(r, m)
        with pytest.raises(ValueError):
            qrm_log2_size(r, m)


def test_theorem1_params_examples():
    p = theorem1_params(0, 2)
    assert (p.n, p.k, p.d) == (2, 1, 4)
    p = theorem1_params(3, 5)
    assert (p.n, p.k, p.d) == (16, 26, 4)
    for m in range(1, 8):
        assert theorem1_params(m, m).k == 1 << m


def test_qrm_log2_size_examples():
    assert qrm_log2_size(3, 5) == 30
    assert qrm_log2_size(1, 3) == 6
    for m in range(1, 6):
        assert qrm_log2_size(0, m) == 2


def test_size_comparison_pascal():
    for m in range(1, 11):
        for r in range(m + 1):
            diff = qrm_log2_size(r, m) - theorem1_params(r, m).k
            assert diff == math.comb(m - 1, r)
            assert (diff == 0) == (r == m)


def test_rm_binary_examples():
    assert bit_span(rm_binary(0, 2)) == {"0000", "1111"}
    assert bit_span(rm_binary(1, 1)) == {"00", "01", "10", "11"}
    even = {
        "".join(map(str, bits))
        for bits in itertools.product((0, 1), repeat=4)
        if sum(bits) % 2 == 0
    }
    assert bit_span(rm_binary(1, 2)) == even


def test_rm_binary_row_counts_and_length():
    for m in range(1, 6):
        for r in range(m + 1):
            rows = rm_binary(r, m)
            assert len(rows) == sum(math.comb(m, i) for i in range(r + 1))
            assert all(row.n == 1 << m for row in rows)


def test_rm_binary_monomial_order():
    rows = rm_binary(2, 3)
    assert [r.digits() for r in rows[:4]] == [
        "11111111",  # constant
        "00001111",  # v1
        "00110011",  # v2
        "01010101",  # v3
    ]
    # degree-2 block: v1 v2, v1 v3, v2 v3
    assert [r.digits() for r in rows[4:]] == ["00000011", "00000101", "00010001"]


def test_override_is_validated_and_recorded():
    shipped = shipped_nonlinear_base()
    c = lrm(2, 4, overrides={(2, 4): shipped})
    assert c.label == "LRM(2,4):override[nonlinear-ep(8,11,4)]"
    assert digit_set(c) == digit_set(shipped)

    # wrong length
    with pytest.raises(OverrideError):
        lrm(1, 2, overrides={(1, 2): lrm(1, 1)})
    # right length, wrong size
    with pytest.raises(OverrideError):
        lrm(1, 2, overrides={(1, 2): lrm(0, 2)})
    # right length and size, wrong distance: (1,0) has Lee weight 1, not 2
    bad = Z4Code(GeneratorMatrix.from_strings(["10", "02"]))
    assert bad.log2_size == theorem1_params(1, 2).k
    with pytest.raises(OverrideError):
        lrm(1, 2, overrides={(1, 2): bad})


def test_override_deep_node_shows_in_trace():
    shipped = shipped_nonlinear_base()
    c = lrm(3, 5, overrides={(2, 4): shipped})
    assert "override[nonlinear-ep(8,11,4)]" in c.label
    assert c.label.startswith("LRM(3,5):plotkin[")


def test_plotkin_size_law_along_recursion():
    for m in range(2, 5):
        for r in range(1, m):
            k = lrm(r, m).log2_size
            assert k == lrm(r, m - 1).log2_size + lrm(r - 1, m - 1).log2_size
            assert k == theorem1_params(r, m).k


def test_code_params_validation():
    with pytest.raises(ValueError):
        CodeParams(0, 1, 1)
    with pytest.raises(ValueError):
        CodeParams(1, -1, 1)
    with pytest.raises(ValueError):
        CodeParams(1, 1, 0)
    CodeParams(1, 0, 0)  # zero code: no distance constraint


def test_z4code_type_cached():
    c = lrm(1, 2)
    assert c.type_counts == (1, 1)
    assert c.standard_form is c.standard_form
    assert c.contains(Z4Word.from_string("20"))
    assert not c.contains(Z4Word.from_string("10"))
