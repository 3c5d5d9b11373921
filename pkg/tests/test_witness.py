import pytest

from groupdet.determinants import SD16, regular_determinant
from groupdet.group_ring import format_element
from groupdet.number_theory import BadPrime, BadResidue, Reason
from groupdet.witness import (WITNESS_FAMILIES, NotAchievable, NotMultipleOf1024, h_poly, witness,
                              witness_even, witness_odd_1mod8, witness_odd_5mod8)


def test_h_poly():
    h = h_poly()
    assert h == (1,) * 8
    # expand (x+1)(x^2+1)(x^4+1) directly
    poly = [1]
    for factor in ([1, 1], [1, 0, 1], [1, 0, 0, 0, 1]):
        out = [0] * (len(poly) + len(factor) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        poly = out
    assert tuple(poly) == h
    assert sum(h) == 8 and sum(h[0::2]) - sum(h[1::2]) == 0


@pytest.mark.parametrize("N,f,g", [
    (0, "1,1,1,1,0,0,-1,-1", "1,1,0,-1,-1,-1,0,-1"),
    (2**11, "1,1,1,1,1,1,1,-1", "1,1,0,0,0,-1,0,1"),
    (2**10, "1,1,1,1,1,0,0,-1", "1,1,0,-1,-1,-1,0,1"),
])
def test_even_base_elements(N, f, g):
    res = witness_even(N)
    assert format_element(res.element) == f"{f};{g}"
    assert res.verified


def test_even_rejects():
    with pytest.raises(NotMultipleOf1024):
        witness_even(512)


@pytest.mark.parametrize("N,text", [
    (1, "1,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0"),
    (17, "2,1,1,1,1,1,1,1;1,1,1,1,1,1,1,1"),
    (-7, "1,1,1,1,1,0,-1,0;1,1,0,0,0,1,0,0"),
])
def test_odd_1mod8_examples(N, text):
    res = witness_odd_1mod8(N)
    assert format_element(res.element) == text and res.verified


def test_odd_1mod8_rejects():
    with pytest.raises(BadResidue):
        witness_odd_1mod8(5)


def test_odd_5mod8_examples():
    res = witness_odd_5mod8(45, 3)
    assert format_element(res.element) == "0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,0"
    res = witness_odd_5mod8(-27, 3)
    assert format_element(res.element) == "1,1,0,0,0,0,0,0;0,1,0,0,0,0,0,0"
    res = witness_odd_5mod8(605, 11)
    assert dict(res.params) == {"m": 0, "k": -1, "s": 0}
    assert regular_determinant(res.element, SD16) == 605


def test_odd_5mod8_rejects():
    with pytest.raises(BadPrime):
        witness_odd_5mod8(45, 5)
    with pytest.raises(BadPrime):
        witness_odd_5mod8(5 * 11 * 11, 3)
    with pytest.raises(BadResidue):
        witness_odd_5mod8(9, 3)


@pytest.mark.parametrize("N", [1024 * 7, 9, 17, -7, 45, -27, 605, 0, 2**12 * 5, -1024, 13 * 19**2])
def test_dispatcher_round_trip(N):
    res = witness(N)
    assert res.verified and regular_determinant(res.element, SD16) == N


@pytest.mark.parametrize("N,reason", [(21, Reason.ODD_FIVE_NO_P), (13, Reason.ODD_FIVE_NO_P),
                                      (3, Reason.ODD_THREE_MOD_4), (512, Reason.EVEN_NOT_MULTIPLE)])
def test_not_achievable(N, reason):
    with pytest.raises(NotAchievable) as info:
        witness(N)
    assert info.value.verdict.reason is reason


def test_family_table_round_trip():
    for fam in WITNESS_FAMILIES.values():
        for m in (-2, 0, 3):
            if "p^2" in fam.tag:
                N = fam.value(m, 3)
            else:
                N = fam.value(m)
            assert witness(N).family == fam.tag


def test_sign_normalization_always_possible():
    for U in range(-21, 22, 2):
        assert sum(1 for x in (U, -U) if x % 4 == 1) == 1
        assert sum(1 for x in (U, -U) if x % 4 == 3) == 1
