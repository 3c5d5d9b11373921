import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupdet.determinants import M16, SD16, regular_determinant
from groupdet.group_ring import (MODULAR, SEMIDIHEDRAL, ElementParseError, GroupRingElement, TwistMap,
                                 fold_to_d8, format_element, gr_identity, gr_multiply, parse_element)

E = GroupRingElement.from_polys
SD4 = TwistMap(4, SEMIDIHEDRAL)

coeff = st.integers(-4, 4)
elements16 = st.lists(coeff, min_size=16, max_size=16).map(GroupRingElement.from_flat)


def test_identity():
    e = gr_identity(4)
    assert e.a == (1, 0, 0, 0, 0, 0, 0, 0) and e.b == (0,) * 8
    assert regular_determinant(e, SD16) == 1
    with pytest.raises(ValueError):
        gr_identity(7)


def test_y_times_x():
    assert gr_multiply(E(4, [], [1]), E(4, [0, 1]), SD4) == E(4, [], [0, 1])


def test_one_plus_y_squared():
    F = E(4, [1], [1])
    assert gr_multiply(F, F, SD4) == E(4, [2], [2])


def test_xy_squared_is_x4():
    XY = E(4, [], [0, 0, 0, 1])
    assert gr_multiply(XY, XY, SD4) == E(4, [0, 0, 0, 0, 1])


def test_mismatched_n():
    with pytest.raises(ValueError):
        gr_multiply(gr_identity(4), gr_identity(5), SD4)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("kind", [SEMIDIHEDRAL, MODULAR])
def test_twist_is_involution(n, kind):
    tw = TwistMap(n, kind)
    perm = tw.permutation()
    assert [perm[perm[k]] for k in range(len(perm))] == list(range(len(perm)))
    assert tw.multiplier % 2 == 1


def test_twist_multipliers():
    assert TwistMap(4).multiplier == 3
    assert TwistMap(4, MODULAR).multiplier == 5
    assert TwistMap(5).multiplier == 7


@settings(max_examples=200, deadline=None)
@given(elements16, elements16, elements16, st.sampled_from([SEMIDIHEDRAL, MODULAR]))
def test_associative_with_identity(F1, F2, F3, kind):
    tw = TwistMap(4, kind)
    assert gr_multiply(gr_multiply(F1, F2, tw), F3, tw) == gr_multiply(F1, gr_multiply(F2, F3, tw), tw)
    assert gr_multiply(gr_identity(4), F1, tw) == F1 == gr_multiply(F1, gr_identity(4), tw)


@settings(max_examples=100, deadline=None)
@given(elements16, elements16)
def test_determinant_multiplicative(F1, F2):
    for spec, kind in ((SD16, SEMIDIHEDRAL), (M16, MODULAR)):
        prod = gr_multiply(F1, F2, TwistMap(4, kind))
        assert regular_determinant(prod, spec) == regular_determinant(F1, spec) * regular_determinant(F2, spec)


def test_fold_examples():
    assert fold_to_d8(E(4, [1, 0, 0, 0, 1])) == GroupRingElement(3, (2, 0, 0, 0), (0, 0, 0, 0))
    assert fold_to_d8(E(4, [0, 1, 1], [1, 1, 1])) == GroupRingElement(3, (0, 1, 1, 0), (1, 1, 1, 0))
    with pytest.raises(ValueError):
        fold_to_d8(gr_identity(5))


def test_parse_and_format():
    F = parse_element(" 0, +1,1,0,0,0,0,0 ; 1,1 ,1,0,0,0,0,-0")
    assert F == E(4, [0, 1, 1], [1, 1, 1])
    assert format_element(F) == "0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,0"
    assert parse_element("1," + "0," * 14 + "0") == gr_identity(4)
    assert parse_element("1" + ",0" * 31).n == 5


@pytest.mark.parametrize("bad", ["1,2,3", "1,x,0,0,0,0,0,0;0,0,0,0,0,0,0,0",
                                 "1,0,0,0;0,0,0,0,0,0,0,0", "1;2;3", "", "1.5" + ",0" * 15])
def test_parse_errors(bad):
    with pytest.raises(ElementParseError):
        parse_element(bad)


def test_parse_expected_size():
    with pytest.raises(ElementParseError):
        parse_element("1" + ",0" * 15, n=5)


@settings(max_examples=100)
@given(st.lists(st.integers(-10**30, 10**30), min_size=16, max_size=16))
def test_format_round_trip(coeffs):
    F = GroupRingElement.from_flat(coeffs)
    assert parse_element(format_element(F)) == F


def test_length_checked():
    with pytest.raises(ValueError):
        GroupRingElement(4, (1,) * 7, (0,) * 8)
