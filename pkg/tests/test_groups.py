
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedcayley.groups import (
    Group,
    ParseError,
    add,
    div4_elements,
    element_order,
    elements,
    isomorphism_types,
    negate,
    parse_group_spec,
    reduce_element,
    scale,
)
from oracles import brute_order


def test_parse_single_factor():
    g = parse_group_spec("Z4")
    assert g.moduli == (4,)
    assert g.order == 4
    assert g.exponent == 4


def test_parse_product():
    g = parse_group_spec("Z2xZ4")
    assert g.moduli == (2, 4)
    assert g.order == 8
    assert g.exponent == 4


def test_parse_bare_list():
    assert parse_group_spec("2,4").moduli == (2, 4)
    assert parse_group_spec("12").moduli == (12,)


@pytest.mark.parametrize("bad", ["Z1", "Z0", "", "Zx", "Z4x", "4,", "Q8", "Z4 Z2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_group_spec(bad)


def test_group_rejects_small_moduli():
    with pytest.raises(ValueError):
        Group((1,))


def test_add_negate_scale_examples():
    z4 = parse_group_spec("Z4")
    assert add(z4, (1,), (3,)) == (0,)
    z2z4 = parse_group_spec("Z2xZ4")
    assert scale(z2z4, 3, (1, 1)) == (1, 3)
    z12 = parse_group_spec("Z12")
    assert negate(z12, (5,)) == (7,)


def test_scale_zero_and_negative():
    g = parse_group_spec("Z2xZ4")
    assert scale(g, 0, (1, 3)) == (0, 0)
    assert scale(g, -1, (1, 3)) == negate(g, (1, 3))


def test_coordinate_mismatch_raises():
    g = parse_group_spec("Z4")
    with pytest.raises(ValueError):
        add(g, (1,), (1, 2))
    with pytest.raises(ValueError):
        element_order(g, (1, 0))


def test_element_order_examples():
    assert element_order(parse_group_spec("Z12"), (5,)) == 12
    g = parse_group_spec("Z2xZ4")
    assert element_order(g, (1, 2)) == 2
    assert element_order(g, (1, 2)) == brute_order(g, (1, 2))
    assert element_order(parse_group_spec("Z4"), (0,)) == 1


def test_enumeration_order():
    assert elements(parse_group_spec("Z4")) == ((0,), (1,), (2,), (3,))
    assert elements(parse_group_spec("Z2xZ2")) == ((0, 0), (0, 1), (1, 0), (1, 1))
    z2z3 = elements(parse_group_spec("Z2xZ3"))
    assert len(z2z3) == 6
    assert z2z3[0] == (0, 0)


def test_div4_examples():
    assert div4_elements(parse_group_spec("Z4")) == {(1,), (3,)}
    assert div4_elements(parse_group_spec("Z6")) == frozenset()
    assert div4_elements(parse_group_spec("Z2xZ4")) == {(0, 1), (0, 3), (1, 1), (1, 3)}


def test_div4_empty_iff_exponent_not_div4():
    for g in isomorphism_types(64):
        assert bool(div4_elements(g)) == (g.exponent % 4 == 0)
    # non-canonical presentations behave the same
    for text in ["Z12", "Z4xZ3", "Z6xZ2", "Z10xZ2"]:
        g = parse_group_spec(text)
        assert bool(div4_elements(g)) == (g.exponent % 4 == 0)


def test_order_minimality_exhaustive():
    for g in isomorphism_types(64):
        for x in elements(g):
            m = element_order(g, x)
            assert scale(g, m, x) == g.identity
            assert m == brute_order(g, x)
            assert g.exponent % m == 0
            assert g.order % g.exponent == 0


def test_isomorphism_type_count_small():
    assert len(isomorphism_types(8)) == 10


group_strategy = st.lists(st.integers(2, 12), min_size=1, max_size=3).map(
    lambda ms: Group(tuple(ms))
)


@st.composite
def group_and_elements(draw, count=2):
    g = draw(group_strategy)
    xs = [
        tuple(draw(st.integers(0, m - 1)) for m in g.moduli) for _ in range(count)
    ]
    return g, xs


@settings(max_examples=60)
@given(group_and_elements(count=3))
def test_add_commutative_associative(data):
    g, (x, y, z) = data
    assert add(g, x, y) == add(g, y, x)
    assert add(g, add(g, x, y), z) == add(g, x, add(g, y, z))


@settings(max_examples=60)
@given(group_and_elements(count=1))
def test_negate_involution(data):
    g, (x,) = data
    assert negate(g, negate(g, x)) == x
    assert add(g, x, negate(g, x)) == g.identity


@settings(max_examples=60)
@given(group_and_elements(count=1), st.integers(-20, 20))
def test_scale_reduces_like_repeated_addition(data, k):
    g, (x,) = data
    acc = g.identity
    step = x if k >= 0 else negate(g, x)
    for _ in range(abs(k)):
        acc = add(g, acc, step)
    assert scale(g, k, x) == acc


def test_reduce_element():
    g = parse_group_spec("Z2xZ4")
    assert reduce_element(g, (-1, 7)) == (1, 3)
