import pytest
from hypothesis import given, strategies as st

from intersection_graphs.perm import (CycleParseError, DegreeMismatch, Permutation, compose, conjugate,
                                      cycle_conjugator, element_props, inverse, parse_cycles, power, render,
                                      standard_cycle, transposition)


@st.composite
def perms(draw, degree=None):
    n = degree if degree is not None else draw(st.integers(1, 12))
    images = draw(st.permutations(list(range(n))))
    return Permutation(n, tuple(images))


@st.composite
def perm_tuples(draw, k):
    n = draw(st.integers(1, 12))
    return [draw(perms(n)) for _ in range(k)]


def test_parse_three_cycle():
    p = parse_cycles("(1,2,3)", 5)
    assert p.images == (1, 2, 0, 3, 4)


@pytest.mark.parametrize("text", ["()", "", "  ( )  "])
def test_parse_identity(text):
    assert parse_cycles(text, 4) == Permutation.identity(4)


def test_parse_long_13_cycle():
    p = parse_cycles("(1,8,10,13,7,5,6,12,9,11,3,4,2)", 13)
    assert p.cycle_type() == (13,)
    assert p.order == 13 and p.parity == "even"


def test_parse_whitespace_and_products():
    p = parse_cycles(" (1, 2)( 3 ,4,5) ", 6)
    assert p.images == (1, 0, 3, 4, 2, 5)


@pytest.mark.parametrize("text, token", [
    ("(1,2,1)", "'1'"),
    ("(1,7)", "'7'"),
    ("(1,2", "unclosed"),
    ("(1,,2)", "','"),
    ("1,2)", "'1'"),
    ("(1,a)", "'a'"),
    ("(1,2,)", "dangling"),
    ("(1 2)", "'2'"),
])
def test_parse_errors_name_token(text, token):
    with pytest.raises(CycleParseError, match=token):
        parse_cycles(text, 5)


def test_compose_left_to_right():
    a = parse_cycles("(1,2)", 3)
    b = parse_cycles("(2,3)", 3)
    assert compose(a, b) == parse_cycles("(1,3,2)", 3)
    assert a * b == parse_cycles("(1,3,2)", 3)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_conjugate_standard_cycle_by_last_transposition():
    for n in (5, 13, 19, 23):
        g_a = standard_cycle(n)
        g_b = conjugate(g_a, transposition(n - 1, n, n))
        expected = "(" + ",".join(map(str, list(range(1, n - 1)) + [n, n - 1])) + ")"
        assert render(g_b) == expected


def test_element_props():
    assert element_props(parse_cycles("(1,2)", 4)) == (2, "odd", (2, 1, 1))
    g = standard_cycle(23)
    assert element_props(g)[:2] == (23, "even")
    assert parse_cycles("(1,2)(3,4,5)", 5).order == 6


@given(perms())
def test_inverse_and_identity(p):
    e = Permutation.identity(p.degree)
    assert compose(p, inverse(p)) == e
    assert compose(e, p) == p == compose(p, e)


@given(perms())
def test_render_round_trip(p):
    assert parse_cycles(render(p), p.degree) == p


@given(perm_tuples(3))
def test_associative(t):
    p, q, r = t
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perm_tuples(3))
def test_conjugation_is_an_action(t):
    p, s, u = t
    assert conjugate(p, compose(s, u)) == conjugate(conjugate(p, s), u)
    assert conjugate(p, s).cycle_type() == p.cycle_type()
    assert conjugate(p, Permutation.identity(p.degree)) == p


@given(perms())
def test_order_and_parity(p):
    assert power(p, p.order).is_identity()
    assert all(not power(p, k).is_identity() for k in range(1, p.order))
    transpositions = sum(len(c) - 1 for c in p.cycles())
    assert p.is_even == (transpositions % 2 == 0)
    assert (p.degree - len(p.cycle_type())) % 2 == (0 if p.is_even else 1)


@given(perm_tuples(2))
def test_cycle_conjugator(t):
    p, s = t
    q = conjugate(p, s)
    c = cycle_conjugator(p, q)
    assert conjugate(p, c) == q


def test_cycle_conjugator_rejects_different_types():
    with pytest.raises(ValueError):
        cycle_conjugator(parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3))


def test_explicit_degree_keeps_fixed_points():
    p = parse_cycles("(1,2)", 7)
    assert p.degree == 7 and p.cycle_type() == (2, 1, 1, 1, 1, 1)
