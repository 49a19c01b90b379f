import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeposets.algebra import (
    braid, concat_product, coproduct_q, counit, make_params, multiply, over_product, product_q,
    reduced_coproduct, specialize, tensor_map, upsilon,
)
from planeposets.combo import PosetCombo, TensorCombo
from planeposets.poset import EMPTY, enumerate_posets, from_perm
from planeposets.qpoly import ONE, Q1, Q2, Q3, Q4, T, ZERO, parse_poly

P = lambda s: from_perm(tuple(int(c) for c in s)) if s else EMPTY  # noqa: E731
one, two, two_roots = P("1"), P("12"), P("21")


def combo(*terms):
    return PosetCombo((P(s), parse_poly(c) if isinstance(c, str) else c) for s, c in terms)


def tens(*terms):
    return TensorCombo(((P(a), P(b)), parse_poly(c) if isinstance(c, str) else c) for a, b, c in terms)


def test_product_of_single_points():
    # both restrictions of a 2-element poset to single points are the point
    assert product_q(one, one) == combo(("12", "q1+q2"), ("21", "q3+q4"))


def test_product_point_with_chain():
    expected = combo(("312", "q3^2"), ("231", "q4^2"), ("132", "q2*q3+q2*q4"), ("213", "q1*q3+q1*q4"),
                     ("123", "q1^2+q1*q2+q2^2"))
    assert product_q(one, two) == expected


def test_unit():
    for p in enumerate_posets(3):
        assert product_q(EMPTY, p) == PosetCombo({p: ONE}) == product_q(p, EMPTY)


def test_coproduct_examples():
    assert coproduct_q(two) == tens(("12", "", 1), ("", "12", 1), ("1", "1", "q1+q2"))
    assert coproduct_q(two_roots) == tens(("21", "", 1), ("", "21", 1), ("1", "1", "q3+q4"))
    assert coproduct_q(one) == tens(("1", "", 1), ("", "1", 1))
    assert coproduct_q(EMPTY) == tens(("", "", 1))


def test_reduced_coproducts_degree_three():
    s = "q1^2+q1*q2+q2^2"
    assert reduced_coproduct(P("123")) == tens(("1", "12", s), ("12", "1", s))
    assert reduced_coproduct(P("132")) == tens(
        ("1", "12", "q2*(q3+q4)"), ("12", "1", "q1*(q3+q4)"), ("1", "21", "q1^2"), ("21", "1", "q2^2"))
    assert reduced_coproduct(P("213")) == tens(
        ("1", "12", "q1*(q3+q4)"), ("12", "1", "q2*(q3+q4)"), ("1", "21", "q2^2"), ("21", "1", "q1^2"))
    assert reduced_coproduct(P("231")) == tens(
        ("1", "12", "q4^2"), ("12", "1", "q3^2"), ("1", "21", "(q1+q2)*q3"), ("21", "1", "(q1+q2)*q4"))
    assert reduced_coproduct(P("312")) == tens(
        ("1", "12", "q3^2"), ("12", "1", "q4^2"), ("1", "21", "(q1+q2)*q4"), ("21", "1", "(q1+q2)*q3"))
    s = "q3^2+q3*q4+q4^2"
    assert reduced_coproduct(P("321")) == tens(("1", "21", s), ("21", "1", s))


def test_counit():
    assert counit(EMPTY) == ONE
    assert counit(one) == ZERO
    assert counit(PosetCombo({EMPTY: 3, two: Q1})) == 3


def test_braid():
    assert braid(tens(("1", "12", 1))) == tens(("12", "1", "q4^2"))
    assert braid(tens(("", "12", 1))) == tens(("12", "", 1))
    assert braid(tens(("1", "1", 1))) == tens(("1", "1", "q4"))
    assert braid(tens(("1", "1", 1)), Q3) == tens(("1", "1", "q3"))


def test_specialize():
    assert specialize(product_q(one, one), {"q1": 1, "q2": 0, "q3": 0, "q4": 0}) == PosetCombo({two: ONE})
    assert specialize(product_q(one, one), {}) == product_q(one, one)
    assert specialize(reduced_coproduct(two), {"q1": 0, "q2": 0}) == TensorCombo()
    assert product_q(one, one, (1, 0, 0, 0)) == over_product(one, one)


def test_make_params():
    assert make_params(None) == (Q1, Q2, Q3, Q4)
    assert make_params((1, 0, Q3, 2)) == (ONE, ZERO, Q3, 2 * ONE)
    with pytest.raises(ValueError):
        make_params((1, 2, 3))


def test_multiply_matches_product():
    t = tens(("1", "12", "q1"), ("21", "1", 2))
    assert multiply(t) == product_q(one, two) * Q1 + product_q(two_roots, one) * 2


def test_bilinearity():
    x = PosetCombo({one: Q1, EMPTY: 2})
    y = PosetCombo({two: ONE, one: Q4})
    expected = (product_q(one, two) * Q1 + product_q(one, one) * (Q1 * Q4)
                + PosetCombo({two: 2 * ONE, one: 2 * Q4}))
    assert product_q(x, y) == expected


def test_undeformed_products():
    assert concat_product(one, two) == PosetCombo({P("312"): ONE})
    assert over_product(one, two) == PosetCombo({P("123"): ONE})


def test_upsilon():
    assert upsilon(two) == PosetCombo({two: T})
    assert upsilon(two, kind="r") == PosetCombo({two: ONE})
    assert upsilon(P("321"), Q1, kind="r") == PosetCombo({P("321"): Q1**3})


def test_tensor_map_counit_drops_factor():
    assert tensor_map(coproduct_q(two), counit, None) == PosetCombo({two: ONE})
    triple = tensor_map(coproduct_q(one), coproduct_q, None)
    assert all(len(k) == 3 for k in triple)


def test_json_roundtrip():
    x = product_q(one, two)
    assert PosetCombo.from_json(x.to_json()) == x
    t = coproduct_q(P("213"))
    assert TensorCombo.from_json(t.to_json()) == t
    assert x.to_json_obj()["terms"][0] == {"basis": "123", "coeff": "q1^2 + q1*q2 + q2^2"}


posets4 = st.integers(0, 3).flatmap(lambda n: st.sampled_from(enumerate_posets(n)))


def _poset_of(n):
    return st.sampled_from(enumerate_posets(n))


triples6 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(
    lambda t: sum(t) <= 6).flatmap(lambda t: st.tuples(*map(_poset_of, t)))


@given(triples6)
@settings(max_examples=40, deadline=None)
def test_associativity_random(triple):
    p, q, r = triple
    assert product_q(product_q(p, q), r) == product_q(p, product_q(q, r))


@given(posets4, posets4, st.tuples(*[st.integers(-2, 2)] * 4))
@settings(max_examples=40, deadline=None)
def test_specialization_commutes_with_product(p, q, point):
    assignment = dict(zip(("q1", "q2", "q3", "q4"), point))
    assert product_q(p, q).specialize(assignment) == product_q(p, q, point)


@given(st.integers(0, 4).flatmap(lambda n: st.sampled_from(enumerate_posets(n))))
@settings(max_examples=40, deadline=None)
def test_coassociativity_random(p):
    cop = coproduct_q(p)
    assert tensor_map(cop, coproduct_q, None) == tensor_map(cop, None, coproduct_q)


def test_degree_six_spot_associativity():
    rng = random.Random(7)
    for _ in range(3):
        p, q, r = (rng.choice(enumerate_posets(2)) for _ in range(3))
        assert product_q(product_q(p, q), r) == product_q(p, product_q(q, r))
