from hypothesis import given, settings
from hypothesis import strategies as st

from planeposets.algebra import concat_product, coproduct_q, over_product, product_q
from planeposets.combo import TensorCombo
from planeposets.oracles import (
    classical_coproduct, component_coproduct, cross_exponents, naive_coproduct, naive_product,
    shuffle_concat_components, shuffle_over_components,
)
from planeposets.poset import EMPTY, enumerate_posets, from_perm, h_components
from planeposets.qpoly import Q1, Q2, Q3, Q4

P = lambda s: from_perm(tuple(int(c) for c in s)) if s else EMPTY  # noqa: E731


def poset_of(n):
    return st.sampled_from(enumerate_posets(n))


pairs = st.tuples(st.integers(0, 3), st.integers(0, 2)).flatmap(lambda t: st.tuples(*map(poset_of, t)))
params = st.tuples(*[st.integers(-2, 3)] * 4)


def test_cross_exponents():
    # in the chain 1<2, putting 2 inside gives one h-relation from outside to inside
    assert cross_exponents(P("12"), frozenset({2})) == (1, 0, 0, 0)
    assert cross_exponents(P("12"), frozenset({1})) == (0, 1, 0, 0)
    assert cross_exponents(P("21"), frozenset({2})) == (0, 0, 1, 0)


@given(pairs)
@settings(max_examples=50, deadline=None)
def test_product_matches_naive(pq):
    p, q = pq
    assert product_q(p, q) == naive_product(p, q)


@given(pairs, params)
@settings(max_examples=30, deadline=None)
def test_specialized_product_matches_naive(pq, point):
    p, q = pq
    assert product_q(p, q, point) == naive_product(p, q, point)


@given(st.integers(0, 5).flatmap(poset_of))
@settings(max_examples=50, deadline=None)
def test_coproduct_matches_naive(p):
    assert coproduct_q(p) == naive_coproduct(p)


@given(pairs)
@settings(max_examples=50, deadline=None)
def test_slices_are_component_shuffles(pq):
    p, q = pq
    assert product_q(p, q, (Q1, Q2, 0, 0)) == shuffle_over_components(p, q)
    assert product_q(p, q, (0, 0, Q3, Q4)) == shuffle_concat_components(p, q)


def test_undeformed_limits():
    for p in enumerate_posets(2):
        for q in enumerate_posets(2):
            assert shuffle_over_components(p, q, 1, 0) == over_product(p, q)
            assert shuffle_concat_components(p, q, 1, 0) == concat_product(p, q)


def test_component_coproduct_at_one_splits_components():
    for p in enumerate_posets(4):
        cop = component_coproduct(p, "h", 1, 1)
        total = sum(int(c.constant_term()) for _, c in cop.items())
        assert total == 2 ** len(h_components(p))
        assert cop[(EMPTY, p)] == 1 and cop[(p, EMPTY)] == 1


def test_classical_coproduct():
    assert classical_coproduct(P("12")) == TensorCombo(
        {(P("12"), EMPTY): 1, (P("1"), P("1")): 1, (EMPTY, P("12")): 1})
    for n in range(5):
        for p in enumerate_posets(n):
            assert classical_coproduct(p) == coproduct_q(p, (1, 0, 1, 1))
