import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeposets.pairing import (
    DegreeBoundError, Pairing, anti_diagonal, gram, gram_det, is_anti_triangular, min_partner,
    pair, pair_first, pair_second, phi_stats, s_prime_set, s_set,
)
from planeposets.poset import EMPTY, enumerate_posets, from_perm, transform
from planeposets.qpoly import ONE, Q1, Q2, Q3, Q4, ZERO, parse_poly

P = lambda s: from_perm(tuple(int(c) for c in s)) if s else EMPTY  # noqa: E731
poly = parse_poly


def test_phi_stats_examples():
    assert phi_stats(P("21"), P("21"), (1, 2)) == (0, 0, 1, 0)
    assert phi_stats(P("21"), P("21"), (2, 1)) == (0, 0, 0, 1)
    assert phi_stats(P("12"), P("12"), (1, 2)) == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        phi_stats(P("1"), P("12"), (1,))


def test_first_pairing_small():
    assert pair_first(P("1"), P("1")) == ONE
    assert pair_first(EMPTY, EMPTY) == ONE
    assert pair_first(P("12"), P("12")) == 2 * Q1 * Q2
    assert pair_first(P("12"), P("21")) == Q1 + Q2
    assert pair_first(P("21"), P("21")) == Q3 + Q4
    assert pair_first(P("1"), P("12")) == ZERO


def test_second_pairing_small():
    assert pair_second(P("1"), P("1")) == ONE
    assert pair_second(P("12"), P("12")) == Q1
    assert pair_second(P("12"), P("21")) == Q1
    assert pair_second(P("21"), P("21")) == Q1 + Q4
    assert pair_second(P("132"), P("132")) == poly("q1^2*(q1+q4)")
    assert pair_second(P("231"), P("312")) == poly("q1^3+q1*q4^2")


def test_second_pairing_only_uses_q1_q4():
    for p in enumerate_posets(3):
        for q in enumerate_posets(3):
            v = pair_second(p, q)
            assert v.specialize({"q2": 7, "q3": 11}) == v


def test_bijection_sets():
    assert s_prime_set(P("12"), P("12")) == [(1, 2)]
    assert s_prime_set(P("21"), P("21")) == [(1, 2), (2, 1)]
    for n in range(5):
        for p in enumerate_posets(n):
            assert len(s_set(p, transform(p, "iota"))) == 1
    with pytest.raises(ValueError):
        s_set(P("1"), P("12"))


def test_gram_small():
    assert gram(0).entries == ((ONE,),)
    assert gram(1, Pairing.SECOND).entries == ((ONE,),)
    assert gram(2).entries == ((2 * Q1 * Q2, Q1 + Q2), (Q1 + Q2, Q3 + Q4))
    assert gram(2, "second").entries == ((Q1, Q1), (Q1, Q1 + Q4))
    g = gram(3)
    assert g.is_symmetric() and g.size == 6
    assert [p.code for p in g.labels] == [p.code for p in enumerate_posets(3)]


def test_gram_formats():
    g = gram(2)
    assert g.to_json_obj() == {
        "degree": 2, "pairing": "first", "labels": ["12", "21"],
        "entries": [["2*q1*q2", "q1 + q2"], ["q1 + q2", "q3 + q4"]],
    }
    assert g.to_csv().splitlines()[0] == ",12,21"
    assert "q3 + q4" in g.to_text()


def test_determinants():
    assert gram_det(2, assignment={"q2": 0}) == -Q1**2
    d3 = gram_det(3, assignment={"q2": 0})
    assert d3 in (Q1**18, -(Q1**18))
    assert gram_det(2, "second", {"q1": 1, "q4": 0}) == ZERO
    assert gram_det(0) == ONE


def test_degree_bound(monkeypatch):
    with pytest.raises(DegreeBoundError):
        gram_det(5)
    monkeypatch.setenv("PHL_MAX_DEGREE", "2")
    with pytest.raises(DegreeBoundError):
        gram_det(3)
    monkeypatch.setenv("PHL_MAX_DEGREE", "many")
    with pytest.raises(DegreeBoundError):
        gram_det(1)


def test_anti_triangular_at_q2_zero():
    for n in range(5):
        g = gram(n, params=(Q1, 0, Q3, Q4))
        assert is_anti_triangular(g)
        assert all(e == Q1 ** (n * (n - 1) // 2) for e in anti_diagonal(g))
    assert not is_anti_triangular(gram(2))


def test_min_partner():
    assert min_partner(P("12")) == P("21")
    assert min_partner(EMPTY) == EMPTY
    for n in range(5):
        for p in enumerate_posets(n):
            assert min_partner(p) == transform(p, "iota")


def test_pair_is_bilinear():
    from planeposets.combo import PosetCombo
    x = PosetCombo({P("12"): Q1, P("21"): ONE})
    y = PosetCombo({P("21"): 2 * ONE, P("1"): Q3})
    assert pair(x, y) == 2 * Q1 * (Q1 + Q2) + 2 * (Q3 + Q4)
    assert pair(x, y, "second") == 2 * Q1 * Q1 + 2 * (Q1 + Q4)


posets = st.integers(0, 4).flatmap(lambda n: st.tuples(st.sampled_from(enumerate_posets(n)),
                                                      st.sampled_from(enumerate_posets(n))))


@given(posets)
@settings(max_examples=60, deadline=None)
def test_symmetry(pq):
    p, q = pq
    assert pair_first(p, q) == pair_first(q, p)
    assert pair_second(p, q) == pair_second(q, p)


@given(posets, st.tuples(*[st.integers(-3, 3)] * 4))
@settings(max_examples=60, deadline=None)
def test_specialized_parameters_agree(pq, point):
    p, q = pq
    assignment = dict(zip(("q1", "q2", "q3", "q4"), point))
    assert pair_first(p, q).specialize(assignment) == pair_first(p, q, point)


@given(posets)
@settings(max_examples=60, deadline=None)
def test_classical_values_count_bijections(pq):
    p, q = pq
    assert pair_second(p, q, (1, 0, 0, 1)) == len(s_prime_set(p, q))
    assert pair_first(p, q, (1, 0, 1, 1)).specialize({}) == pair_first(p, q).specialize(
        {"q1": 1, "q2": 0, "q3": 1, "q4": 1})
