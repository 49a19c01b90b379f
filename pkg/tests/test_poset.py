import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeposets.poset import (
    EMPTY, GROUP, PlanePoset, RelationKind, classify, compose, concat, contains_pattern, enumerate_posets,
    format_poset, from_perm, h_components, h_total, ideal_kind, is_forest, is_wn, lex_less, linear_extensions,
    n_patterns, over, parse_poset, parse_subset, r_components, r_total, rel, restrict, stat, to_perm, transform,
)

P = lambda s: from_perm(tuple(int(c) for c in s))  # noqa: E731

perms = st.integers(0, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def test_encoding_examples():
    assert to_perm(P("12")) == (1, 2) and P("12").h_less(1, 2)
    assert P("21").r_less(1, 2)
    assert to_perm(EMPTY) == ()
    with pytest.raises(ValueError):
        from_perm((1, 1))
    with pytest.raises(ValueError):
        from_perm((0, 1))


def test_relations():
    assert rel(P("12"), 1, 2) is RelationKind.H_LESS
    assert rel(P("12"), 2, 1) is RelationKind.H_GREATER
    assert rel(P("21"), 1, 2) is RelationKind.R_LESS
    assert rel(P("21"), 2, 1) is RelationKind.R_GREATER
    assert rel(P("213"), 2, 2) is RelationKind.EQUAL
    with pytest.raises(IndexError):
        rel(P("12"), 0, 1)
    with pytest.raises(IndexError):
        rel(P("12"), 1, 3)


def test_stat_examples():
    assert stat(P("12"), {1}, {2}) == (1, 0)
    assert stat(P("21"), {1}, {2}) == (0, 1)
    assert stat(P("2413"), set(), {1, 2}) == (0, 0)
    # diagonal pairs count in both statistics
    assert stat(P("12"), {1, 2}, {1, 2}) == (3, 2)


def test_restrict_examples():
    assert restrict(P("231"), {1, 2}) == P("12")
    assert restrict(P("231"), {1, 3}) == P("21")
    assert restrict(P("2413"), {1, 2, 3, 4}) == P("2413")
    assert restrict(P("2413"), set()) == EMPTY


def test_ideal_examples():
    assert ideal_kind(P("12"), {2}) == (True, True, True)
    assert ideal_kind(P("12"), {1}) == (False, True, False)
    assert ideal_kind(P("12"), set()) == (True, True, True)
    assert ideal_kind(P("21"), {1}) == (True, False, False)


def test_components_examples():
    assert h_components(P("231")) == [P("12"), P("1")]
    assert r_components(P("213")) == [P("21"), P("1")]
    assert h_components(P("2413")) == [P("2413")]
    assert r_components(P("2413")) == [P("2413")]
    assert h_components(EMPTY) == []


def test_products_examples():
    assert over(P("1"), P("12")) == P("123")
    assert over(P("21"), P("1")) == P("213")
    assert concat(P("132"), EMPTY) == P("132")
    assert concat(P("12"), P("1")) == P("231")
    assert concat(P("1"), P("12")) == P("312")


def test_transform_examples():
    assert transform(P("12"), "iota") == P("21")
    assert transform(P("132"), "gamma") == P("213")
    for p in enumerate_posets(4):
        for g in ("alpha", "beta", "gamma", "iota"):
            assert transform(transform(p, g), g) == p
    with pytest.raises(ValueError):
        transform(P("1"), "delta")


def test_group_is_closed():
    for a in GROUP:
        for b in GROUP:
            assert compose(a, b) in GROUP
        assert compose(a, "id") == a == compose("id", a)


def test_enumeration():
    assert enumerate_posets(0) == [EMPTY]
    assert len(enumerate_posets(2)) == 2
    assert len(enumerate_posets(4)) == 24
    assert [to_perm(p) for p in enumerate_posets(3)] == sorted(itertools.permutations((1, 2, 3)))
    with pytest.raises(ValueError):
        enumerate_posets(-1)


def test_lex_order():
    assert lex_less(P("123"), P("132"))
    assert not lex_less(P("132"), P("132"))
    with pytest.raises(ValueError):
        lex_less(P("1"), P("12"))


def test_patterns():
    assert contains_pattern(P("213"), P("213"))
    assert not contains_pattern(P("123"), P("213"))
    assert contains_pattern(P("2413"), P("12"))
    assert sorted(n_patterns()) == [P("2413"), P("3142")]
    assert classify(P("213")) == (False, True)
    assert sum(map(is_forest, enumerate_posets(4))) == 14
    assert sum(map(is_wn, enumerate_posets(4))) == 22


def test_linear_extension_examples():
    assert linear_extensions(P("12")) == [(1, 2)]
    assert linear_extensions(P("21")) == [(1, 2), (2, 1)]
    assert linear_extensions(P("132")) == [(1, 2, 3), (1, 3, 2)]
    assert linear_extensions(EMPTY) == [()]


def test_totals():
    assert (h_total(P("12")), r_total(P("12"))) == (1, 0)
    assert h_total(EMPTY) == 0
    for p in enumerate_posets(4):
        assert h_total(p) + r_total(p) == 6


def test_text_forms():
    assert parse_poset("p:213") == P("213")
    assert parse_poset("p:") == EMPTY
    assert format_poset(P("213")) == "p:213"
    long = from_perm(tuple(range(10, 0, -1)))
    assert format_poset(long) == "p:10,9,8,7,6,5,4,3,2,1"
    assert parse_poset(format_poset(long)) == long
    assert parse_subset("{1,3,4}") == frozenset({1, 3, 4})
    assert parse_subset("{}") == frozenset()
    for bad in ("p:1a", "p:12345678910", "p:1,1"):
        with pytest.raises(ValueError):
            parse_poset(bad)


@given(perms)
@settings(max_examples=200, deadline=None)
def test_roundtrip_and_plane_condition(w):
    p = from_perm(w)
    assert to_perm(p) == w
    assert parse_poset(format_poset(p)) == p
    for i, j in itertools.combinations(range(1, p.n + 1), 2):
        kinds = [p.h_less(i, j), p.h_less(j, i), p.r_less(i, j), p.r_less(j, i)]
        assert sum(kinds) == 1
        assert not p.h_less(j, i) and not p.r_less(j, i)


@given(perms)
@settings(max_examples=100, deadline=None)
def test_factorizations_reassemble(w):
    p = from_perm(w)
    hs, rs = h_components(p), r_components(p)
    out = EMPTY
    for c in hs:
        out = concat(out, c)
    assert out == p
    out = EMPTY
    for c in rs:
        out = over(out, c)
    assert out == p
    assert all(len(h_components(c)) == 1 for c in hs)


@given(perms, perms)
@settings(max_examples=100, deadline=None)
def test_products_restrict_back(a, b):
    p, q = from_perm(a), from_perm(b)
    for r in (concat(p, q), over(p, q)):
        assert restrict(r, range(1, p.n + 1)) == p
        assert restrict(r, range(p.n + 1, p.n + q.n + 1)) == q


@given(perms)
@settings(max_examples=100, deadline=None)
def test_transforms_preserve_size_and_swap_totals(w):
    p = from_perm(w)
    ip = transform(p, "iota")
    assert ip.n == p.n
    assert (h_total(ip), r_total(ip)) == (r_total(p), h_total(p))
    assert len(linear_extensions(p)) <= math.factorial(p.n)


def test_poset_is_hashable_and_ordered():
    assert len({P("12"), P("12"), P("21")}) == 2
    assert P("1") < P("12") < P("21")
    assert isinstance(P("1"), PlanePoset)
