import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from planeposets.fqsym import perm_length
from planeposets.linalg import det_bareiss, det_numeric, rank_numeric
from planeposets.pairing import gram
from planeposets.qpoly import ONE, Q1, Q2, Q3, Q4, ZERO, QPoly

VARS = (Q1, Q2, Q3, Q4)


def leibniz(m):
    n = len(m)
    total = ZERO
    for s in itertools.permutations(range(n)):
        term = ONE if perm_length(s) % 2 == 0 else -ONE
        for i, j in enumerate(s):
            term = term * m[i][j]
        total = total + term
    return total


entries = st.builds(lambda c, v, e: QPoly.coerce(c) + v * e, st.integers(-3, 3), st.sampled_from(VARS),
                    st.integers(-2, 2))


@given(st.integers(0, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
@settings(max_examples=60, deadline=None)
def test_bareiss_matches_leibniz(m):
    assert det_bareiss(m) == leibniz(m)


def test_bareiss_on_gram_matrices():
    for n in range(4):
        g = gram(n)
        assert g.det() == leibniz(g.entries)
    point = {"q1": 2, "q2": -1, "q3": 3, "q4": 5}
    g = gram(3).specialize(point)
    assert det_bareiss(g.entries) == QPoly.coerce(int(det_numeric(g.entries)))


def test_bareiss_needs_row_swap():
    m = [[ZERO, Q1], [Q2, Q3]]
    assert det_bareiss(m) == -(Q1 * Q2)


def test_numeric_routines():
    assert det_numeric([[1, 2], [3, 4]]) == -2
    assert det_numeric([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert det_numeric([]) == 1
    assert rank_numeric([[1, 2], [2, 4]]) == 1
    assert rank_numeric([[1, 0], [0, 1], [1, 1]]) == 2
    assert rank_numeric([]) == 0
