"""Slow, direct implementations used to cross-check the fast paths.

Everything here is written from the defining formulas with plain loops over
subsets, components and shuffles, sharing no code with :mod:`algebra` beyond
the poset primitives.
"""

from __future__ import annotations

import itertools
from typing import Any, Iterable

from .combo import PosetCombo, TensorCombo
from .poset import (
    PlanePoset, concat_all, enumerate_posets, h_components, ideal_kind, over_all, r_components,
    restrict, stat,
)
from .qpoly import GENERIC, ONE, QPoly


def _subsets(items: Iterable[int]) -> Iterable[frozenset[int]]:
    items = list(items)
    for k in range(len(items) + 1):
        for c in itertools.combinations(items, k):
            yield frozenset(c)


def cross_exponents(r: PlanePoset, inside: frozenset[int]) -> tuple[int, int, int, int]:
    outside = frozenset(range(1, r.n + 1)) - inside
    h_oi, r_oi = stat(r, outside, inside)
    h_io, r_io = stat(r, inside, outside)
    return h_oi, h_io, r_oi, r_io


def _mono(params, exps) -> QPoly:
    w = ONE
    for p, e in zip(params, exps):
        w = w * QPoly.coerce(p) ** e
    return w


def naive_product(p: PlanePoset, q: PlanePoset, params=GENERIC) -> PosetCombo:
    """Scan every poset of the total degree and every subset of the right size."""
    total = p.n + q.n
    terms = []
    for r in enumerate_posets(total):
        for inside in itertools.combinations(range(1, total + 1), q.n):
            inside = frozenset(inside)
            outside = frozenset(range(1, total + 1)) - inside
            if restrict(r, outside) == p and restrict(r, inside) == q:
                terms.append((r, _mono(params, cross_exponents(r, inside))))
    return PosetCombo(terms)


def naive_coproduct(p: PlanePoset, params=GENERIC) -> TensorCombo:
    terms = []
    everything = frozenset(range(1, p.n + 1))
    for inside in _subsets(everything):
        key = (restrict(p, everything - inside), restrict(p, inside))
        terms.append((key, _mono(params, cross_exponents(p, inside))))
    return TensorCombo(terms)


def classical_coproduct(p: PlanePoset) -> TensorCombo:
    """Sum over h-ideals, no weights."""
    everything = frozenset(range(1, p.n + 1))
    terms = []
    for inside in _subsets(everything):
        if ideal_kind(p, inside)[0]:
            terms.append(((restrict(p, everything - inside), restrict(p, inside)), 1))
    return TensorCombo(terms)


def _component_shuffles(left: list[PlanePoset], right: list[PlanePoset], first: Any, second: Any, glue):
    k, l = len(left), len(right)
    parts = left + right
    terms = []
    for slots in itertools.combinations(range(k + l), k):
        order: list[int] = []
        li, ri = iter(range(k)), iter(range(k, k + l))
        slot_set = set(slots)
        for pos in range(k + l):
            order.append(next(li) if pos in slot_set else next(ri))
        place = {comp: pos for pos, comp in enumerate(order)}
        w = ONE
        for i in range(k):
            for j in range(k, k + l):
                base = first if place[i] < place[j] else second
                w = w * QPoly.coerce(base) ** (parts[i].n * parts[j].n)
        terms.append((glue([parts[c] for c in order]), w))
    return PosetCombo(terms)


def shuffle_over_components(p: PlanePoset, q: PlanePoset, q1: Any = GENERIC[0], q2: Any = GENERIC[1]) -> PosetCombo:
    """Product at ``q3 = q4 = 0``: shuffle the r-irreducible components and
    stack them with the over product."""
    return _component_shuffles(r_components(p), r_components(q), q1, q2, over_all)


def shuffle_concat_components(p: PlanePoset, q: PlanePoset, q3: Any = GENERIC[2], q4: Any = GENERIC[3]) -> PosetCombo:
    """Product at ``q1 = q2 = 0``: shuffle the h-irreducible components and
    concatenate them."""
    return _component_shuffles(h_components(p), h_components(q), q3, q4, concat_all)


def component_coproduct(p: PlanePoset, kind: str, a: Any, b: Any) -> TensorCombo:
    """Split the components (``"h"`` for concatenation factors, ``"r"`` for
    over-product factors) into two subsequences; the weight is
    ``a^{w(J)} b^{w(J^c)}`` with ``w(J)`` summing ``|P_i||P_j|`` over
    ``i`` in ``J``, ``j`` not in ``J``, ``i < j``."""
    comps = h_components(p) if kind == "h" else r_components(p)
    glue = concat_all if kind == "h" else over_all
    k = len(comps)
    a, b = QPoly.coerce(a), QPoly.coerce(b)

    def w(js: frozenset[int]) -> int:
        return sum(comps[i].n * comps[j].n for i in js for j in range(k) if j not in js and i < j)

    terms = []
    for js in _subsets(range(k)):
        rest = frozenset(range(k)) - js
        left = glue([comps[i] for i in sorted(js)])
        right = glue([comps[i] for i in sorted(rest)])
        terms.append(((left, right), a ** w(js) * b ** w(rest)))
    return TensorCombo(terms)


__all__ = [
    "cross_exponents", "naive_product", "naive_coproduct", "classical_coproduct",
    "shuffle_over_components", "shuffle_concat_components", "component_coproduct",
]
