"""Deformed product and coproduct on the span of plane posets.

Both structures come from the same data: for a plane poset ``R`` and a subset
``I`` of its elements we record the two restrictions and the four cross
statistics

    (h from R\\I to I, h from I to R\\I, r from R\\I to I, r from I to R\\I).

The coproduct of ``R`` sums over all subsets; the product of ``P`` and ``Q``
collects every ``(R, I)`` whose restrictions are ``(P, Q)``. The product table
for a given total degree is built once by scanning every poset of that degree
and every subset, then cached.

Parameters are a 4-tuple of polynomials substituted for ``(q1, q2, q3, q4)``;
the default is the generic tuple, so results stay fully symbolic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Any, Callable, Sequence

import numpy as np

from .combo import PosetCombo, TensorCombo, _accumulate, as_poset_combo
from .poset import EMPTY, PlanePoset, concat, enumerate_posets, h_total, over, r_total, standardize, transform
from .qpoly import GENERIC, ONE, Q4, T, QPoly

Params = tuple[QPoly, QPoly, QPoly, QPoly]
Exponents = tuple[int, int, int, int]


def make_params(params: Sequence[Any] | None) -> Params:
    """Normalize a parameter tuple; ``None`` means generic ``(q1, q2, q3, q4)``."""
    if params is None:
        return GENERIC
    if len(params) != 4:
        raise ValueError(f"expected 4 parameters, got {len(params)}")
    return tuple(QPoly.coerce(p) for p in params)  # type: ignore[return-value]


@lru_cache(maxsize=None)
def weight(params: Params, exps: Exponents) -> QPoly:
    if params == GENERIC:
        return QPoly.monomial(exps + (0,))
    w = ONE
    for p, e in zip(params, exps):
        if e:
            w = w * p**e
    return w


@lru_cache(maxsize=None)
def _mask_matrix(n: int) -> np.ndarray:
    """Row ``m`` is the indicator vector of the subset encoded by bits of ``m``."""
    m = np.arange(1 << n)[:, None]
    return ((m >> np.arange(n)[None, :]) & 1).astype(np.int64)


@lru_cache(maxsize=None)
def splits(p: PlanePoset) -> tuple[tuple[PlanePoset, PlanePoset, Exponents], ...]:
    """All ``(P\\I, I, exponents)`` for subsets ``I`` of ``p``, indexed by bitmask.

    Bit ``k`` of the mask selects element ``k+1``.
    """
    n = p.n
    if n == 0:
        return ((EMPTY, EMPTY, (0, 0, 0, 0)),)
    inside = _mask_matrix(n)
    outside = 1 - inside
    h = p.h_matrix.astype(np.int64)
    r = p.r_matrix.astype(np.int64)
    h_out_in = ((outside @ h) * inside).sum(axis=1)
    h_in_out = ((inside @ h) * outside).sum(axis=1)
    r_out_in = ((outside @ r) * inside).sum(axis=1)
    r_in_out = ((inside @ r) * outside).sum(axis=1)
    code = p.code
    out = []
    for mask in range(1 << n):
        left = [code[k] for k in range(n) if not mask >> k & 1]
        right = [code[k] for k in range(n) if mask >> k & 1]
        exps = (int(h_out_in[mask]), int(h_in_out[mask]), int(r_out_in[mask]), int(r_in_out[mask]))
        out.append((PlanePoset(standardize(left)), PlanePoset(standardize(right)), exps))
    return tuple(out)


@lru_cache(maxsize=None)
def _product_table(total: int) -> dict[tuple[PlanePoset, PlanePoset], tuple[tuple[PlanePoset, Exponents], ...]]:
    table: dict[tuple[PlanePoset, PlanePoset], list] = {}
    for r in enumerate_posets(total):
        for left, right, exps in splits(r):
            table.setdefault((left, right), []).append((r, exps))
    return {k: tuple(v) for k, v in table.items()}


def _cross(code: Sequence[int], inside: frozenset[int]) -> Exponents:
    h_oi = h_io = r_oi = r_io = 0
    for i, j in itertools.combinations(range(len(code)), 2):
        a, b = i in inside, j in inside
        if a == b:
            continue
        if code[i] < code[j]:
            if b:
                h_oi += 1
            else:
                h_io += 1
        elif b:
            r_oi += 1
        else:
            r_io += 1
    return h_oi, h_io, r_oi, r_io


@lru_cache(maxsize=None)
def _glued_terms(p: PlanePoset, q: PlanePoset) -> tuple[tuple[PlanePoset, Exponents], ...]:
    """Build every gluing directly: pick the positions and the values taken by ``q``."""
    n, k = p.n + q.n, q.n
    out = []
    for spots in itertools.combinations(range(n), k):
        inside = frozenset(spots)
        for values in itertools.combinations(range(1, n + 1), k):
            rest = [v for v in range(1, n + 1) if v not in values]
            qi, pi = iter(q.code), iter(p.code)
            code = tuple(values[next(qi) - 1] if i in inside else rest[next(pi) - 1] for i in range(n))
            out.append((PlanePoset(code), _cross(code, inside)))
    return tuple(out)


TABLE_MAX_DEGREE = 6


def product_terms(p: PlanePoset, q: PlanePoset) -> tuple[tuple[PlanePoset, Exponents], ...]:
    """Raw structure constants: every ``(R, exponents)`` gluing ``p`` below ``q``.

    Up to ``TABLE_MAX_DEGREE`` the answer comes from the cached table of all
    splits; above it the gluings are built directly.
    """
    if p.n + q.n > TABLE_MAX_DEGREE:
        return _glued_terms(p, q)
    return _product_table(p.n + q.n).get((p, q), ())


@lru_cache(maxsize=None)
def _basis_product(p: PlanePoset, q: PlanePoset, params: Params) -> dict:
    acc: dict = {}
    for r, exps in product_terms(p, q):
        _accumulate(acc, r, weight(params, exps))
    return acc


@lru_cache(maxsize=None)
def _basis_coproduct(p: PlanePoset, params: Params) -> dict:
    acc: dict = {}
    for left, right, exps in splits(p):
        _accumulate(acc, (left, right), weight(params, exps))
    return acc


def product_q(x: PlanePoset | PosetCombo, y: PlanePoset | PosetCombo, params: Sequence[Any] | None = None) -> PosetCombo:
    """Deformed product of ``x`` and ``y`` (bilinear)."""
    prm = make_params(params)
    x, y = as_poset_combo(x), as_poset_combo(y)
    acc: dict = {}
    for p, a in x.items():
        for q, b in y.items():
            ab = a * b
            for r, c in _basis_product(p, q, prm).items():
                _accumulate(acc, r, ab * c)
    return PosetCombo._wrap(acc)


def multiply(t: TensorCombo, params: Sequence[Any] | None = None) -> PosetCombo:
    """Apply the deformed product to a combination of pairs."""
    prm = make_params(params)
    acc: dict = {}
    for (p, q), a in t.items():
        for r, c in _basis_product(p, q, prm).items():
            _accumulate(acc, r, a * c)
    return PosetCombo._wrap(acc)


def coproduct_q(x: PlanePoset | PosetCombo, params: Sequence[Any] | None = None) -> TensorCombo:
    """Deformed coproduct: sum over subsets ``I`` of ``(P\\I) ⊗ I`` with weights."""
    prm = make_params(params)
    acc: dict = {}
    for p, a in as_poset_combo(x).items():
        for key, c in _basis_coproduct(p, prm).items():
            _accumulate(acc, key, a * c)
    return TensorCombo._wrap(acc)


def reduced_coproduct(x: PlanePoset | PosetCombo, params: Sequence[Any] | None = None) -> TensorCombo:
    """Coproduct minus the ``x ⊗ 1`` and ``1 ⊗ x`` terms (on positive degrees)."""
    acc: dict = {}
    for (a, b), c in coproduct_q(x, params).items():
        if a.n and b.n:
            acc[(a, b)] = c
    return TensorCombo._wrap(acc)


def counit(x: PlanePoset | PosetCombo) -> QPoly:
    return as_poset_combo(x)[EMPTY]


def braid(t: TensorCombo, q: Any = Q4) -> TensorCombo:
    """``P ⊗ Q -> q^{|P||Q|} Q ⊗ P``."""
    q = QPoly.coerce(q)
    acc: dict = {}
    for (a, b), c in t.items():
        _accumulate(acc, (b, a), c * q ** (a.n * b.n))
    return TensorCombo._wrap(acc)


def specialize(x, assignment):
    return x.specialize(assignment)


def _bilinear(f: Callable[[PlanePoset, PlanePoset], PlanePoset]):
    def op(x: PlanePoset | PosetCombo, y: PlanePoset | PosetCombo) -> PosetCombo:
        acc: dict = {}
        for p, a in as_poset_combo(x).items():
            for q, b in as_poset_combo(y).items():
                _accumulate(acc, f(p, q), a * b)
        return PosetCombo._wrap(acc)

    op.__name__ = f.__name__ + "_product"
    return op


concat_product = _bilinear(concat)
concat_product.__doc__ = "Undeformed product: all cross pairs are r-related."
over_product = _bilinear(over)
over_product.__doc__ = "Undeformed product where every element of ``x`` is h-below every element of ``y``."


def transform_combo(x: PlanePoset | PosetCombo, g: str) -> PosetCombo:
    return as_poset_combo(x).map_basis(lambda p: transform(p, g))  # type: ignore[return-value]


def upsilon(x: PlanePoset | PosetCombo, t: Any = T, kind: str = "h") -> PosetCombo:
    """``P -> t^{h(P)} P`` (kind ``"h"``) or ``P -> t^{r(P)} P`` (kind ``"r"``)."""
    stat = {"h": h_total, "r": r_total}[kind]
    t = QPoly.coerce(t)
    acc: dict = {}
    for p, a in as_poset_combo(x).items():
        _accumulate(acc, p, a * t ** stat(p))
    return PosetCombo._wrap(acc)


def tensor_map(t: TensorCombo, *maps: Callable[[PlanePoset], Any] | None) -> TensorCombo:
    """Apply a linear map to each tensor factor (``None`` leaves it alone).

    Each map sends a basis poset to a :class:`PosetCombo` or a
    :class:`TensorCombo`; tensor outputs are flattened into the key, so
    ``tensor_map(coproduct_q(p), coproduct_q, None)`` is a triple tensor.
    """
    acc: dict = {}
    for key, c in t.items():
        if len(key) != len(maps):
            raise ValueError("number of maps must match tensor arity")
        partial: dict = {(): c}
        for factor, f in zip(key, maps):
            if f is None:
                pieces = (((factor,), ONE),)
            else:
                image = f(factor)
                if isinstance(image, PlanePoset):
                    image = as_poset_combo(image)
                if isinstance(image, TensorCombo):
                    pieces = tuple(image.items())
                elif isinstance(image, PosetCombo):
                    pieces = tuple(((k,), v) for k, v in image.items())
                else:
                    # scalar-valued map such as the counit: the factor disappears
                    pieces = (((), QPoly.coerce(image)),)
            nxt: dict = {}
            for pk, pc in partial.items():
                for k, v in pieces:
                    _accumulate(nxt, pk + k, pc * v)
            partial = nxt
        for k, v in partial.items():
            _accumulate(acc, k, v)
    return _collapse(acc)


def _collapse(acc: dict):
    """Tensor keys of length one become a plain combination."""
    if acc and all(len(k) == 1 for k in acc):
        return PosetCombo._wrap({k[0]: v for k, v in acc.items()})
    return TensorCombo._wrap(acc)


def tensor_multiply(
    s: TensorCombo,
    t: TensorCombo,
    mult: Callable[[PlanePoset, PlanePoset], PosetCombo],
    twist: Callable[[PlanePoset, PlanePoset, PlanePoset, PlanePoset], QPoly] | None = None,
) -> TensorCombo:
    """``(a ⊗ b)(c ⊗ d) = twist(a,b,c,d) * mult(a,c) ⊗ mult(b,d)`` on pairs."""
    acc: dict = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            w = x * y
            if twist is not None:
                w = w * twist(a, b, c, d)
                if w.is_zero():
                    continue
            left = mult(a, c)
            right = mult(b, d)
            for l, u in left.items():
                for r, v in right.items():
                    _accumulate(acc, (l, r), w * u * v)
    return TensorCombo._wrap(acc)


def basis_combos(n: int) -> list[PosetCombo]:
    return [as_poset_combo(p) for p in enumerate_posets(n)]


def compositions_of(total: int, parts: int) -> list[tuple[int, ...]]:
    """Degree splits ``(d1, ..., dk)`` with ``sum = total``, used by the exhaustive checks."""
    return [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]


__all__ = [
    "make_params", "weight", "splits", "product_terms", "product_q", "multiply", "coproduct_q",
    "reduced_coproduct", "counit", "braid", "specialize", "concat_product", "over_product",
    "transform_combo", "upsilon", "tensor_map", "tensor_multiply", "basis_combos", "compositions_of",
]
