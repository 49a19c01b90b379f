"""Plane posets, stored canonically by the permutation that encodes them.

A permutation ``sigma`` of ``1..n`` defines a plane poset on ``{1..n}``:
``i <=_h j`` iff ``i <= j`` and ``sigma(i) <= sigma(j)``, and ``i <=_r j`` iff
``i <= j`` and ``sigma(i) >= sigma(j)``.  Every plane poset arises exactly
once this way, so all queries below are answered from the code word.

Element indices in the public API are 1-based, as are permutation letters.

>>> p = from_perm((2, 1, 3))
>>> [c.code for c in r_components(p)]
[(2, 1), (1,)]
>>> to_perm(over(from_perm((2, 1)), from_perm((1,))))
(2, 1, 3)
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

Permutation = tuple[int, ...]


class RelationKind(enum.Enum):
    H_LESS = "h<"
    H_GREATER = "h>"
    R_LESS = "r<"
    R_GREATER = "r>"
    EQUAL = "="


def check_perm(word: Iterable[int]) -> Permutation:
    """Validate a one-line word on ``1..n`` and return it as a tuple."""
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
    return word


def standardize(word: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a word of distinct integers."""
    if len(set(word)) != len(word):
        raise ValueError(f"repeated letters in {tuple(word)}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


@dataclass(frozen=True, order=True)
class PlanePoset:
    """A plane poset, identified with its encoding permutation.

    Ordering compares ``(n, code)``; within one degree that is the
    lexicographic order used to index Gram matrices.
    """

    n: int = field(init=False, repr=False)
    code: Permutation

    def __post_init__(self):
        object.__setattr__(self, "code", check_perm(self.code))
        object.__setattr__(self, "n", len(self.code))

    def __str__(self) -> str:
        return format_poset(self)

    def __len__(self) -> int:
        return self.n

    @cached_property
    def h_matrix(self) -> np.ndarray:
        """``H[i, j]`` is true iff ``i <_h j`` (strict, 0-based)."""
        s = np.array(self.code, dtype=np.int64)
        idx = np.arange(self.n)
        return (idx[:, None] < idx[None, :]) & (s[:, None] < s[None, :])

    @cached_property
    def r_matrix(self) -> np.ndarray:
        """``R[i, j]`` is true iff ``i <_r j`` (strict, 0-based)."""
        s = np.array(self.code, dtype=np.int64)
        idx = np.arange(self.n)
        return (idx[:, None] < idx[None, :]) & (s[:, None] > s[None, :])

    def h_less(self, i: int, j: int) -> bool:
        return i < j and self.code[i - 1] < self.code[j - 1]

    def r_less(self, i: int, j: int) -> bool:
        return i < j and self.code[i - 1] > self.code[j - 1]


EMPTY = PlanePoset(())


def from_perm(word: Iterable[int]) -> PlanePoset:
    return PlanePoset(tuple(word))


def to_perm(p: PlanePoset) -> Permutation:
    return p.code


def _check_index(p: PlanePoset, i: int) -> None:
    if not 1 <= i <= p.n:
        raise IndexError(f"element {i} out of range 1..{p.n}")


def rel(p: PlanePoset, i: int, j: int) -> RelationKind:
    """The unique relation between elements ``i`` and ``j``."""
    _check_index(p, i)
    _check_index(p, j)
    if i == j:
        return RelationKind.EQUAL
    if p.h_less(i, j):
        return RelationKind.H_LESS
    if p.h_less(j, i):
        return RelationKind.H_GREATER
    if p.r_less(i, j):
        return RelationKind.R_LESS
    return RelationKind.R_GREATER


def stat(p: PlanePoset, xs: Iterable[int], ys: Iterable[int]) -> tuple[int, int]:
    """``(h, r)``: the number of pairs ``(x, y)`` in ``X x Y`` with
    ``x <=_h y`` and with ``x <=_r y``.  Diagonal pairs count in both."""
    xs, ys = list(xs), list(ys)
    code = p.code
    h = r = 0
    for x in xs:
        cx = code[x - 1]
        for y in ys:
            if x == y:
                h += 1
                r += 1
            elif x < y:
                if cx < code[y - 1]:
                    h += 1
                else:
                    r += 1
    return h, r


def restrict(p: PlanePoset, xs: Iterable[int]) -> PlanePoset:
    """The plane subposet on ``xs``, relabelled ``1..|xs|`` in increasing order."""
    xs = sorted(set(xs))
    return PlanePoset(standardize([p.code[x - 1] for x in xs]))


def ideal_kind(p: PlanePoset, ideal: Iterable[int]) -> tuple[bool, bool, bool]:
    """``(is_h_ideal, is_r_ideal, is_biideal)`` for an upward-closure test."""
    members = set(ideal)
    is_h = is_r = True
    for x in members:
        for y in range(x + 1, p.n + 1):
            if y in members:
                continue
            if p.code[x - 1] < p.code[y - 1]:
                is_h = False
            else:
                is_r = False
    return is_h, is_r, is_h and is_r


def concat(p: PlanePoset, q: PlanePoset) -> PlanePoset:
    """The product ``PQ``: ``p`` then ``q``, every cross pair ``<_r``."""
    return PlanePoset(tuple(c + q.n for c in p.code) + q.code)


def over(p: PlanePoset, q: PlanePoset) -> PlanePoset:
    """The product ``P ⊛ Q``: ``p`` then ``q``, every cross pair ``<_h``."""
    return PlanePoset(p.code + tuple(c + p.n for c in q.code))


def _split_points(code: Permutation, kind: str) -> list[int]:
    cuts = []
    n = len(code)
    for k in range(1, n):
        left, right = code[:k], code[k:]
        if kind == "h" and min(left) > max(right):
            cuts.append(k)
        elif kind == "r" and max(left) < min(right):
            cuts.append(k)
    return cuts


def _components(p: PlanePoset, kind: str) -> list[PlanePoset]:
    if p.n == 0:
        return []
    bounds = [0] + _split_points(p.code, kind) + [p.n]
    return [restrict(p, range(a + 1, b + 1)) for a, b in zip(bounds, bounds[1:])]


def h_components(p: PlanePoset) -> list[PlanePoset]:
    """Factors of the unique factorization into concatenation-irreducibles."""
    return _components(p, "h")


def r_components(p: PlanePoset) -> list[PlanePoset]:
    """Factors of the unique factorization into ⊛-irreducibles."""
    return _components(p, "r")


def concat_all(ps: Iterable[PlanePoset]) -> PlanePoset:
    out = EMPTY
    for p in ps:
        out = concat(out, p)
    return out


def over_all(ps: Iterable[PlanePoset]) -> PlanePoset:
    out = EMPTY
    for p in ps:
        out = over(out, p)
    return out


# -- the dihedral group of symmetries ----------------------------------------

# basic maps: swap the two orders, reverse the h-order, reverse the r-order
_BASIC = {
    "iota": (True, False, False),
    "alpha": (False, True, False),
    "beta": (False, False, True),
    "gamma": (False, True, True),
}

GROUP = ("id", "alpha", "beta", "gamma", "iota", "iota_alpha", "iota_beta", "iota_gamma")


def _from_relations(h: np.ndarray, r: np.ndarray) -> PlanePoset:
    """Canonicalize a plane double poset given strict relation matrices."""
    n = h.shape[0]
    below = h | r
    # position in the total order = number of elements strictly below
    pos = below.sum(axis=0)
    order = np.argsort(pos, kind="stable")
    hh = h[np.ix_(order, order)]
    # code(i) - 1 = elements h-below i plus elements r-above i
    code = tuple(int(hh[:, i].sum() + r[order[i], order].sum()) + 1 for i in range(n))
    return PlanePoset(code)


def _apply_basic(p: PlanePoset, name: str) -> PlanePoset:
    swap, rev_h, rev_r = _BASIC[name]
    h, r = p.h_matrix, p.r_matrix
    if rev_h:
        h = h.T
    if rev_r:
        r = r.T
    if swap:
        h, r = r, h
    return _from_relations(h, r)


def transform(p: PlanePoset, g: str) -> PlanePoset:
    """Apply one of the eight symmetries named in :data:`GROUP`.

    ``"iota_alpha"`` means ``iota ∘ alpha`` (apply ``alpha`` first).
    """
    if g not in GROUP:
        raise ValueError(f"unknown group element {g!r}; expected one of {GROUP}")
    if g == "id":
        return p
    for name in reversed(g.split("_")):
        p = _apply_basic(p, name)
    return p


@lru_cache(maxsize=None)
def _probe() -> PlanePoset:
    for n in range(1, 6):
        for p in _enumerate(n):
            if len({transform(p, g) for g in GROUP}) == len(GROUP):
                return p
    raise RuntimeError("no poset with trivial stabilizer found")


def compose(a: str, b: str) -> str:
    """Name of ``a ∘ b``, read off a poset with trivial stabilizer."""
    probe = _probe()
    target = transform(transform(probe, b), a)
    return next(g for g in GROUP if transform(probe, g) == target)


# -- enumeration and classification -----------------------------------------

@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[PlanePoset, ...]:
    return tuple(PlanePoset(w) for w in itertools.permutations(range(1, n + 1)))


def enumerate_posets(n: int) -> list[PlanePoset]:
    """All ``n!`` plane posets of degree ``n`` in increasing ``≪`` order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return list(_enumerate(n))


def lex_less(p: PlanePoset, q: PlanePoset) -> bool:
    if p.n != q.n:
        raise ValueError("posets of different degrees are not ≪-comparable")
    return p.code < q.code


def contains_pattern(p: PlanePoset, pattern: PlanePoset) -> bool:
    """True iff ``pattern`` is (isomorphic to) a plane subposet of ``p``."""
    k = pattern.n
    if k > p.n:
        return False
    target = pattern.code
    code = p.code
    for xs in itertools.combinations(range(p.n), k):
        if standardize([code[x] for x in xs]) == target:
            return True
    return False


FOREST_OBSTRUCTION = PlanePoset((2, 1, 3))


def _hasse_edges(p: PlanePoset) -> set[tuple[int, int]]:
    h = p.h_matrix
    n = p.n
    edges = set()
    for i in range(n):
        for j in range(n):
            if h[i, j] and not any(h[i, k] and h[k, j] for k in range(n)):
                edges.add((i, j))
    return edges


def _is_zigzag(p: PlanePoset) -> bool:
    edges = _hasse_edges(p)
    if len(edges) != p.n - 1:
        return False
    deg = [0] * p.n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    if sorted(deg) != [1, 1] + [2] * (p.n - 2):
        return False
    # connected path; alternating means every vertex is minimal or maximal
    h = p.h_matrix
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for i, j in edges:
            for a, b in ((i, j), (j, i)):
                if a == v and b not in seen:
                    seen.add(b)
                    stack.append(b)
    if len(seen) != p.n:
        return False
    return all(not h[:, v].any() or not h[v, :].any() for v in range(p.n))


@lru_cache(maxsize=None)
def _n_patterns() -> tuple[PlanePoset, ...]:
    return tuple(p for p in _enumerate(4) if _is_zigzag(p))


def n_patterns() -> list[PlanePoset]:
    """The degree-4 posets whose h-Hasse graph is the N-shaped zigzag."""
    return list(_n_patterns())


def is_forest(p: PlanePoset) -> bool:
    return not contains_pattern(p, FOREST_OBSTRUCTION)


def is_wn(p: PlanePoset) -> bool:
    return not any(contains_pattern(p, pat) for pat in _n_patterns())


def classify(p: PlanePoset) -> tuple[bool, bool]:
    """``(is_plane_forest, is_wn)``."""
    return is_forest(p), is_wn(p)


def h_total(p: PlanePoset) -> int:
    """Number of strict pairs ``x <_h y``."""
    return int(p.h_matrix.sum())


def r_total(p: PlanePoset) -> int:
    """Number of strict pairs ``x <_r y``."""
    return int(p.r_matrix.sum())


def linear_extensions(p: PlanePoset) -> list[Permutation]:
    """Words listing ``1..n`` with every ``x <_h y`` having ``x`` first,
    in lexicographic order."""
    n = p.n
    preds = [{i for i in range(1, j) if p.h_less(i, j)} for j in range(1, n + 1)]
    out: list[Permutation] = []
    word: list[int] = []
    placed: set[int] = set()

    def extend():
        if len(word) == n:
            out.append(tuple(word))
            return
        for j in range(1, n + 1):
            if j not in placed and preds[j - 1] <= placed:
                word.append(j)
                placed.add(j)
                extend()
                placed.remove(j)
                word.pop()

    extend()
    return out


# -- text form ----------------------------------------------------------------

def format_word(word: Sequence[int]) -> str:
    if len(word) > 9:
        return ",".join(map(str, word))
    return "".join(map(str, word))


def parse_word(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = text.split(",")
        if any(not s.strip().isdigit() for s in parts):
            raise ValueError(f"malformed permutation word {text!r}")
        word = tuple(int(s) for s in parts)
    else:
        if not text.isdigit():
            raise ValueError(f"malformed permutation word {text!r}")
        if len(text) > 9:
            raise ValueError(f"words longer than 9 letters must be comma separated: {text!r}")
        word = tuple(int(c) for c in text)
    return check_perm(word)


def format_poset(p: PlanePoset) -> str:
    return "p:" + format_word(p.code)


def parse_poset(text: str) -> PlanePoset:
    """Parse ``p:<word>``; the prefix is optional."""
    text = text.strip()
    if text.startswith("p:"):
        text = text[2:]
    return PlanePoset(parse_word(text))


def parse_subset(text: str) -> frozenset[int]:
    """Parse ``{1,3,4}``."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"subset must look like {{1,3}}: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(s) for s in body.split(","))
