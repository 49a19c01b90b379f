"""The two deformed pairings on plane posets and their Gram matrices.

A bijection between two posets of size ``n`` is a permutation ``s`` of
``1..n`` through the canonical labelings: element ``i`` goes to ``s[i-1]``.
All bijections of a given size are evaluated at once with numpy: the
relation matrices of the target are permuted along both axes, giving an
``(n!, n, n)`` stack that is compared with the source relations.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Mapping, NamedTuple, Sequence

import numpy as np

from .algebra import make_params, weight
from .combo import PosetCombo, TensorCombo, as_poset_combo
from .linalg import det_bareiss
from .poset import PlanePoset, Permutation, check_perm, enumerate_posets, format_word
from .qpoly import ONE, ZERO, QPoly, poly_canonical_string

DEFAULT_MAX_DEGREE = 4


class Pairing(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class PhiStats(NamedTuple):
    phi1: int
    phi2: int
    phi3: int
    phi4: int


class DegreeBoundError(ValueError):
    """Requested degree exceeds the configured bound."""


def max_degree_cap(default: int = DEFAULT_MAX_DEGREE) -> int:
    """Bound from ``PHL_MAX_DEGREE`` when set, else ``default``."""
    env = os.environ.get("PHL_MAX_DEGREE")
    if env is None:
        return default
    try:
        return min(default, int(env))
    except ValueError:
        raise DegreeBoundError(f"PHL_MAX_DEGREE must be an integer, got {env!r}") from None


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _lengths(n: int) -> np.ndarray:
    p = _perms(n)
    if n < 2:
        return np.zeros(len(p), dtype=np.int64)
    i, j = np.triu_indices(n, 1)
    return (p[:, i] > p[:, j]).sum(axis=1)


def _permuted(m: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """``out[s, i, j] = m[perms[s, i], perms[s, j]]``."""
    return m[perms[:, :, None], perms[:, None, :]]


def _check_same_size(p: PlanePoset, q: PlanePoset) -> None:
    if p.n != q.n:
        raise ValueError(f"posets have different sizes ({p.n} and {q.n})")


def _phi_arrays(p: PlanePoset, q: PlanePoset, perms: np.ndarray) -> np.ndarray:
    hp, rp = p.h_matrix, p.r_matrix
    hq = _permuted(q.h_matrix, perms)
    rq = _permuted(q.r_matrix, perms)
    hq_t = hq.transpose(0, 2, 1)
    rq_t = rq.transpose(0, 2, 1)

    def count(a, b):
        return (a[None] & b).sum(axis=(1, 2))

    hh = count(hp, hq) + count(hp, hq_t)
    phi1 = hh + count(hp, rq) + count(rp, hq)
    phi2 = hh + count(hp, rq_t) + count(rp, hq_t)
    phi3 = count(rp, rq)
    phi4 = count(rp, rq_t)
    return np.stack([phi1, phi2, phi3, phi4], axis=1)


def phi_stats(p: PlanePoset, q: PlanePoset, sigma: Permutation) -> PhiStats:
    """The four pair statistics of the bijection ``sigma`` from ``p`` to ``q``."""
    _check_same_size(p, q)
    sigma = check_perm(sigma)
    if len(sigma) != p.n:
        raise ValueError("permutation size does not match the posets")
    perms = np.array([[s - 1 for s in sigma]], dtype=np.int64).reshape(1, p.n)
    row = _phi_arrays(p, q, perms)[0]
    return PhiStats(*(int(v) for v in row))


def _exponent_counts(rows: np.ndarray) -> tuple[tuple[tuple[int, ...], int], ...]:
    if len(rows) == 0:
        return ()
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    return tuple((tuple(int(v) for v in u), int(c)) for u, c in zip(uniq, counts))


@lru_cache(maxsize=None)
def _first_counts_row(p: PlanePoset) -> dict[PlanePoset, tuple[tuple[tuple[int, ...], int], ...]]:
    """Pairing data of ``p`` against every poset of its size, in one pass."""
    n = p.n
    qs = enumerate_posets(n)
    perms = _perms(n)
    hq = np.stack([q.h_matrix for q in qs])[:, perms[:, :, None], perms[:, None, :]]
    rq = np.stack([q.r_matrix for q in qs])[:, perms[:, :, None], perms[:, None, :]]
    hq_t = hq.transpose(0, 1, 3, 2)
    rq_t = rq.transpose(0, 1, 3, 2)
    hp, rp = p.h_matrix[None, None], p.r_matrix[None, None]

    def count(a, b):
        return (a & b).sum(axis=(2, 3))

    hh = count(hp, hq) + count(hp, hq_t)
    phis = (
        hh + count(hp, rq) + count(rp, hq),
        hh + count(hp, rq_t) + count(rp, hq_t),
        count(rp, rq),
        count(rp, rq_t),
    )
    base = n * (n - 1) // 2 + 1
    keys = ((phis[0] * base + phis[1]) * base + phis[2]) * base + phis[3]
    out = {}
    for q, row in zip(qs, keys):
        vals, counts = np.unique(row, return_counts=True)
        terms = []
        for v, c in zip(vals.tolist(), counts.tolist()):
            v, e4 = divmod(v, base)
            v, e3 = divmod(v, base)
            e1, e2 = divmod(v, base)
            terms.append(((e1, e2, e3, e4), c))
        out[q] = tuple(terms)
    return out


def _first_counts(p: PlanePoset, q: PlanePoset) -> tuple[tuple[tuple[int, ...], int], ...]:
    if p.n != q.n:
        return ()
    if p.n == 0:
        return (((0, 0, 0, 0), 1),)
    return _first_counts_row(p)[q]


def pair_first(p: PlanePoset, q: PlanePoset, params: Sequence[Any] | None = None) -> QPoly:
    """First deformed pairing: sum over all bijections of the phi-weights."""
    prm = make_params(params)
    acc = ZERO
    for exps, c in _first_counts(p, q):
        acc = acc + weight(prm, exps) * c
    return acc


def _s_mask(p: PlanePoset, q: PlanePoset) -> np.ndarray:
    perms = _perms(p.n)
    hq = _permuted(q.h_matrix, perms)
    rq = _permuted(q.r_matrix, perms)
    bad1 = (p.h_matrix[None] & ~rq).any(axis=(1, 2))
    bad2 = (hq & ~p.r_matrix[None]).any(axis=(1, 2))
    return ~(bad1 | bad2)


def _s_prime_mask(p: PlanePoset, q: PlanePoset) -> np.ndarray:
    perms = _perms(p.n)
    n = p.n
    less = perms[:, :, None] < perms[:, None, :]
    lower = np.tril(np.ones((n, n), dtype=bool), -1)
    hq = _permuted(q.h_matrix, perms)
    bad1 = (p.h_matrix[None] & ~less).any(axis=(1, 2))
    bad2 = (hq & lower[None]).any(axis=(1, 2))
    return ~(bad1 | bad2)


def _as_words(perms: np.ndarray) -> list[Permutation]:
    return [tuple(int(v) + 1 for v in row) for row in perms]


def s_set(p: PlanePoset, q: PlanePoset) -> list[Permutation]:
    """Bijections sending h-relations to r-relations, and with every
    h-relation of the image coming from an r-relation."""
    _check_same_size(p, q)
    if p.n == 0:
        return [()]
    return _as_words(_perms(p.n)[_s_mask(p, q)])


def s_prime_set(p: PlanePoset, q: PlanePoset) -> list[Permutation]:
    """Bijections increasing on h-relations whose inverse is increasing on
    h-relations of the target."""
    _check_same_size(p, q)
    if p.n == 0:
        return [()]
    return _as_words(_perms(p.n)[_s_prime_mask(p, q)])


@lru_cache(maxsize=None)
def _second_counts(p: PlanePoset, q: PlanePoset) -> tuple[tuple[int, int], ...]:
    if p.n != q.n:
        return ()
    if p.n == 0:
        return ((0, 1),)
    lengths = _lengths(p.n)[_s_prime_mask(p, q)]
    vals, counts = np.unique(lengths, return_counts=True)
    return tuple((int(v), int(c)) for v, c in zip(vals, counts))


def pair_second(p: PlanePoset, q: PlanePoset, params: Sequence[Any] | None = None) -> QPoly:
    """Second deformed pairing: ``q1^{n(n-1)/2 - l} q4^l`` summed over the
    second family of bijections, ``l`` being the inversion number."""
    prm = make_params(params)
    top = p.n * (p.n - 1) // 2
    acc = ZERO
    for length, c in _second_counts(p, q):
        acc = acc + weight(prm, (top - length, 0, 0, length)) * c
    return acc


def pair_first_restricted(p: PlanePoset, q: PlanePoset) -> QPoly:
    """Sum over the first bijection family only, weighted ``q1^phi1 q3^phi3 q4^phi4``."""
    _check_same_size(p, q)
    if p.n == 0:
        return ONE
    perms = _perms(p.n)
    mask = _s_mask(p, q)
    acc = ZERO
    for exps, c in _exponent_counts(_phi_arrays(p, q, perms[mask])):
        acc = acc + QPoly.monomial((exps[0], 0, exps[2], exps[3], 0), c)
    return acc


_PAIRINGS: dict[Pairing, Callable[..., QPoly]] = {Pairing.FIRST: pair_first, Pairing.SECOND: pair_second}


def _pairing_fn(which: Pairing | str) -> Callable[..., QPoly]:
    return _PAIRINGS[Pairing(which)]


def pair(x: PlanePoset | PosetCombo, y: PlanePoset | PosetCombo, which: Pairing | str = Pairing.FIRST,
         params: Sequence[Any] | None = None) -> QPoly:
    """Bilinear extension of either pairing."""
    f = _pairing_fn(which)
    acc = ZERO
    for p, a in as_poset_combo(x).items():
        for q, b in as_poset_combo(y).items():
            if p.n == q.n:
                acc = acc + a * b * f(p, q, params)
    return acc


def pair_tensor(s: TensorCombo, t: TensorCombo, which: Pairing | str = Pairing.FIRST,
                params: Sequence[Any] | None = None) -> QPoly:
    """Factorwise pairing of two tensor combinations of the same arity."""
    f = _pairing_fn(which)
    acc = ZERO
    for ks, a in s.items():
        for kt, b in t.items():
            if len(ks) != len(kt) or any(u.n != v.n for u, v in zip(ks, kt)):
                continue
            term = a * b
            for u, v in zip(ks, kt):
                term = term * f(u, v, params)
                if term.is_zero():
                    break
            acc = acc + term
    return acc


def min_partner(p: PlanePoset) -> PlanePoset:
    """The first poset in lexicographic order admitting a bijection of the
    first family from ``p``."""
    for q in enumerate_posets(p.n):
        if p.n == 0 or _s_mask(p, q).any():
            return q
    raise AssertionError("unreachable: the transposed poset always qualifies")


@dataclass(frozen=True)
class GramMatrix:
    degree: int
    which: Pairing
    labels: tuple[PlanePoset, ...]
    entries: tuple[tuple[QPoly, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> QPoly:
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.labels)

    def specialize(self, assignment: Mapping[str, Any]) -> GramMatrix:
        if not assignment:
            return self
        rows = tuple(tuple(e.specialize(assignment) for e in row) for row in self.entries)
        return GramMatrix(self.degree, self.which, self.labels, rows)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def det(self) -> QPoly:
        return det_bareiss(self.entries)

    def header(self) -> list[str]:
        return [format_word(p.code) for p in self.labels]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + self.header())
        for p, row in zip(self.header(), self.entries):
            w.writerow([p] + [poly_canonical_string(e) for e in row])
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "pairing": self.which.value,
            "labels": self.header(),
            "entries": [[poly_canonical_string(e) for e in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_text(self) -> str:
        cells = [[poly_canonical_string(e) for e in row] for row in self.entries]
        head = self.header()
        width = max([len(c) for row in cells for c in row] + [len(h) for h in head] + [1])
        lines = [" " * width + " | " + " | ".join(h.rjust(width) for h in head)]
        for h, row in zip(head, cells):
            lines.append(h.rjust(width) + " | " + " | ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def gram(n: int, which: Pairing | str = Pairing.FIRST, params: Sequence[Any] | None = None) -> GramMatrix:
    """Gram matrix on the degree-``n`` posets in lexicographic order."""
    which = Pairing(which)
    f = _PAIRINGS[which]
    labels = tuple(enumerate_posets(n))
    rows: list[list[Any]] = [[None] * len(labels) for _ in labels]
    for i, p in enumerate(labels):
        for j in range(i, len(labels)):
            v = f(p, labels[j], params)
            rows[i][j] = v
            rows[j][i] = v
    return GramMatrix(n, which, labels, tuple(tuple(r) for r in rows))


def gram_det(n: int, which: Pairing | str = Pairing.FIRST, assignment: Mapping[str, Any] | None = None,
             params: Sequence[Any] | None = None, max_degree: int | None = None) -> QPoly:
    """Exact determinant of the Gram matrix, optionally after specializing
    some variables. Refuses degrees above the bound (default 4, capped by
    ``PHL_MAX_DEGREE``)."""
    bound = max_degree_cap(DEFAULT_MAX_DEGREE if max_degree is None else max_degree)
    if n > bound:
        raise DegreeBoundError(f"degree {n} exceeds the determinant bound {bound}")
    g = gram(n, which, params).specialize(assignment or {})
    return g.det()


def anti_diagonal(g: GramMatrix) -> list[QPoly]:
    n = g.size
    return [g.entries[i][n - 1 - i] for i in range(n)]


def is_anti_triangular(g: GramMatrix) -> bool:
    """Entries strictly above the anti-diagonal are zero."""
    n = g.size
    return all(g.entries[i][j].is_zero() for i in range(n) for j in range(n) if i + j < n - 1)


__all__ = [
    "Pairing", "PhiStats", "DegreeBoundError", "DEFAULT_MAX_DEGREE", "max_degree_cap", "phi_stats",
    "pair_first", "pair_second", "pair_first_restricted", "s_set", "s_prime_set", "pair", "pair_tensor",
    "min_partner", "GramMatrix", "gram", "gram_det", "anti_diagonal", "is_anti_triangular",
]
