"""Free quasi-symmetric functions with the two-parameter coproduct.

Permutations are one-line words (tuples). The product shuffles the first
word with the shifted second word; the coproduct cuts a word and
standardizes both halves, weighting the cut by how many inversions cross it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Sequence

from .combo import PermCombo, PermTensorCombo, PosetCombo, _accumulate, as_perm_combo, as_poset_combo
from .poset import Permutation, PlanePoset, check_perm, format_word, linear_extensions, parse_word
from .poset import standardize as _standardize
from .qpoly import ONE, Q1, Q4, ZERO, QPoly


def perm_length(sigma: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def standardize(word: Sequence[int]) -> Permutation:
    """The permutation with the same relative order as ``word``."""
    if len(set(word)) != len(word):
        raise ValueError(f"cannot standardize a word with repeated letters: {tuple(word)}")
    return _standardize(word)


def perm_inverse(sigma: Sequence[int]) -> Permutation:
    sigma = check_perm(sigma)
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def format_perm(sigma: Sequence[int]) -> str:
    return "s:" + format_word(sigma)


def parse_perm(text: str) -> Permutation:
    """Parse ``s:<word>`` (comma separated beyond nine letters); the prefix is optional."""
    text = text.strip()
    if text.startswith("s:"):
        text = text[2:]
    return parse_word(text)


def all_perms(n: int) -> list[Permutation]:
    return list(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def _shuffle_basis(sigma: Permutation, tau: Permutation) -> tuple[Permutation, ...]:
    k, l = len(sigma), len(tau)
    shifted = [t + k for t in tau]
    out = []
    for positions in itertools.combinations(range(k + l), k):
        word = [0] * (k + l)
        pos = set(positions)
        a = iter(sigma)
        b = iter(shifted)
        for i in range(k + l):
            word[i] = next(a) if i in pos else next(b)
        out.append(tuple(word))
    return tuple(out)


def shuffle_product(x: Permutation | PermCombo, y: Permutation | PermCombo) -> PermCombo:
    acc: dict = {}
    for s, a in as_perm_combo(x).items():
        for t, b in as_perm_combo(y).items():
            ab = a * b
            for w in _shuffle_basis(s, t):
                _accumulate(acc, w, ab)
    return PermCombo._wrap(acc)


@lru_cache(maxsize=None)
def cuts(sigma: Permutation) -> tuple[tuple[Permutation, Permutation, int, int], ...]:
    """``(left, right, crossing inversions, k(n-k))`` for every cut position ``k``."""
    n = len(sigma)
    total = perm_length(sigma)
    out = []
    for k in range(n + 1):
        left, right = standardize(sigma[:k]), standardize(sigma[k:])
        crossing = total - perm_length(left) - perm_length(right)
        out.append((left, right, crossing, k * (n - k)))
    return tuple(out)


def coproduct_q(x: Permutation | PermCombo, q1: Any = Q1, q4: Any = Q4) -> PermTensorCombo:
    """Cut-and-standardize coproduct with weight ``q1^{k(n-k)-c} q4^c``,
    ``c`` the number of inversions between the two halves."""
    q1, q4 = QPoly.coerce(q1), QPoly.coerce(q4)
    acc: dict = {}
    for s, a in as_perm_combo(x).items():
        for left, right, crossing, size in cuts(s):
            _accumulate(acc, (left, right), a * q1 ** (size - crossing) * q4**crossing)
    return PermTensorCombo._wrap(acc)


def pair_basis(sigma: Permutation, tau: Permutation, q1: Any = Q1, q4: Any = Q4) -> QPoly:
    if len(sigma) != len(tau) or perm_inverse(tau) != tuple(sigma):
        return ZERO
    n = len(sigma)
    length = perm_length(sigma)
    return QPoly.coerce(q1) ** (n * (n - 1) // 2 - length) * QPoly.coerce(q4) ** length


def pair_q(x: Permutation | PermCombo, y: Permutation | PermCombo, q1: Any = Q1, q4: Any = Q4) -> QPoly:
    """Pairing with ``<s, t> = q1^{n(n-1)/2 - l(s)} q4^{l(s)}`` when ``t = s^{-1}``."""
    y = as_perm_combo(y)
    acc = ZERO
    for s, a in as_perm_combo(x).items():
        b = y[perm_inverse(s)]
        if not b.is_zero():
            acc = acc + a * b * pair_basis(s, perm_inverse(s), q1, q4)
    return acc


def pair_tensor_q(s: PermTensorCombo, t: PermTensorCombo, q1: Any = Q1, q4: Any = Q4) -> QPoly:
    acc = ZERO
    for ks, a in s.items():
        for kt, b in t.items():
            if len(ks) != len(kt):
                continue
            term = a * b
            for u, v in zip(ks, kt):
                term = term * pair_basis(u, v, q1, q4)
                if term.is_zero():
                    break
            acc = acc + term
    return acc


def theta(x: PlanePoset | PosetCombo) -> PermCombo:
    """Sum of linear extensions, extended linearly."""
    acc: dict = {}
    for p, a in as_poset_combo(x).items():
        for w in linear_extensions(p):
            _accumulate(acc, w, a)
    return PermCombo._wrap(acc)


def theta_tensor(t) -> PermTensorCombo:
    acc: dict = {}
    for key, c in t.items():
        images = [theta(p) for p in key]
        for combo in itertools.product(*(im.items() for im in images)):
            coeff = c
            for _, v in combo:
                coeff = coeff * v
            _accumulate(acc, tuple(w for w, _ in combo), coeff)
    return PermTensorCombo._wrap(acc)


def pairing_det(n: int, q1: Any, q4: Any) -> Fraction | QPoly:
    """Determinant of the pairing matrix on ``S_n`` (lexicographic basis).

    The matrix has exactly one nonzero entry per row, at the inverse
    permutation, so the determinant is a signed product of those entries;
    the sign is that of inversion acting on ``S_n``, an involution whose
    two-cycles are the pairs ``{s, s^{-1}}`` with ``s`` not an involution.
    """
    perms = all_perms(n)
    swaps = sum(1 for s in perms if perm_inverse(s) != s) // 2
    det: Any = ONE
    for s in perms:
        det = det * pair_basis(s, perm_inverse(s), q1, q4)
    det = -det if swaps % 2 else det
    if det.is_constant():
        return Fraction(det.constant_term())
    return det


def pairing_matrix(n: int, q1: Any = Q1, q4: Any = Q4) -> list[list[QPoly]]:
    perms = all_perms(n)
    return [[pair_basis(s, t, q1, q4) for t in perms] for s in perms]


def perm_combo(terms: Iterable[tuple[Permutation, Any]]) -> PermCombo:
    return PermCombo((check_perm(w), c) for w, c in terms)


__all__ = [
    "perm_length", "standardize", "perm_inverse", "format_perm", "parse_perm", "all_perms", "shuffle_product", "cuts", "coproduct_q",
    "pair_basis", "pair_q", "pair_tensor_q", "theta", "theta_tensor", "pairing_det", "pairing_matrix",
    "perm_combo", "PermCombo", "PermTensorCombo",
]
