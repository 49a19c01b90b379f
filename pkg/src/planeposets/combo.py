"""Finite linear combinations with :class:`QPoly` coefficients.

One generic class backs the four combination types; the subclasses only fix
what the basis keys are (plane posets, tuples of plane posets, permutations,
tuples of permutations), which matters for text and JSON output.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, TypeVar

from .poset import PlanePoset, format_word, parse_word
from .qpoly import ONE, ZERO, QPoly, parse_poly

C = TypeVar("C", bound="Combo")


def _accumulate(acc: dict, key: Hashable, coeff: QPoly) -> None:
    if coeff.is_zero():
        return
    old = acc.get(key)
    if old is None:
        acc[key] = coeff
    else:
        s = old + coeff
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


class Combo:
    """Immutable ``basis -> QPoly`` map with no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                _accumulate(acc, key, QPoly.coerce(c))
        self._terms = acc

    @classmethod
    def _wrap(cls: type[C], acc: dict) -> C:
        obj = cls.__new__(cls)
        obj._terms = acc
        return obj

    @classmethod
    def basis(cls: type[C], key: Hashable, coeff: Any = 1) -> C:
        return cls({key: coeff})

    @classmethod
    def zero(cls: type[C]) -> C:
        return cls._wrap({})

    def __getitem__(self, key: Hashable) -> QPoly:
        return self._terms.get(key, ZERO)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self) -> list[tuple[Hashable, QPoly]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Combo):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self: C, other: Combo) -> C:
        if not isinstance(other, Combo):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return self._wrap(acc)

    def __neg__(self: C) -> C:
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self: C, other: Combo) -> C:
        if not isinstance(other, Combo):
            return NotImplemented
        return self + (-other)

    def __mul__(self: C, scalar: Any) -> C:
        try:
            s = QPoly.coerce(scalar)
        except TypeError:
            return NotImplemented
        if s.is_zero():
            return self._wrap({})
        if s == ONE:
            return self
        out = {}
        for k, c in self._terms.items():
            v = c * s
            if not v.is_zero():
                out[k] = v
        return self._wrap(out)

    __rmul__ = __mul__

    def map_coefficients(self: C, f: Callable[[QPoly], QPoly]) -> C:
        acc: dict = {}
        for k, c in self._terms.items():
            _accumulate(acc, k, f(c))
        return self._wrap(acc)

    def map_basis(self, f: Callable[[Hashable], Hashable], cls: type[C] | None = None) -> Combo:
        acc: dict = {}
        for k, c in self._terms.items():
            _accumulate(acc, f(k), c)
        return (cls or type(self))._wrap(acc)

    def specialize(self: C, assignment: Mapping[str, Any]) -> C:
        if not assignment:
            return self
        return self.map_coefficients(lambda c: c.specialize(assignment))

    def substitute(self: C, mapping: Mapping[str, Any]) -> C:
        if not mapping:
            return self
        return self.map_coefficients(lambda c: c.substitute(mapping))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            parts.append(f"({c}) {self.format_key(k)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    # -- serialization -----------------------------------------------------

    @staticmethod
    def format_key(key: Hashable) -> Any:
        raise NotImplementedError

    @staticmethod
    def parse_key(value: Any) -> Hashable:
        raise NotImplementedError

    def to_json_obj(self) -> dict:
        return {"terms": [{"basis": self.format_key(k), "coeff": str(c)} for k, c in self.sorted_items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls: type[C], obj: Mapping) -> C:
        return cls((cls.parse_key(t["basis"]), parse_poly(t["coeff"])) for t in obj["terms"])

    @classmethod
    def from_json(cls: type[C], text: str) -> C:
        return cls.from_json_obj(json.loads(text))


def _sort_key(key: Hashable):
    if isinstance(key, PlanePoset):
        return (key.n, key.code)
    if isinstance(key, tuple) and key and isinstance(key[0], PlanePoset):
        return tuple((p.n, p.code) for p in key)
    if isinstance(key, tuple) and key and isinstance(key[0], tuple):
        return tuple((len(p), p) for p in key)
    if isinstance(key, tuple):
        return (len(key), key)
    return key


class PosetCombo(Combo):
    """Element of the span of plane posets."""

    __slots__ = ()

    @staticmethod
    def format_key(key: PlanePoset) -> str:
        return format_word(key.code)

    @staticmethod
    def parse_key(value: str) -> PlanePoset:
        return PlanePoset(parse_word(value))

    def degree_part(self, n: int) -> PosetCombo:
        return self._wrap({k: c for k, c in self._terms.items() if k.n == n})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c}) p:{format_word(k.code)}" for k, c in self.sorted_items())


class TensorCombo(Combo):
    """Element of a tensor power of the span of plane posets; keys are
    tuples of plane posets (pairs for the ordinary tensor square)."""

    __slots__ = ()

    @staticmethod
    def format_key(key: tuple[PlanePoset, ...]) -> list[str]:
        return [format_word(p.code) for p in key]

    @staticmethod
    def parse_key(value: list[str]) -> tuple[PlanePoset, ...]:
        return tuple(PlanePoset(parse_word(v)) for v in value)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"({c}) " + " ⊗ ".join("p:" + format_word(p.code) for p in k) for k, c in self.sorted_items()
        )


class PermCombo(Combo):
    """Element of the span of permutations."""

    __slots__ = ()

    @staticmethod
    def format_key(key: tuple[int, ...]) -> str:
        return format_word(key)

    @staticmethod
    def parse_key(value: str) -> tuple[int, ...]:
        return parse_word(value)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c}) s:{format_word(k)}" for k, c in self.sorted_items())


class PermTensorCombo(Combo):
    """Element of the tensor square of the span of permutations."""

    __slots__ = ()

    @staticmethod
    def format_key(key: tuple[tuple[int, ...], ...]) -> list[str]:
        return [format_word(s) for s in key]

    @staticmethod
    def parse_key(value: list[str]) -> tuple[tuple[int, ...], ...]:
        return tuple(parse_word(v) for v in value)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"({c}) " + " ⊗ ".join("s:" + format_word(s) for s in k) for k, c in self.sorted_items()
        )


def as_poset_combo(x: PlanePoset | PosetCombo) -> PosetCombo:
    if isinstance(x, PlanePoset):
        return PosetCombo._wrap({x: ONE})
    if isinstance(x, PosetCombo):
        return x
    raise TypeError(f"expected a plane poset or PosetCombo, got {type(x).__name__}")


def as_perm_combo(x: tuple[int, ...] | PermCombo) -> PermCombo:
    if isinstance(x, PermCombo):
        return x
    if isinstance(x, tuple):
        return PermCombo._wrap({x: ONE})
    raise TypeError(f"expected a permutation or PermCombo, got {type(x).__name__}")


def tensor(*factors: Combo, cls: type[C] | None = None) -> Combo:
    """Tensor product of combinations (flattening tuple keys)."""
    acc: dict = {(): ONE}
    for f in factors:
        new: dict = {}
        for k, c in acc.items():
            for fk, fc in f.items():
                piece = fk if isinstance(fk, tuple) and isinstance(f, (TensorCombo, PermTensorCombo)) else (fk,)
                _accumulate(new, k + piece, c * fc)
        acc = new
    if cls is None:
        cls = PermTensorCombo if factors and isinstance(factors[0], (PermCombo, PermTensorCombo)) else TensorCombo
    return cls._wrap(acc)


__all__ = [
    "Combo", "PosetCombo", "TensorCombo", "PermCombo", "PermTensorCombo",
    "as_poset_combo", "as_perm_combo", "tensor",
]
