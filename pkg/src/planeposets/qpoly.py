"""Sparse exact polynomials in ``q1, q2, q3, q4, t`` with integer coefficients.

A :class:`QPoly` is an immutable map from exponent vectors to nonzero
coefficients.  Coefficients are Python integers (unbounded); specializing a
variable at a non-integral rational produces :class:`fractions.Fraction`
coefficients, which are kept exact.

Monomials are packed into a single integer, ``_BITS`` bits per variable, so
that monomial multiplication is one integer addition.

>>> q1, q2 = QPoly.var("q1"), QPoly.var("q2")
>>> str((q1 + q2) ** 2)
'q1^2 + 2*q1*q2 + q2^2'
>>> parse_poly("q1^2+q1*q2+q2^2").eval((2, 3, 0, 0, 1))
19
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

VARIABLES = ("q1", "q2", "q3", "q4", "t")
NVARS = len(VARIABLES)

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK

Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction, "QPoly"]


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e > _MAX_EXP:
            raise OverflowError(f"exponent {e} exceeds {_MAX_EXP}")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(NVARS))


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _var_index(name: str) -> int:
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


class QPoly:
    """Immutable sparse polynomial over the integers (or rationals after
    specialization) in the five variables of :data:`VARIABLES`."""

    __slots__ = ("_terms", "_hash", "_maxexp")

    def __init__(self, terms: Mapping[tuple[int, ...], Coeff] | None = None):
        packed: dict[int, Coeff] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != NVARS:
                    raise ValueError(f"exponent vector must have length {NVARS}")
                if not isinstance(c, (int, Fraction)):
                    raise TypeError(f"coefficient must be int or Fraction, not {type(c).__name__}")
                if c:
                    k = _pack(exps)
                    s = packed.get(k, 0) + c
                    if s:
                        packed[k] = s
                    else:
                        del packed[k]
        self._set(packed)

    def _set(self, packed: dict[int, Coeff]) -> None:
        self._terms = {k: _normalize(c) for k, c in packed.items()}
        self._hash = None
        self._maxexp = None

    @classmethod
    def _from_packed(cls, packed: dict[int, Coeff]) -> QPoly:
        p = cls.__new__(cls)
        p._terms = packed
        p._hash = None
        p._maxexp = None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: Coeff) -> QPoly:
        c = _as_coeff(c)
        return cls._from_packed({0: c} if c else {})

    @classmethod
    def var(cls, name: str) -> QPoly:
        return cls._from_packed({1 << (_BITS * _var_index(name)): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Coeff = 1) -> QPoly:
        exps = tuple(exps)
        if len(exps) < NVARS:
            exps = exps + (0,) * (NVARS - len(exps))
        return cls({exps: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> QPoly:
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[tuple[int, ...], Coeff]:
        """Exponent vector -> coefficient, as a fresh dict."""
        return {_unpack(k): c for k, c in self._terms.items()}

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Coeff]]:
        return iter(self.terms().items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(_unpack(k)) for k in self._terms)

    def _max_exponent(self) -> int:
        if self._maxexp is None:
            m = 0
            for k in self._terms:
                for i in range(NVARS):
                    e = (k >> (_BITS * i)) & _MASK
                    if e > m:
                        m = e
            self._maxexp = m
        return self._maxexp

    def variables(self) -> set[str]:
        out = set()
        for k in self._terms:
            for i, e in enumerate(_unpack(k)):
                if e:
                    out.add(VARIABLES[i])
        return out

    # -- equality / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Scalar) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return QPoly._from_packed(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly._from_packed({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> QPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QPoly._from_packed({k: _normalize(c * other) for k, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if self._max_exponent() + other._max_exponent() > _MAX_EXP:
            raise OverflowError("exponent overflow in QPoly multiplication")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Coeff] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return QPoly._from_packed({k: _normalize(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and substitution --------------------------------------

    def eval(self, point: Iterable[Rational]) -> Coeff:
        """Exact value at ``point = (q1, q2, q3, q4, t)``."""
        point = tuple(point)
        if len(point) != NVARS:
            raise ValueError(f"point must have {NVARS} coordinates")
        point = tuple(p if isinstance(p, int) else Fraction(p) for p in point)
        total: Coeff = 0
        for k, c in self._terms.items():
            v = c
            for i in range(NVARS):
                e = (k >> (_BITS * i)) & _MASK
                if e:
                    v = v * point[i] ** e
            total += v
        return _normalize(total) if isinstance(total, Fraction) else total

    def substitute(self, mapping: Mapping[str, Scalar]) -> QPoly:
        """Ring morphism sending each named variable to a polynomial.

        Variables absent from ``mapping`` are left in place.
        """
        images = [None] * NVARS
        for name, value in mapping.items():
            images[_var_index(name)] = QPoly.coerce(value)
        if all(im is None for im in images):
            return self
        powers: list[dict[int, QPoly]] = [{} for _ in range(NVARS)]
        out: dict[int, Coeff] = {}
        for k, c in self._terms.items():
            keep = 0
            factor: QPoly | None = None
            for i in range(NVARS):
                e = (k >> (_BITS * i)) & _MASK
                if not e:
                    continue
                if images[i] is None:
                    keep |= e << (_BITS * i)
                    continue
                cache = powers[i]
                pw = cache.get(e)
                if pw is None:
                    pw = cache[e] = images[i] ** e
                factor = pw if factor is None else factor * pw
            if factor is None:
                contributions = ((keep, c),)
            else:
                if keep and factor._max_exponent() + (QPoly._from_packed({keep: 1})._max_exponent()) > _MAX_EXP:
                    raise OverflowError("exponent overflow in substitution")
                contributions = ((fk + keep, fc * c) for fk, fc in factor._terms.items())
            for nk, nc in contributions:
                s = out.get(nk, 0) + nc
                if s:
                    out[nk] = s
                else:
                    out.pop(nk, None)
        return QPoly._from_packed({k: _normalize(c) for k, c in out.items()})

    def scale_vars(self, mapping: Mapping[str, QPoly]) -> QPoly:
        """Substitute each named variable by a monomial with coefficient 1
        (e.g. ``q1 -> t*q1``).  Non-monomial images are rejected."""
        for name, image in mapping.items():
            image = QPoly.coerce(image)
            if not image.is_monomial() or next(iter(image._terms.values())) != 1:
                raise ValueError(f"image of {name} must be a monic monomial, got {image}")
        if not mapping:
            return self
        shifts = {}
        for name, image in mapping.items():
            shifts[_var_index(name)] = next(iter(QPoly.coerce(image)._terms))
        out: dict[int, Coeff] = {}
        for k, c in self._terms.items():
            nk = 0
            for i in range(NVARS):
                e = (k >> (_BITS * i)) & _MASK
                if not e:
                    continue
                if i in shifts:
                    nk += shifts[i] * e
                else:
                    nk += e << (_BITS * i)
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        result = QPoly._from_packed(out)
        # fields may have carried if an exponent exceeded the packed width
        for k in out:
            if any(e > _MAX_EXP for e in _unpack(k)):
                raise OverflowError("exponent overflow in scale_vars")
        return result

    def specialize(self, assignment: Mapping[str, Rational]) -> QPoly:
        """Substitute exact rational values for some variables."""
        return self.substitute({name: QPoly.const(_as_coeff(v)) for name, v in assignment.items()})

    # -- exact division (used only by fraction-free elimination) -----------

    def exact_div(self, other: QPoly) -> QPoly:
        """Quotient ``self / other`` when it is known to be exact.

        Raises :class:`ArithmeticError` when ``other`` does not divide.
        """
        other = QPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if len(other._terms) == 1:
            (kd, cd), = other._terms.items()
            out = {}
            for k, c in self._terms.items():
                if any(a < b for a, b in zip(_unpack(k), _unpack(kd))):
                    raise ArithmeticError("inexact polynomial division")
                out[k - kd] = _normalize(Fraction(c) / cd) if c % cd else c // cd
            return QPoly._from_packed(out)
        lead_key = max(other._terms, key=_order_key)
        lead_exps = _unpack(lead_key)
        lead_c = other._terms[lead_key]
        rem = dict(self._terms)
        quot: dict[int, Coeff] = {}
        while rem:
            k = max(rem, key=_order_key)
            exps = _unpack(k)
            if any(a < b for a, b in zip(exps, lead_exps)):
                raise ArithmeticError("inexact polynomial division")
            c = rem[k]
            qc = c // lead_c if isinstance(c, int) and isinstance(lead_c, int) and c % lead_c == 0 \
                else _normalize(Fraction(c) / lead_c)
            qk = k - lead_key
            quot[qk] = qc
            for dk, dc in other._terms.items():
                nk = dk + qk
                s = rem.get(nk, 0) - qc * dc
                if s:
                    rem[nk] = s
                else:
                    rem.pop(nk, None)
        return QPoly._from_packed(quot)

    # -- display -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coeff]]:
        """Terms in graded-lexicographic order, largest first."""
        keys = sorted(self._terms, key=_order_key, reverse=True)
        return [(_unpack(k), self._terms[k]) for k in keys]

    def __str__(self) -> str:
        return poly_canonical_string(self)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


def _order_key(k: int) -> tuple[int, tuple[int, ...]]:
    exps = _unpack(k)
    return (sum(exps), exps)


def _as_coeff(v: Rational) -> Coeff:
    if isinstance(v, int):
        return v
    return _normalize(Fraction(v))


ZERO = QPoly._from_packed({})
ONE = QPoly._from_packed({0: 1})

Q1, Q2, Q3, Q4, T = (QPoly.var(v) for v in VARIABLES)
GENERIC = (Q1, Q2, Q3, Q4)


# -- operation-style aliases ------------------------------------------------

def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_eval(a: QPoly, point: Iterable[Rational]) -> Coeff:
    return a.eval(point)


def poly_scale_vars(a: QPoly, mapping: Mapping[str, QPoly]) -> QPoly:
    return a.scale_vars(mapping)


def _monomial_string(exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_canonical_string(a: QPoly) -> str:
    """Deterministic text form, terms in descending graded-lex order."""
    if a.is_zero():
        return "0"
    out = []
    for i, (exps, c) in enumerate(a.sorted_terms()):
        mono = _monomial_string(exps)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parsing ---------------------------------------------------------------

class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(q[1-4]|t)|(\*\*|[-+*^/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError("unexpected character", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr := ['-'|'+'] term (('+'|'-') term)*
    # term := factor (('*'|'/') factor)*
    # factor := atom ('^' num)?
    # atom := num | var | '(' expr ')'
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str):
        raise PolyParseError(msg, self.text, self.peek()[2])

    def parse(self) -> QPoly:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self) -> QPoly:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        value = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                value = value + t if val == "+" else value - t
            else:
                return value

    def term(self) -> QPoly:
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                kind, num, _ = self.peek()
                if kind != "num":
                    self.fail("only integer divisors are supported")
                self.take()
                if int(num) == 0:
                    self.fail("division by zero")
                value = value * Fraction(1, int(num))
            else:
                return value

    def factor(self) -> QPoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, num, _ = self.peek()
            if kind != "num":
                self.fail("expected integer exponent")
            self.take()
            return base ** int(num)
        return base

    def atom(self) -> QPoly:
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return QPoly.const(int(val))
        if kind == "var":
            self.take()
            return QPoly.var(val)
        if kind == "op" and val == "(":
            self.take()
            value = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return value
        self.fail("expected a number, variable or '('")


def parse_poly(text: str) -> QPoly:
    """Parse the text grammar: integers, ``q1``..``q4``, ``t``, ``* ^ + -``
    and parentheses; whitespace is ignored."""
    return _Parser(text).parse()
