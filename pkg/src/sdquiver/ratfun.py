"""Exact arithmetic in the rational function field Q(L).

Two polynomial types live here.  ``Polynomial`` is a small pure-Python dense
polynomial over ``Fraction``; it carries Bernoulli polynomials and serves as
an independent gcd oracle.  ``RationalFunction`` is the workhorse: a reduced
quotient of integer polynomials in ``L`` backed by FLINT's ``fmpz_poly``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

from flint import fmpz_poly

__all__ = [
    "Polynomial",
    "RationalFunction",
    "PoleError",
    "ParseError",
    "L",
    "lefschetz_power",
    "evaluate",
    "pole_order_at_one",
    "parse",
]

Number = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """The denominator vanishes at the requested point."""


class ParseError(ValueError):
    """Text that is not a rational function in L."""


# ---------------------------------------------------------------------------
# Pure-Python polynomials over Q
# ---------------------------------------------------------------------------


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Dense polynomial with ``Fraction`` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __add__(self, other: Polynomial | Number) -> Polynomial:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | Number) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Number) -> Polynomial:
        return _as_poly(other) - self

    def __mul__(self, other: Polynomial | Number) -> Polynomial:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - other.degree, 0)
        lead = other.leading()
        while len(rem) - 1 >= other.degree and any(rem):
            shift = len(rem) - 1 - other.degree
            factor = rem[-1] / lead
            quot[shift] = factor
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= factor * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, a: Number, b: Number) -> Polynomial:
        """Return p(a*x + b)."""
        lin = Polynomial((b, a))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def integer_primitive(self) -> tuple[int, ...]:
        """Integer coefficients of the primitive associate with positive leading term."""
        if self.is_zero():
            return ()
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return tuple(c // g for c in ints)

    def gcd(self, other: Polynomial) -> Polynomial:
        """Primitive gcd over Z, positive leading coefficient (primitive PRS)."""
        a = list(self.integer_primitive())
        b = list(other.integer_primitive())
        if not a:
            return Polynomial(b)
        if not b:
            return Polynomial(a)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _pseudo_remainder(a, b)
            a, b = b, _primitive(r)
        return Polynomial(_primitive(a))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _as_poly(value: Polynomial | Number) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.constant(value)


def _pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    rem = list(a)
    lead = b[-1]
    while len(rem) >= len(b):
        top = rem[-1]
        shift = len(rem) - len(b)
        rem = [c * lead for c in rem]
        for j, c in enumerate(b):
            rem[shift + j] -= top * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _primitive(coeffs: Sequence[int]) -> list[int]:
    coeffs = list(coeffs)
    if not coeffs:
        return []
    g = reduce(gcd, coeffs, 0)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


# ---------------------------------------------------------------------------
# Rational functions in L
# ---------------------------------------------------------------------------

_ONE = fmpz_poly([1])
_L_MINUS_ONE = fmpz_poly([-1, 1])


def _fmpz_content(p: fmpz_poly) -> int:
    return int(p.content())


class RationalFunction:
    """Reduced quotient num/den of integer polynomials in L.

    The stored pair is canonical: coprime over Q, joint integer content 1,
    and a positive leading coefficient in the denominator.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Number | Sequence[int] | fmpz_poly = 0,
                 den: Number | Sequence[int] | fmpz_poly = 1) -> None:
        n, d = _to_fmpz_pair(num, den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._num, self._den = _canonical(n, d)
        self._hash: int | None = None

    @classmethod
    def _raw(cls, num: fmpz_poly, den: fmpz_poly) -> RationalFunction:
        obj = cls.__new__(cls)
        obj._num, obj._den = _canonical(num, den)
        obj._hash = None
        return obj

    # --- accessors -------------------------------------------------------
    @property
    def numerator(self) -> tuple[int, ...]:
        """Integer coefficients of the numerator, lowest degree first."""
        return tuple(int(c) for c in self._num.coeffs())

    @property
    def denominator(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self._den.coeffs())

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._num.degree() <= 0 and self._den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(int(self._num[0]), int(self._den[0]))

    # --- arithmetic ------------------------------------------------------
    def __add__(self, other: RationalFunction | Number) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return RationalFunction._raw(self._num + other._num, self._den)
        return RationalFunction._raw(self._num * other._den + other._num * self._den,
                                     self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        obj = RationalFunction.__new__(RationalFunction)
        obj._num, obj._den, obj._hash = -self._num, self._den, None
        return obj

    def __sub__(self, other: RationalFunction | Number) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> RationalFunction:
        return _as_rf(other) - self

    def __mul__(self, other: RationalFunction | Number) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction._raw(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Number) -> RationalFunction:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._raw(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other: Number) -> RationalFunction:
        return _as_rf(other) / self

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction._raw(self._den ** (-k), self._num ** (-k))
        return RationalFunction._raw(self._num ** k, self._den ** k)

    # --- comparison ------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    # --- evaluation ------------------------------------------------------
    def __call__(self, q: Number) -> Fraction:
        return evaluate(self, q)

    def pole_order_at_one(self) -> int:
        return pole_order_at_one(self)

    # --- text ------------------------------------------------------------
    def __str__(self) -> str:
        num = _render_poly(self.numerator)
        if self._den.is_one():
            return num
        den = _render_poly(self.denominator)
        if _term_count(self.numerator) > 1:
            num = f"({num})"
        if self._den.degree() > 0:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _to_fmpz_pair(num, den) -> tuple[fmpz_poly, fmpz_poly]:
    n_poly, n_scale = _to_fmpz(num)
    d_poly, d_scale = _to_fmpz(den)
    # num = n_poly / n_scale, den = d_poly / d_scale
    return n_poly * d_scale, d_poly * n_scale


def _to_fmpz(value) -> tuple[fmpz_poly, int]:
    if isinstance(value, fmpz_poly):
        return value, 1
    if isinstance(value, bool):
        raise TypeError("booleans are not rational functions")
    if isinstance(value, int):
        return fmpz_poly([value]), 1
    if isinstance(value, Fraction):
        return fmpz_poly([value.numerator]), value.denominator
    if isinstance(value, Polynomial):
        fr = value.coeffs
        den = reduce(_lcm, (c.denominator for c in fr), 1)
        return fmpz_poly([int(c * den) for c in fr]), den
    return fmpz_poly([int(c) for c in value]), 1


def _canonical(num: fmpz_poly, den: fmpz_poly) -> tuple[fmpz_poly, fmpz_poly]:
    if num.is_zero():
        return fmpz_poly([0]), _ONE
    if den.degree() > 0 and num.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
    c = gcd(_fmpz_content(num), _fmpz_content(den))
    if den.leading_coefficient() < 0:
        c = -c
    if c != 1:
        num = fmpz_poly([int(x) // c for x in num.coeffs()])
        den = fmpz_poly([int(x) // c for x in den.coeffs()])
    return num, den


def _as_rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RationalFunction(value)
    return NotImplemented


L = RationalFunction([0, 1])
"""The Lefschetz class as an element of Q(L)."""


def lefschetz_power(k: int) -> RationalFunction:
    """L**k for any integer k."""
    if k >= 0:
        return RationalFunction._raw(fmpz_poly([0] * k + [1]), _ONE)
    return RationalFunction._raw(_ONE, fmpz_poly([0] * (-k) + [1]))


def _horner(coeffs: Sequence[int], q: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def evaluate(f: RationalFunction, q: Number) -> Fraction:
    """Value of f at L = q; raises PoleError where the denominator vanishes."""
    q = Fraction(q)
    den = _horner(f.denominator, q)
    if den == 0:
        raise PoleError(f"{f} has a pole at L = {q}")
    return _horner(f.numerator, q) / den


def _order_at_one(p: fmpz_poly) -> int:
    k = 0
    while p(1) == 0:
        p = p // _L_MINUS_ONE
        k += 1
    return k


def pole_order_at_one(f: RationalFunction) -> int:
    """Order of vanishing of the denominator at L = 1 minus that of the numerator."""
    if f.is_zero():
        raise ValueError("the zero function has no pole order")
    return _order_at_one(f._den) - _order_at_one(f._num)


# ---------------------------------------------------------------------------
# Rendering and parsing
# ---------------------------------------------------------------------------


def _term_count(coeffs: Sequence[int]) -> int:
    return sum(1 for c in coeffs if c)


def _render_poly(coeffs: Sequence[int]) -> str:
    if not any(coeffs):
        return "0"
    parts: list[str] = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = "L" if deg == 1 else f"L^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(L|𝕃)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:]!r}")
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append("L" if tok == "𝕃" else ("^" if tok == "**" else tok))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'}, found {tok!r}")
        self.pos += 1
        return tok

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input starting at {self.peek()!r}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalFunction:
        if self.peek() in ("+", "-"):
            op = self.take()
            value = self.unary()
            return -value if op == "-" else value
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() in ("+", "-"):
                sign = -1 if self.take() == "-" else 1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer, found {tok!r}")
            return base ** (sign * int(tok))
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok.isdigit():
            return RationalFunction(int(tok))
        if tok == "L":
            return L
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {tok!r}")


def parse(text: str) -> RationalFunction:
    """Parse the rendering grammar (integers, L, + - * / ^, parentheses)."""
    return _Parser(text).parse()


RationalFunction.parse = staticmethod(parse)  # type: ignore[attr-defined]
