"""Truncated power series and the conjectural generating functions.

Series are kept in a formal variable ``t`` with rational-function
coefficients.  For the Atilde1 family ``t`` stands for q^(1/2) and the
coefficient of t^n is the invariant of the class (n, n); for the point quiver
``t`` stands for q and the even and odd dimensions give two separate series.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .invariants import DTsd, Jsd, chiJsd
from .quiver import SelfDualQuiver
from .ratfun import L, RationalFunction
from .stability import Stability
from .wallcross import binomial

__all__ = [
    "Series",
    "binomial_series",
    "atilde1_case",
    "atilde1_conjecture",
    "point_conjecture",
    "SeriesRow",
    "series_report",
    "CONJECTURE_STABILITY",
]

Coeff = RationalFunction


def _rf(c) -> RationalFunction:
    return c if isinstance(c, RationalFunction) else RationalFunction(c)


@dataclass(frozen=True)
class Series:
    """Coefficients c_0, ..., c_N of sum c_n t^n, truncated after t^N."""

    coeffs: tuple[Coeff, ...]

    @classmethod
    def one(cls, order: int) -> Series:
        return cls(tuple(_rf(int(n == 0)) for n in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = RationalFunction(0)
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return Series(tuple(out))

    def __getitem__(self, n: int) -> Coeff:
        return self.coeffs[n]


def binomial_series(c, k: int, e: Fraction | int, order: int) -> Series:
    """(1 + c t^k)^e truncated after t^order."""
    c = _rf(c)
    out = [RationalFunction(0)] * (order + 1)
    for n in range(order // k + 1):
        out[k * n] = c ** n * binomial(Fraction(e), n)
    return Series(tuple(out))


def _product(factors: Sequence[tuple[object, int, Fraction]], order: int) -> Series:
    s = Series.one(order)
    for c, k, e in factors:
        s = s * binomial_series(c, k, e, order)
    return s


H = Fraction(1, 2)

#: The conjectured closed forms in t = q^(1/2), one triple of factor lists per
#: case: (Jsd, chiJsd, DTsd), each factor (c, k, e) meaning (1 + c t^k)^e.
_ATILDE1_FORMS: dict[int, tuple[list, list, list]] = {
    1: ([(-L, 2, H), (-1, 1, -1), (-L, 1, -1)],
        [(1, 1, H), (-1, 1, -3 * H)],
        [(-1, 1, H), (1, 1, -3 * H)]),
    2: ([(1, 1, H), (-1, 1, -H)],
        [(1, 1, H), (-1, 1, -H)],
        [(1, 1, H), (-1, 1, -H)]),
    3: ([(-RationalFunction(1) / L, 2, H)],
        [(-1, 2, H)],
        [(-1, 2, H)]),
}

_KINDS = ("Jsd", "chiJsd", "DTsd")

#: Stability (-1, 1) in vertex order.  With the Euler-form orientation used
#: here this is the stability that makes the Atilde1 closed forms hold.
CONJECTURE_STABILITY = Stability.of([-1, 1])


def atilde1_case(q: SelfDualQuiver) -> int:
    """Closed-form case 1, 2 or 3, for two, one or no arrows whose sign
    equals the vertex sign."""
    if q.n_vertices != 2 or len(q.arrows) != 2 or q.sigma0 != (1, 0):
        raise ValueError(f"{q.name or 'quiver'} is not an Atilde1 self-dual quiver")
    u = q.u[0]
    agree = sum(1 for v in q.v if v == u)
    return {2: 1, 1: 2, 0: 3}[agree]


def atilde1_conjecture(q: SelfDualQuiver, kind: str, order: int) -> Series:
    forms = _ATILDE1_FORMS[atilde1_case(q)]
    return _product(forms[_KINDS.index(kind)], order)


def point_conjecture(kind: str, parity: int, order: int) -> Series:
    """Series in q for dimensions 2n + parity on the orthogonal point quiver.
    The symplectic point quiver in dimension 2n follows the parity-1 series."""
    if kind not in ("chiJsd", "DTsd"):
        raise ValueError("the point-quiver closed forms cover chiJsd and DTsd")
    e = Fraction(1, 4) if parity == 0 else Fraction(-1, 4)
    c = 1 if kind == "chiJsd" else -1
    return binomial_series(c, 1, e, order)


@dataclass(frozen=True)
class SeriesRow:
    kind: str
    exponent: Fraction
    cls: tuple[int, ...]
    computed: RationalFunction
    expected: RationalFunction

    @property
    def matches(self) -> bool:
        return self.computed == self.expected


_COMPUTE: dict[str, Callable] = {"Jsd": Jsd, "chiJsd": chiJsd, "DTsd": DTsd}


def series_report(q: SelfDualQuiver, max_n: int, tau: Stability | None = None,
                  kinds: Sequence[str] = _KINDS) -> list[SeriesRow]:
    """Computed vs conjectured coefficients.

    Atilde1 quivers: classes (n, n) for n <= max_n, exponent n/2.
    Point quiver: classes d <= max_n, exponent floor(d/2), split by parity.
    """
    rows: list[SeriesRow] = []
    if q.n_vertices == 1 and not q.arrows:
        symplectic = q.u[0] < 0
        for kind in kinds:
            if kind == "Jsd":
                continue
            for parity in ((1,) if symplectic else (0, 1)):
                order = (max_n - (0 if symplectic else parity)) // 2
                if order < 0:
                    continue
                expected = point_conjecture(kind, parity, order)
                for n in range(order + 1):
                    d = 2 * n if symplectic else 2 * n + parity
                    rows.append(SeriesRow(kind, Fraction(n), (d,),
                                          _rf(_COMPUTE[kind](q, (d,), tau)), expected[n]))
        return rows
    for kind in kinds:
        expected = atilde1_conjecture(q, kind, max_n)
        for n in range(max_n + 1):
            rows.append(SeriesRow(kind, Fraction(n, 2), (n, n),
                                  _rf(_COMPUTE[kind](q, (n, n), tau)), expected[n]))
    return rows
