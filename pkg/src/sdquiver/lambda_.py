"""The discrete Hall algebra and its twisted module over Q(L).

Elements are finite formal sums of basis symbols indexed by classes.  The
products only rescale by powers of L given by the Euler forms, so this layer
is an independent check on the Euler-form bookkeeping used elsewhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .euler import chi, chi_sd
from .quiver import DimVector, SelfDualQuiver, bar_add, dual_class
from .ratfun import RationalFunction, lefschetz_power

__all__ = [
    "LambdaElement",
    "LambdaSdElement",
    "basis",
    "basis_sd",
    "star",
    "diamond",
    "involution",
    "bracket",
    "heart",
]

Scalar = RationalFunction | Fraction | int


def _clean(terms: Iterable[tuple[DimVector, Scalar]]) -> dict[DimVector, RationalFunction]:
    out: dict[DimVector, RationalFunction] = {}
    for cls, c in terms:
        cls = tuple(cls)
        c = c if isinstance(c, RationalFunction) else RationalFunction(c)
        out[cls] = out[cls] + c if cls in out else c
    return {k: v for k, v in out.items() if not v.is_zero()}


class _Element:
    """Shared vector-space structure of both kinds of element."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: SelfDualQuiver,
                 terms: Mapping[DimVector, Scalar] | Iterable[tuple[DimVector, Scalar]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.quiver = quiver
        self.terms = _clean(items)

    def _same(self, other: _Element) -> None:
        if type(other) is not type(self) or other.quiver != self.quiver:
            raise TypeError("elements live in different spaces")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.quiver, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return type(self)(self.quiver, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        c = c if isinstance(c, RationalFunction) else RationalFunction(c)
        return type(self)(self.quiver, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (type(other) is type(self) and other.quiver == self.quiver
                and other.terms == self.terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        sym = self._symbol
        return " + ".join(f"({c})*{sym}{list(k)}" for k, c in sorted(self.terms.items()))


class LambdaElement(_Element):
    """Finite sum of symbols lambda_alpha with rational-function coefficients."""

    __slots__ = ()
    _symbol = "lambda"

    def __mul__(self, other: LambdaElement) -> LambdaElement:
        return star(self, other)


class LambdaSdElement(_Element):
    """Finite sum of symbols lambda^sd_theta over self-dual classes."""

    __slots__ = ()
    _symbol = "lambda_sd"


def basis(quiver: SelfDualQuiver, alpha: DimVector, coeff: Scalar = 1) -> LambdaElement:
    return LambdaElement(quiver, {tuple(alpha): coeff})


def basis_sd(quiver: SelfDualQuiver, theta: DimVector, coeff: Scalar = 1) -> LambdaSdElement:
    return LambdaSdElement(quiver, {tuple(theta): coeff})


def _plus(a: DimVector, b: DimVector) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def star(x: LambdaElement, y: LambdaElement) -> LambdaElement:
    """lambda_a * lambda_b = L^{-chi(a, b)} lambda_{a+b}, extended bilinearly."""
    x._same(y)
    q = x.quiver
    return LambdaElement(q, [
        (_plus(a, b), ca * cb * lefschetz_power(-chi(q, a, b)))
        for a, ca in x.terms.items() for b, cb in y.terms.items()
    ])


def diamond(x: LambdaElement, m: LambdaSdElement) -> LambdaSdElement:
    """lambda_a <> lambda^sd_theta = L^{-chi_sd(a, theta)} lambda^sd_{a + a^dual + theta}."""
    if x.quiver != m.quiver:
        raise TypeError("elements live on different quivers")
    q = x.quiver
    return LambdaSdElement(q, [
        (bar_add(q, a, t), ca * ct * lefschetz_power(-chi_sd(q, a, t)))
        for a, ca in x.terms.items() for t, ct in m.terms.items()
    ])


def involution(x: LambdaElement) -> LambdaElement:
    q = x.quiver
    return LambdaElement(q, {dual_class(q, a): c for a, c in x.terms.items()})


def bracket(x: LambdaElement, y: LambdaElement) -> LambdaElement:
    return star(x, y) - star(y, x)


def heart(x: LambdaElement, m: LambdaSdElement) -> LambdaSdElement:
    """Twisted action x <> m - x^dual <> m."""
    return diamond(x, m) - diamond(involution(x), m)
