"""Motivic and numerical invariants of self-dual quivers.

The pipeline starts from the explicit motives of the moduli stacks for the
trivial stability function, wall-crosses to a stability function ``tau``,
takes the logarithm-type combinations ``J`` and ``Jsd``, and specializes at
``L = 1``.  Every sum is finite and exact.

All public functions take the quiver first, then the class, then ``tau``
(``None`` means the trivial stability function).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Literal

from .euler import chi, chi_sd_zero, multi_chi, multi_chi_sd
from .quiver import (
    DimVector,
    SelfDualQuiver,
    enumerate_ordered_decompositions,
    enumerate_sd_decompositions,
    is_self_dual_class,
    self_dual_class_problem,
)
from .ratfun import L, PoleError, RationalFunction, evaluate, lefschetz_power, pole_order_at_one
from .stability import Stability, trivial_stability
from .wallcross import binomial, coeff_S, coeff_S_sd, coeff_U, coeff_U_sd

__all__ = [
    "NoPoleViolation",
    "ZeroClassError",
    "motive_classifying",
    "I_trivial",
    "Isd_trivial",
    "I",
    "Isd",
    "J",
    "Jsd",
    "chiJ",
    "chiJsd",
    "DT",
    "DTsd",
    "I_from_J",
    "Isd_from_Jsd",
    "wallcross_I",
    "wallcross_Isd",
    "wallcross_J",
    "wallcross_Jsd",
    "InvariantRequest",
    "compute",
    "clear_caches",
]

ONE = RationalFunction(1)
_MINUS_HALF = Fraction(-1, 2)


class NoPoleViolation(ArithmeticError):
    """A J-type invariant has a pole at L = 1 of higher order than allowed."""


class ZeroClassError(ValueError):
    """The operation is undefined for the zero class."""


# ---------------------------------------------------------------------------
# Motives of classifying stacks
# ---------------------------------------------------------------------------


def _inverse_product(n: int, step: int) -> RationalFunction:
    """prod_{i<n} 1/(L^{step n} - L^{step i})."""
    den = ONE
    for i in range(n):
        den = den * (lefschetz_power(step * n) - lefschetz_power(step * i))
    return ONE / den


@lru_cache(maxsize=None)
def motive_classifying(group: Literal["GL", "O", "Sp"], n: int) -> RationalFunction:
    """Motive of the classifying stack of GL(n), O(n) or Sp(n)."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if group == "GL":
        return _inverse_product(n, 1)
    if group == "Sp":
        if n % 2:
            raise ValueError("Sp(n) needs n even")
        return lefschetz_power(-(n // 2)) * _inverse_product(n // 2, 2)
    if group == "O":
        half = n // 2
        sign = 1 if n % 2 == 0 else -1
        return lefschetz_power(sign * half) * _inverse_product(half, 2)
    raise ValueError(f"unknown group family {group!r}")


# ---------------------------------------------------------------------------
# Trivial stability
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def I_trivial(q: SelfDualQuiver, alpha: DimVector) -> RationalFunction:
    """Motive of the stack of all representations of dimension alpha."""
    alpha = tuple(alpha)
    exponent = sum(alpha[s] * alpha[t] for s, t in zip(q.src, q.tgt))
    value = lefschetz_power(exponent)
    for a in alpha:
        value = value * motive_classifying("GL", a)
    return value


@lru_cache(maxsize=None)
def Isd_trivial(q: SelfDualQuiver, theta: DimVector) -> RationalFunction:
    """Motive of the stack of all self-dual representations of class theta."""
    theta = tuple(theta)
    problem = self_dual_class_problem(q, theta)
    if problem:
        raise ValueError(problem)
    c = q.classification
    twice = 0
    for a in c.Q1_tri:
        twice += 2 * theta[q.src[a]] * theta[q.tgt[a]]
    for a in c.Q1_plus + c.Q1_minus:
        t = theta[q.tgt[a]]
        twice += t * (t + q.u[q.tgt[a]] * q.v[a])
    value = lefschetz_power(twice // 2)
    for i in c.Q0_tri:
        value = value * motive_classifying("GL", theta[i])
    for i in c.Q0_plus:
        value = value * motive_classifying("O", theta[i])
    for i in c.Q0_minus:
        value = value * motive_classifying("Sp", theta[i])
    return value


def _tau(q: SelfDualQuiver, tau: Stability | None) -> Stability:
    if tau is None:
        return trivial_stability(q)
    if len(tau.weights) != q.n_vertices:
        raise ValueError("stability function has the wrong number of weights")
    return tau


def _require_self_dual(q: SelfDualQuiver, tau: Stability) -> None:
    if not tau.is_self_dual(q):
        raise ValueError(f"stability {tau} is not self-dual on {q}")


def _require_class(q: SelfDualQuiver, theta: DimVector) -> None:
    problem = self_dual_class_problem(q, theta)
    if problem:
        raise ValueError(problem)


def _add(a: DimVector, b: DimVector) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: DimVector, b: DimVector) -> DimVector:
    return tuple(x - y for x, y in zip(a, b))


def _prefix_sums(parts: tuple[DimVector, ...]) -> DimVector:
    return tuple(map(sum, zip(*parts)))


# ---------------------------------------------------------------------------
# Stability tau
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _I(q: SelfDualQuiver, alpha: DimVector, tau: Stability) -> RationalFunction:
    if tau.is_trivial():
        return I_trivial(q, alpha)

    def accept(parts: tuple[DimVector, ...]) -> bool:
        prefix = _prefix_sums(parts)
        if prefix == alpha:
            return True
        return tau.compare(prefix, _sub(alpha, prefix)) > 0

    total = RationalFunction(0)
    for parts in enumerate_ordered_decompositions(alpha, accept):
        term = lefschetz_power(-multi_chi(q, parts))
        for beta in parts:
            term = term * I_trivial(q, beta)
        total = total + (term if len(parts) % 2 else -term)
    return total


def I(q: SelfDualQuiver, alpha: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Motive of the tau-semistable locus of class alpha."""
    alpha = tuple(alpha)
    if not any(alpha):
        return ONE
    return _I(q, alpha, _tau(q, tau))


@lru_cache(maxsize=None)
def _Isd(q: SelfDualQuiver, theta: DimVector, tau: Stability) -> RationalFunction:
    if tau.is_trivial():
        return Isd_trivial(q, theta)

    def accept(parts: tuple[DimVector, ...]) -> bool:
        return tau.sign(_prefix_sums(parts)) > 0

    total = RationalFunction(0)
    for parts, rho in enumerate_sd_decompositions(q, theta, accept):
        term = lefschetz_power(-multi_chi_sd(q, parts, rho)) * Isd_trivial(q, rho)
        for beta in parts:
            term = term * I_trivial(q, beta)
        total = total + (-term if len(parts) % 2 else term)
    return total


def Isd(q: SelfDualQuiver, theta: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Motive of the tau-semistable self-dual locus of class theta."""
    theta = tuple(theta)
    tau = _tau(q, tau)
    _require_self_dual(q, tau)
    _require_class(q, theta)
    if not any(theta):
        return ONE
    return _Isd(q, theta, tau)


@lru_cache(maxsize=None)
def _J(q: SelfDualQuiver, alpha: DimVector, tau: Stability) -> RationalFunction:
    def accept(parts: tuple[DimVector, ...]) -> bool:
        return tau.compare(parts[-1], alpha) == 0

    total = RationalFunction(0)
    for parts in enumerate_ordered_decompositions(alpha, accept):
        n = len(parts)
        term = lefschetz_power(-multi_chi(q, parts))
        for beta in parts:
            term = term * _I(q, beta, tau)
        total = total + term * Fraction((-1) ** (n - 1), n)
    if not total.is_zero() and pole_order_at_one((L - 1) * total) > 0:
        raise NoPoleViolation(f"(L-1)*J has a pole at L = 1 for class {alpha}: {total}")
    return total


def J(q: SelfDualQuiver, alpha: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Logarithm-type invariant of class alpha; (L-1)J has no pole at L = 1."""
    alpha = tuple(alpha)
    if not any(alpha):
        raise ZeroClassError("J is not defined for the zero class")
    return _J(q, alpha, _tau(q, tau))


@lru_cache(maxsize=None)
def _Jsd(q: SelfDualQuiver, theta: DimVector, tau: Stability) -> RationalFunction:
    def accept(parts: tuple[DimVector, ...]) -> bool:
        return tau.sign(parts[-1]) == 0

    total = RationalFunction(0)
    for parts, rho in enumerate_sd_decompositions(q, theta, accept):
        term = lefschetz_power(-multi_chi_sd(q, parts, rho))
        term = term * (_Isd(q, rho, tau) if any(rho) else ONE)
        for beta in parts:
            term = term * _I(q, beta, tau)
        total = total + term * binomial(_MINUS_HALF, len(parts))
    if not total.is_zero() and pole_order_at_one(total) > 0:
        raise NoPoleViolation(f"Jsd has a pole at L = 1 for class {theta}: {total}")
    return total


def Jsd(q: SelfDualQuiver, theta: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Self-dual logarithm-type invariant; it has no pole at L = 1."""
    theta = tuple(theta)
    tau = _tau(q, tau)
    _require_self_dual(q, tau)
    _require_class(q, theta)
    if not any(theta):
        return ONE
    return _Jsd(q, theta, tau)


def _at_one(f: RationalFunction, what: str) -> Fraction:
    try:
        return evaluate(f, 1)
    except PoleError as exc:
        raise NoPoleViolation(f"{what} cannot be specialized at L = 1: {f}") from exc


def chiJ(q: SelfDualQuiver, alpha: DimVector, tau: Stability | None = None) -> Fraction:
    return _at_one((L - 1) * J(q, alpha, tau), "(L-1)J")


def chiJsd(q: SelfDualQuiver, theta: DimVector, tau: Stability | None = None) -> Fraction:
    return _at_one(Jsd(q, theta, tau), "Jsd")


def DT(q: SelfDualQuiver, alpha: DimVector, tau: Stability | None = None) -> Fraction:
    alpha = tuple(alpha)
    sign = -1 if chi(q, alpha, alpha) % 2 == 0 else 1
    return sign * chiJ(q, alpha, tau)


def DTsd(q: SelfDualQuiver, theta: DimVector, tau: Stability | None = None) -> Fraction:
    theta = tuple(theta)
    sign = -1 if chi_sd_zero(q, theta) % 2 else 1
    return sign * chiJsd(q, theta, tau)


# ---------------------------------------------------------------------------
# Inverse relations
# ---------------------------------------------------------------------------


def I_from_J(q: SelfDualQuiver, alpha: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Rebuild I from J by the exponential-type sum with weights 1/n!."""
    alpha = tuple(alpha)
    tau = _tau(q, tau)
    total = RationalFunction(0)
    for parts in enumerate_ordered_decompositions(alpha, lambda p: tau.compare(p[-1], alpha) == 0):
        term = lefschetz_power(-multi_chi(q, parts))
        for beta in parts:
            term = term * _J(q, beta, tau)
        total = total + term * Fraction(1, factorial(len(parts)))
    return total


def Isd_from_Jsd(q: SelfDualQuiver, theta: DimVector, tau: Stability | None = None) -> RationalFunction:
    """Rebuild Isd from J and Jsd with weights 1/(2^n n!)."""
    theta = tuple(theta)
    tau = _tau(q, tau)
    _require_self_dual(q, tau)
    total = RationalFunction(0)
    for parts, rho in enumerate_sd_decompositions(q, theta, lambda p: tau.sign(p[-1]) == 0):
        n = len(parts)
        term = lefschetz_power(-multi_chi_sd(q, parts, rho)) * Jsd(q, rho, tau)
        for beta in parts:
            term = term * _J(q, beta, tau)
        total = total + term * Fraction(1, 2 ** n * factorial(n))
    return total


# ---------------------------------------------------------------------------
# General wall-crossing between two stability functions
# ---------------------------------------------------------------------------


def _wallcross_ordinary(q, alpha, tau, tau_tilde, coeff, invariant) -> RationalFunction:
    alpha = tuple(alpha)
    if not any(alpha):
        raise ZeroClassError("wall-crossing needs a nonzero class")
    tau, tau_tilde = _tau(q, tau), _tau(q, tau_tilde)
    total = RationalFunction(0)
    for parts in enumerate_ordered_decompositions(alpha):
        c = coeff(parts, tau, tau_tilde)
        if not c:
            continue
        term = lefschetz_power(-multi_chi(q, parts))
        for beta in parts:
            term = term * invariant(q, beta, tau)
        total = total + term * c
    return total


def _wallcross_sd(q, theta, tau, tau_tilde, coeff, ordinary, selfdual) -> RationalFunction:
    theta = tuple(theta)
    tau, tau_tilde = _tau(q, tau), _tau(q, tau_tilde)
    _require_self_dual(q, tau)
    _require_self_dual(q, tau_tilde)
    _require_class(q, theta)
    total = RationalFunction(0)
    for parts, rho in enumerate_sd_decompositions(q, theta):
        c = coeff(parts, tau, tau_tilde)
        if not c:
            continue
        term = lefschetz_power(-multi_chi_sd(q, parts, rho)) * selfdual(q, rho, tau)
        for beta in parts:
            term = term * ordinary(q, beta, tau)
        total = total + term * c
    return total


def wallcross_I(q, alpha, tau, tau_tilde) -> RationalFunction:
    """I at tau_tilde assembled from tau-side I values with coefficients S."""
    return _wallcross_ordinary(q, alpha, tau, tau_tilde, coeff_S, I)


def wallcross_J(q, alpha, tau, tau_tilde) -> RationalFunction:
    """J at tau_tilde assembled from tau-side J values with coefficients U."""
    return _wallcross_ordinary(q, alpha, tau, tau_tilde, coeff_U, J)


def wallcross_Isd(q, theta, tau, tau_tilde) -> RationalFunction:
    return _wallcross_sd(q, theta, tau, tau_tilde, coeff_S_sd, I, Isd)


def wallcross_Jsd(q, theta, tau, tau_tilde) -> RationalFunction:
    return _wallcross_sd(q, theta, tau, tau_tilde, coeff_U_sd, J, Jsd)


# ---------------------------------------------------------------------------
# Request object
# ---------------------------------------------------------------------------

Kind = Literal["I", "J", "chiJ", "DT"]

_ORDINARY = {"I": I, "J": J, "chiJ": chiJ, "DT": DT}
_SELFDUAL = {"I": Isd, "J": Jsd, "chiJ": chiJsd, "DT": DTsd}


@dataclass(frozen=True)
class InvariantRequest:
    quiver: SelfDualQuiver
    stability: Stability
    cls: DimVector
    kind: Kind
    selfdual: bool = False

    def validate(self) -> None:
        if self.kind not in _ORDINARY:
            raise ValueError(f"unknown invariant kind {self.kind!r}")
        if self.selfdual:
            _require_self_dual(self.quiver, self.stability)
            if not is_self_dual_class(self.quiver, self.cls):
                _require_class(self.quiver, self.cls)
        elif not any(self.cls):
            raise ZeroClassError("ordinary invariants need a nonzero class")


def compute(request: InvariantRequest) -> RationalFunction | Fraction:
    request.validate()
    table = _SELFDUAL if request.selfdual else _ORDINARY
    return table[request.kind](request.quiver, tuple(request.cls), request.stability)


def clear_caches() -> None:
    for fn in (motive_classifying, I_trivial, Isd_trivial, _I, _Isd, _J, _Jsd):
        fn.cache_clear()
    for fn in (coeff_S, coeff_S_sd, coeff_U, coeff_U_sd):
        fn.cache_clear()

