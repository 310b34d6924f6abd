"""Euler forms of a self-dual quiver and their combinatorial variants.

Everything here is integer valued.  Python integers are unbounded, so there
is no overflow to guard against.
"""
from __future__ import annotations

from typing import Sequence

from .quiver import DimVector, SelfDualQuiver, bar_add, dual_class

__all__ = [
    "chi",
    "chi_sd_zero",
    "chi_sd",
    "multi_chi",
    "multi_chi_sd",
    "chi_bar",
    "chi_bar_sd",
    "chi_tilde",
    "chi_tilde_sd",
]


def chi(q: SelfDualQuiver, alpha: DimVector, beta: DimVector) -> int:
    """sum_i alpha_i beta_i - sum_a alpha_{s(a)} beta_{t(a)}."""
    value = sum(a * b for a, b in zip(alpha, beta))
    for s, t in zip(q.src, q.tgt):
        value -= alpha[s] * beta[t]
    return value


def chi_sd_zero(q: SelfDualQuiver, alpha: DimVector) -> int:
    """Self-dual Euler form against the zero class.

    Fixed vertices contribute alpha_i(alpha_i - u_i)/2, swapped vertex pairs
    alpha_i alpha_{i^dual}.  A self-dual arrow a contributes
    -alpha_{s(a)}(alpha_{s(a)} + u v_a)/2 and a swapped arrow pair
    -alpha_{s(a)} alpha_{t(a)^dual}.  These arrow terms are the ones whose
    polarization is chi(alpha_1, alpha_2^dual), which is what makes the
    cocycle identity with ``chi`` hold.
    """
    c = q.classification
    sigma = q.sigma0
    twice = 0
    for i in c.Q0_plus + c.Q0_minus:
        twice += alpha[i] * (alpha[i] - q.u[i])
    for i in c.Q0_tri:
        twice += 2 * alpha[i] * alpha[sigma[i]]
    for a in c.Q1_plus + c.Q1_minus:
        s = q.src[a]
        twice -= alpha[s] * (alpha[s] + q.u[q.tgt[a]] * q.v[a])
    for a in c.Q1_tri:
        twice -= 2 * alpha[q.src[a]] * alpha[sigma[q.tgt[a]]]
    if twice % 2:
        raise ArithmeticError(f"self-dual Euler form of {alpha} is not an integer")
    return twice // 2


def chi_sd(q: SelfDualQuiver, alpha: DimVector, theta: DimVector) -> int:
    return chi(q, alpha, theta) + chi_sd_zero(q, alpha)


def multi_chi(q: SelfDualQuiver, parts: Sequence[DimVector]) -> int:
    """Sum of chi(a_i, a_j) over i < j."""
    total = 0
    prefix = (0,) * q.n_vertices
    for k, beta in enumerate(parts):
        if k:
            total += chi(q, prefix, beta)
        prefix = tuple(x + y for x, y in zip(prefix, beta))
    return total


def multi_chi_sd(q: SelfDualQuiver, parts: Sequence[DimVector], rho: DimVector) -> int:
    """Exponent for a_1 <> ... <> a_n <> rho in the module law."""
    total = 0
    n = len(parts)
    for i in range(n):
        for j in range(i + 1, n):
            total += chi(q, parts[i], parts[j]) + chi(q, parts[i], dual_class(q, parts[j]))
        total += chi_sd(q, parts[i], rho)
    return total


def chi_bar(q: SelfDualQuiver, alpha: DimVector, beta: DimVector) -> int:
    return chi(q, beta, alpha) - chi(q, alpha, beta)


def chi_bar_sd(q: SelfDualQuiver, alpha: DimVector, theta: DimVector) -> int:
    return chi_sd(q, dual_class(q, alpha), theta) - chi_sd(q, alpha, theta)


def chi_tilde(q: SelfDualQuiver, parts: Sequence[DimVector]) -> int:
    """Product over j >= 2 of sum_{i<j} chi_bar(a_i, a_j)."""
    if not parts:
        raise ValueError("chi_tilde needs at least one class")
    value = 1
    for j in range(1, len(parts)):
        value *= sum(chi_bar(q, parts[i], parts[j]) for i in range(j))
        if value == 0:
            return 0
    return value


def chi_tilde_sd(q: SelfDualQuiver, groups: Sequence[Sequence[DimVector]], rho: DimVector) -> int:
    """Scalar of the nested bracket-then-act expression on the class rho.

    Group i contributes chi_tilde of its classes times chi_bar_sd of its total
    against everything to its right (barred) plus rho.
    """
    value = 1
    for group in groups:
        value *= chi_tilde(q, group)
    right = tuple(rho)
    for group in reversed(groups):
        total = tuple(map(sum, zip(*group)))
        value *= chi_bar_sd(q, total, right)
        right = bar_add(q, total, right)
    return value
